from xipos.cli import main

main()
