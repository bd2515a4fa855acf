"""Write the first N critical-line zero ordinates to a text fixture.

Uses mpmath's zero locator at 30 digits; the result is re-checked by
``xipos.zero_catalog.validate_zero_table`` in the test suite.

    python scripts/generate_zero_fixture.py 100 fixtures/zeros100.txt
"""
import argparse

import mpmath


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("count", type=int)
    parser.add_argument("out")
    args = parser.parse_args()

    mpmath.mp.dps = 30
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# first {args.count} ordinates of zeta zeros on the critical line (mpmath.zetazero, 30 digits)\n")
        for n in range(1, args.count + 1):
            gamma = mpmath.zetazero(n).imag
            fh.write(mpmath.nstr(gamma, 16, strip_zeros=False) + "\n")


if __name__ == "__main__":
    main()
