"""``xipos`` command line: evaluate, ingest tables, verify bounds, map regions.

Every subcommand prints one JSON report to stdout. Exit codes: 0 when all
checks pass, 1 when some check fails, 2 on usage errors, 3 on data errors
(unreadable or invalid zero tables, points outside a validated domain).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from xipos import explicit_bounds as eb
from xipos import region_explorer as rx
from xipos.errors import XiposError
from xipos.kernels import GAMMA1, KernelParams
from xipos.xi_core import xi, xi_logderiv_direct, xi_logderiv_zero_sum
from xipos.zero_catalog import default_table_path, load_zero_table, validate_zero_table, verify_counting_bound

SCHEMA = "1"
EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    parameters: dict
    checks: list = field(default_factory=list)
    values: dict = field(default_factory=dict)
    wall_time_ms: int = 0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.satisfied)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "parameters": self.parameters,
            "checks": [c.as_dict() for c in self.checks],
            "passed": self.passed,
            "failed": self.failed,
            "wall_time_ms": self.wall_time_ms,
            "values": self.values,
        }


def _jsonable(obj):
    # floats keep Python's shortest round-trip repr; non-finite become null
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        return obj if math.isfinite(obj) else None
    if isinstance(obj, Path):
        return str(obj)
    return obj


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _table(args):
    return load_zero_table(args.zeros or default_table_path())


# --- eval -------------------------------------------------------------------


def cmd_eval(args, report: RunReport):
    s = complex(args.sigma, args.t)
    if args.function == "xi":
        v = xi(s)
        report.values.update(re=v.real, im=v.imag)
        return
    if args.route == "direct":
        res = xi_logderiv_direct(s)
    else:
        table = _table(args)
        report.parameters["zeros"] = table.source_label
        res = xi_logderiv_zero_sum(s, table)
    report.values.update(re=res.value.real, im=res.value.imag, route=res.route, tail_bound=res.tail_bound)


# --- ingest -----------------------------------------------------------------


def cmd_ingest(args, report: RunReport):
    table = _table(args)
    flagged = validate_zero_table(table, args.tolerance)
    report.parameters["zeros"] = table.source_label
    worst = max((r for _, r in flagged), default=0.0)
    report.checks.append(
        eb.BoundReport("ingest:worst_flagged<tolerance", {"tolerance": args.tolerance}, worst, args.tolerance)
    )
    report.values.update(
        count=table.count,
        height=table.height,
        flagged=[{"index": i, "ordinate": float(table.ordinates[i]), "residual": r} for i, r in flagged],
        worst_flagged_residual=worst,
    )


# --- verify -----------------------------------------------------------------


def _params(args) -> KernelParams:
    return KernelParams(args.a, args.b, args.alpha, args.t)


def verify_lemma2(args, report):
    table = _table(args)
    report.parameters["zeros"] = table.source_label
    for T in np.arange(args.t_min, args.t_max + 1e-9, args.step):
        r = verify_counting_bound(table, float(T))
        report.checks.append(
            eb.BoundReport("lemma2", {"T": r.T, "N": r.n_of_T}, abs(r.deviation), r.bound)
        )


def verify_lemma3(args, report):
    params = KernelParams(args.a, args.b, args.alpha)
    F = eb.lemma3_F(args.t, params, args.kappa)
    report.checks.append(eb.BoundReport("lemma3:F>0", {"t": args.t, "kappa": args.kappa}, 0.0, F))
    report.values["F"] = F


def verify_lemma4(args, report):
    ts = np.geomspace(args.t_min, args.t_max, args.samples)
    margins = np.array([eb.lemma4_margins(float(t)) for t in ts])
    for side, col in (("lower", 0), ("upper", 1)):
        k = int(np.argmin(margins[:, col]))
        # recorded as 0 < gap at the worst sample
        report.checks.append(
            eb.BoundReport(f"lemma4:{side}(worst)", {"t": float(ts[k])}, 0.0, float(margins[k, col]))
        )
    report.values["samples"] = len(ts)


def verify_lemma5(args, report):
    report.checks.extend(eb.verify_lemma5(_params(args), args.kappa))


def verify_lemma6(args, report):
    report.checks.extend(eb.verify_lemma6(_params(args)))


def verify_lemma8(args, report):
    table = _table(args)
    report.parameters["zeros"] = table.source_label
    report.checks.extend(eb.verify_lemma8(table, args.a, args.b, args.t, args.constant))


def verify_theorem1(args, report):
    table = _table(args)
    report.parameters["zeros"] = table.source_label
    for sigma in args.sigma:
        for t in args.t:
            report.checks.append(eb.verify_theorem1_upper(sigma, t, table, args.c))


def verify_thresholds(args, report):
    report.checks.extend(eb.verify_thresholds())


# --- region -----------------------------------------------------------------


def cmd_region(args, report: RunReport):
    if args.preset:
        zeros, srange, trange = rx.preset(args.preset)
        if args.scenario:
            zeros = rx.HypotheticalZeroSet(zeros.zeros, args.scenario)
    else:
        pairs = rx.parse_inline_zeros(args.zeros_inline)
        scenario = args.scenario or ("one" if len(pairs) == 1 else "finite")
        zeros = rx.HypotheticalZeroSet(pairs, scenario)
        srange, trange = (0.55, 0.95, 100), (4000.0, 6000.0, 100)
    if args.grid:
        g = args.grid
        if len(g) != 6 or g[4] != int(g[4]) or g[5] != int(g[5]):
            raise argparse.ArgumentTypeError("--grid takes s_lo,s_hi,t_lo,t_hi,ns,nt with integer ns, nt")
        srange, trange = (g[0], g[1], int(g[4])), (g[2], g[3], int(g[5]))
    grid = rx.compute_region(zeros, args.c, srange, trange, args.delta, args.synthetic_cap)
    rx.export_grid(grid, args.format, args.out)
    _, components = rx.unsatisfied_components(grid)
    report.parameters.update(
        zeros=[list(z) for z in zeros.zeros], scenario=zeros.scenario, sigma_range=list(srange), t_range=list(trange)
    )
    report.values.update(
        cells=int(grid.satisfied.size),
        satisfied_cells=int(grid.satisfied.sum()),
        unsatisfied_cells=int((~grid.satisfied).sum()),
        unsatisfied_components=int(components),
        out=str(args.out),
    )


# --- parser -----------------------------------------------------------------


def _add_zeros(p):
    p.add_argument("--zeros", type=Path, help="zero-ordinate table (default: $XIPOS_ZEROS or the shipped fixture)")


def _add_kernel(p, t_default):
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=GAMMA1)
    p.add_argument("--t", type=float, default=t_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xipos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate xi or xi'/xi at sigma + i t")
    p.add_argument("function", choices=["xi", "xilogderiv"])
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--route", choices=["direct", "zerosum"], default="direct")
    _add_zeros(p)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("ingest", help="load and validate a zero table")
    _add_zeros(p)
    p.add_argument("--tolerance", type=float, default=1e-4)
    p.set_defaults(handler=cmd_ingest)

    p = sub.add_parser("verify", help="check one of the explicit bounds")
    vsub = p.add_subparsers(dest="check", required=True)

    q = vsub.add_parser("lemma2", help="zero-counting error bound on a table")
    _add_zeros(q)
    q.add_argument("--t-min", type=float, default=math.e)
    q.add_argument("--t-max", type=float, default=100.0)
    q.add_argument("--step", type=float, default=0.5)
    q.set_defaults(handler=verify_lemma2)

    q = vsub.add_parser("lemma3", help="positivity of F(t)")
    _add_kernel(q, 23.0)
    q.add_argument("--kappa", type=float, default=eb.KAPPA)
    q.set_defaults(handler=verify_lemma3)

    q = vsub.add_parser("lemma4", help="arctan envelope on log-spaced samples")
    q.add_argument("--t-min", type=float, default=1.001)
    q.add_argument("--t-max", type=float, default=1e6)
    q.add_argument("--samples", type=int, default=1000)
    q.set_defaults(handler=verify_lemma4)

    q = vsub.add_parser("lemma5", help="minus-kernel integral envelopes")
    _add_kernel(q, 100.0)
    q.add_argument("--kappa", type=float, default=eb.KAPPA)
    q.set_defaults(handler=verify_lemma5)

    q = vsub.add_parser("lemma6", help="plus-kernel integral envelopes")
    _add_kernel(q, 100.0)
    q.set_defaults(handler=verify_lemma6)

    q = vsub.add_parser("lemma8", help="zero sums vs kernel integrals")
    _add_zeros(q)
    q.add_argument("--a", type=float, default=0.5)
    q.add_argument("--b", type=float, default=1.0)
    q.add_argument("--t", type=float, default=50.0)
    q.add_argument("--constant", type=float, default=eb.SUM_BOUND_CONSTANT)
    q.set_defaults(handler=verify_lemma8)

    q = vsub.add_parser("theorem1-upper", help="upper bound on the critical-line zero sum")
    _add_zeros(q)
    q.add_argument("--sigma", type=_floats, default=[0.55, 0.6, 0.75, 0.9, 0.99])
    q.add_argument("--t", type=_floats, default=[20.0, 50.0, 100.0, 150.0])
    q.add_argument("--c", type=float, default=1.0)
    q.set_defaults(handler=verify_theorem1)

    q = vsub.add_parser("thresholds", help="A and eps1 at t = 1.984e114, sign of A at 1e100")
    q.set_defaults(handler=verify_thresholds)

    p = sub.add_parser("region", help="positivity region under hypothetical off-line zeros")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=sorted(rx.PRESETS))
    src.add_argument("--zeros-inline", metavar="'b1,g1;b2,g2'")
    p.add_argument("--scenario", choices=["one", "finite", "infinite"])
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--grid", type=_floats, metavar="s_lo,s_hi,t_lo,t_hi,ns,nt")
    p.add_argument("--delta", type=float, default=0.0, help="safety margin added to the right side")
    p.add_argument("--synthetic-cap", type=int, default=rx.SYNTHETIC_CAP)
    p.add_argument("--format", choices=["csv", "svg"], required=True)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=cmd_region)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    command = args.command + (f" {args.check}" if args.command == "verify" else "")
    params = {k: v for k, v in vars(args).items() if k not in ("handler", "command", "check")}
    report = RunReport(command, _jsonable(params))
    start = time.perf_counter()
    try:
        args.handler(args, report)
    except argparse.ArgumentTypeError as exc:
        print(f"xipos: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (XiposError, OSError) as exc:
        print(f"xipos: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA
    report.wall_time_ms = int(round((time.perf_counter() - start) * 1000))
    print(json.dumps(_jsonable(report.as_dict()), indent=2))
    return EXIT_OK if report.failed == 0 else EXIT_CHECK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
