"""Closed-form bounds on zero sums and kernel integrals, and their checks.

Constants are the rounded ones used in the original derivations, copied as
printed (0.12, 2.32, 18.432, ...). Nothing is re-derived or tightened.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from xipos.errors import DomainError
from xipos.kernels import GAMMA1, KernelParams
from xipos.quadrature_oracle import finite_kernel_integral, kernel_integral
from xipos.xi_core import sigma1_real_part
from xipos.zero_catalog import ZeroTable, counting_envelopes, kernel_sum

__all__ = [
    "BoundReport",
    "KernelParams",
    "GAMMA1",
    "KAPPA",
    "LOWER_THRESHOLD",
    "UPPER_THRESHOLD",
    "eps1",
    "eps2",
    "bound_A",
    "bound_B",
    "theorem1_bounds",
    "lemma3_F",
    "lemma3_F_derivative",
    "lemma4_arctan_envelope",
    "lemma4_margins",
    "lemma5_envelopes",
    "lemma6_envelopes",
    "counting_envelopes",
    "lemma8_error_bounds",
    "verify_lemma5",
    "verify_lemma6",
    "verify_lemma8",
    "verify_theorem1_upper",
    "verify_thresholds",
]

TWO_PI = 2.0 * math.pi
KAPPA = 0.135
LOWER_THRESHOLD = 1.984e114
UPPER_THRESHOLD = 14.635
A_FLOOR_AT_THRESHOLD = 49e-6
EPS1_CAP_AT_THRESHOLD = 1.65e-113
SUM_BOUND_CONSTANT = 2.411
SUM_BOUND_CONSTANT_ALT = 2.413


@dataclass(frozen=True)
class BoundReport:
    """One strict inequality lhs < rhs, evaluated."""

    name: str
    inputs: dict = field(default_factory=dict)
    lhs: float = 0.0
    rhs: float = 0.0

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    @property
    def satisfied(self) -> bool:
        return self.margin > 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": dict(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "satisfied": self.satisfied,
            "margin": self.margin,
        }


def _require(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


def eps1(t: float) -> float:
    _require(t > GAMMA1, f"eps1 needs t > gamma_1, got {t!r}")
    log_t = math.log(t / TWO_PI)
    return (
        (1.0 / (8.0 * math.pi * t) - 1.0 / (TWO_PI * (t - GAMMA1))) * log_t
        - 1.465 / t
        - GAMMA1 * math.log(GAMMA1 / TWO_PI) / (TWO_PI * t * t)
        - 3.811 / (0.25 + (GAMMA1 + t) ** 2)
    )


def _log_2t3_over_4pi3(t: float) -> float:
    # expanded so that t^3 never overflows near t ~ 1e114
    return math.log(2.0) + 3.0 * math.log(t) - math.log(4.0 * math.pi**3)


def eps2(t: float) -> float:
    _require(t > 0, f"eps2 needs t > 0, got {t!r}")
    return (
        0.637 / t
        + 3.811 / (1.0 + 4.0 * (t + GAMMA1) ** 2)
        + (math.log(t + 1.0) + 0.5 * _log_2t3_over_4pi3(t)) / (8.0 * math.pi * t)
    )


def bound_A(t: float) -> float:
    """0.12 log(t/2pi) - 2.32 log log t - 18.432 - eps1(t)."""
    return 0.12 * math.log(t / TWO_PI) - 2.32 * math.log(math.log(t)) - 18.432 - eps1(t)


def bound_B(t: float) -> float:
    """0.49 log(t/2pi) + 0.58 log log t + 4.603 + eps2(t)."""
    _require(t > 1, f"bound_B needs t > 1, got {t!r}")
    return 0.49 * math.log(t / TWO_PI) + 0.58 * math.log(math.log(t)) + 4.603 + eps2(t)


def theorem1_bounds(sigma: float, t: float, c: float = 1.0) -> tuple[float, float]:
    """(c (sigma - 1/2) A(t), c B(t) / (sigma - 1/2)).

    The lower value is a proven bound only for t > 1.984e114, the upper one
    for t > 14.635; both are returned wherever the formulas are defined.
    """
    _require(0.5 < sigma < 1.0, f"need 1/2 < sigma < 1, got {sigma!r}")
    _require(0.0 < c <= 1.0, f"need 0 < c <= 1, got {c!r}")
    d = sigma - 0.5
    return c * d * bound_A(t), c * bound_B(t) / d


def _lemma3_default(params: KernelParams | None) -> KernelParams:
    return params if params is not None else KernelParams(0.5, 1.0, GAMMA1)


def lemma3_F(t: float, params: KernelParams | None = None, kappa: float = KAPPA, rel_tol: float = 1e-10) -> float:
    """int_alpha^t log(u/2pi)/(a^2 + b^2 (u-t)^2) du - log(t/2pi) arctan(b(t-alpha)/a)/(ab) + kappa."""
    p = _lemma3_default(params).at(t)
    _require(t > p.alpha, f"need t > alpha = {p.alpha!r}, got {t!r}")
    _require(kappa > 0, "kappa must be positive")
    _require(p.a > 0, "need a > 0")
    integral = finite_kernel_integral(p, "minus", p.alpha, t, rel_tol).value
    return integral - math.log(t / TWO_PI) * math.atan(p.b * (t - p.alpha) / p.a) / (p.a * p.b) + kappa


def lemma3_F_derivative(t: float, params: KernelParams | None = None) -> float:
    """F'(t) in the closed form obtained from the Leibniz rule (kappa drops out)."""
    p = _lemma3_default(params)
    a, b, al = p.a, p.b, p.alpha
    _require(t > al, f"need t > alpha, got {t!r}")
    q = b * b * t * t + a * a
    first = 0.5 / q * math.log((t / al) ** 2 + (b * t * (t - al) / (a * al)) ** 2)
    second = math.log(t / al) / (a * a + b * b * (t - al) ** 2)
    third = (a / b) / t / q * math.atan(b * (t - al) / a)
    return first - second - third


def lemma4_arctan_envelope(t: float) -> tuple[float, float]:
    """pi/2 - 1/t < arctan t < pi/2 - 1/(2t) for t > 1."""
    _require(t > 1, f"arctan envelope needs t > 1, got {t!r}")
    return math.pi / 2 - 1.0 / t, math.pi / 2 - 0.5 / t


def lemma4_margins(t: float) -> tuple[float, float]:
    """(arctan t - lower, upper - arctan t) without cancellation near pi/2.

    With u = 1/t and arctan t = pi/2 - arctan u the gaps are u - arctan u
    and arctan u - u/2; the first is summed as a series for small u.
    """
    _require(t > 1, f"arctan envelope needs t > 1, got {t!r}")
    u = 1.0 / t
    if u < 0.1:
        u2 = u * u
        acc = 0.0
        for k in range(23, 3, -2):  # u^3/3 - u^5/5 + ... - u^23/23, Horner form
            acc = u2 * (1.0 / k - acc)
        lower_gap = u * u2 * (1.0 / 3.0 - acc)
    else:
        lower_gap = u - math.atan(u)
    return lower_gap, math.atan(u) - 0.5 * u


def lemma5_envelopes(params: KernelParams, kappa: float = KAPPA) -> tuple[float, float]:
    """Lower/upper bounds for int_alpha^oo log(u/2pi)/(a^2 + b^2 (u-t)^2) du."""
    a, b, al, t = params.a, params.b, params.alpha, params.t
    _require(b > a > 0, f"need b > a > 0, got a={a!r}, b={b!r}")
    _require(t > al + a / b, f"need t > alpha + a/b, got t={t!r}")
    log_t = math.log(t / TWO_PI)
    tilde_a = math.pi / (a * b) * log_t - log_t / (b * b * (t - al)) - kappa
    tilde_b = (math.pi / (a * b) + 0.5 / (b * b)) * math.log((t + 1.0) / TWO_PI) + math.log(t + 1.0) / (b * b * t)
    return tilde_a, tilde_b


def lemma6_envelopes(params: KernelParams) -> tuple[float, float]:
    """Lower/upper bounds for int_alpha^oo log(u/2pi)/(a^2 + b^2 (u+t)^2) du."""
    a, b, al, t = params.a, params.b, params.alpha, params.t
    _require(b > a >= 0 and b > 0, f"need b > a >= 0, got a={a!r}, b={b!r}")
    _require(t > al + a / b, f"need t > alpha + a/b, got t={t!r}")
    tilde_c = math.log(t / TWO_PI) / (4.0 * b * b * t) - al * math.log(al / TWO_PI) / (b * b * t * t)
    tilde_d = _log_2t3_over_4pi3(t) / (2.0 * b * b * t)
    return tilde_c, tilde_d


def lemma8_error_bounds(a: float, b: float, t: float, constant: float = SUM_BOUND_CONSTANT) -> tuple[float, float]:
    """(e1, e2) bounding |S1 - I_minus/2pi| and |S2 - I_plus/2pi|.

    ``constant`` multiplies a/b in e1. Two printed values exist, 2.411
    (default) and 2.413 (``SUM_BOUND_CONSTANT_ALT``); both are supported.
    """
    _require(a > 0 and b > 0, "need a, b > 0")
    _require(t > GAMMA1, f"need t > gamma_1, got {t!r}")
    e1 = (0.22 * math.log(t) + 0.58 * math.log(math.log(t)) + 4.58) / a**2
    e1 += 0.166 / (a * a * t) * (1.0 + constant * a / b)
    e2 = 3.811 / (a * a + b * b * (GAMMA1 + t) ** 2) + 0.045 / (a * b)
    return e1, e2


def verify_lemma5(params: KernelParams, kappa: float = KAPPA) -> list[BoundReport]:
    tilde_a, tilde_b = lemma5_envelopes(params, kappa)
    res = kernel_integral(params, "minus")
    slack = res.abs_error_estimate + res.tail_bound
    inputs = {"a": params.a, "b": params.b, "alpha": params.alpha, "t": params.t, "kappa": kappa}
    # shrink the oracle value toward each envelope by its own error allowance
    return [
        BoundReport("lemma5:lower", inputs, tilde_a, res.value - slack),
        BoundReport("lemma5:upper", inputs, res.value + slack, tilde_b),
    ]


def verify_lemma6(params: KernelParams) -> list[BoundReport]:
    tilde_c, tilde_d = lemma6_envelopes(params)
    res = kernel_integral(params, "plus")
    slack = res.abs_error_estimate + res.tail_bound
    inputs = {"a": params.a, "b": params.b, "alpha": params.alpha, "t": params.t}
    return [
        BoundReport("lemma6:lower", inputs, tilde_c, res.value - slack),
        BoundReport("lemma6:upper", inputs, res.value + slack, tilde_d),
    ]


def verify_lemma8(table: ZeroTable, a: float, b: float, t: float, constant: float = SUM_BOUND_CONSTANT) -> list[BoundReport]:
    """Check |S - I/2pi| < e using the truncated sums widened by their tails.

    The true S1 lies in [s1, s1 + tail]; containment is claimed only if both
    ends of that interval (and the quadrature slack) fit inside I/2pi +- e1.
    """
    e1, e2 = lemma8_error_bounds(a, b, t, constant)
    sums = kernel_sum(table, KernelParams(a, b, GAMMA1, t))
    inputs = {"a": a, "b": b, "t": t, "constant": constant}
    reports = []
    for name, sign, s, tail, e in (
        ("lemma8:S1", "minus", sums.s1, sums.s1_tail, e1),
        ("lemma8:S2", "plus", sums.s2, sums.s2_tail, e2),
    ):
        res = kernel_integral(KernelParams(a, b, GAMMA1, t), sign)
        centre = res.value / TWO_PI
        slack = (res.abs_error_estimate + res.tail_bound) / TWO_PI
        worst = max(abs(s - centre), abs(s + tail - centre)) + slack
        reports.append(BoundReport(name, inputs, worst, e))
    return reports


def verify_theorem1_upper(sigma: float, t: float, table: ZeroTable, c: float = 1.0) -> BoundReport:
    """Re sum over critical-line zeros (table + tail) < c B(t)/(sigma - 1/2).

    Below the table height every zero is on the critical line, so the
    proportion of counted zeros is c = 1 there.
    """
    _require(0.5 < sigma < 1.0, f"need 1/2 < sigma < 1, got {sigma!r}")
    _require(t > UPPER_THRESHOLD, f"need t > {UPPER_THRESHOLD}, got {t!r}")
    value, tail = sigma1_real_part(complex(sigma, t), table)
    _, upper = theorem1_bounds(sigma, t, c)
    return BoundReport("theorem1:upper", {"sigma": sigma, "t": t, "c": c}, value + tail, upper)


def verify_thresholds() -> list[BoundReport]:
    """The three threshold facts around t = 1.984e114."""
    t = LOWER_THRESHOLD
    a_main = bound_A(t) + eps1(t)  # the eps-free part
    return [
        BoundReport("thresholds:A_main>=49e-6", {"t": t}, A_FLOOR_AT_THRESHOLD, a_main),
        BoundReport("thresholds:|eps1|<=1.65e-113", {"t": t}, abs(eps1(t)), EPS1_CAP_AT_THRESHOLD),
        BoundReport("thresholds:A(t)>=49e-6", {"t": t}, A_FLOOR_AT_THRESHOLD, bound_A(t)),
        BoundReport("thresholds:A(1e100)<0", {"t": 1e100}, bound_A(1e100), 0.0),
    ]
