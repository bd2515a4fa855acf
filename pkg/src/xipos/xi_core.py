"""xi(s) and xi'/xi(s), directly and as a paired sum over tabulated zeros."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from xipos.errors import AccuracyDomainError, DomainError, HeightError, NearZeroError, PoleError, ProximityError
from xipos.special_functions import LOG_PI, ZERO_FLOOR, as_point, digamma, log_gamma, zeta, zeta_logderiv
from xipos.zero_catalog import ZeroTable, tail_start, zero_tail_bound

XI_T_MAX = 1.0e3
XI_SIGMA_RANGE = (-5.0, 6.0)
HEIGHT_FRACTION = 0.8
PROXIMITY_FLOOR = 1e-6
NEAR_ONE = 0.25


@dataclass(frozen=True)
class XiLogDerivResult:
    value: complex
    route: Literal["direct", "zero_sum"]
    tail_bound: float = 0.0

    def __post_init__(self):
        if self.route == "direct" and self.tail_bound != 0.0:
            raise ValueError("direct route carries no tail")
        if not (math.isfinite(self.tail_bound) and self.tail_bound >= 0):
            raise ValueError(f"tail bound must be finite and >= 0, got {self.tail_bound!r}")


def xi(s) -> complex:
    """xi(s) = s(s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s).

    Evaluated as (s-1) pi^(-s/2) Gamma(1+s/2) zeta(s), which has no removable
    singularity at s = 0; points near s = 1 go through xi(s) = xi(1-s). The
    exp(-pi|t|/4) decay of Gamma is kept in log space until the end.
    """
    s = as_point(s)
    lo, hi = XI_SIGMA_RANGE
    if not (lo <= s.real <= hi and abs(s.imag) <= XI_T_MAX):
        raise AccuracyDomainError(f"xi is validated for sigma in [{lo}, {hi}], |t| <= {XI_T_MAX:g}; got {s}")
    if s == 0 or s == 1:
        return 0.5 + 0j
    if abs(s - 1.0) < NEAR_ONE:
        s = 1.0 - s
    if s.imag == 0 and s.real <= 0 and s.real % 2 == 0:
        # Gamma(1 + s/2) pole cancels a trivial zero of zeta
        return xi(1.0 - s)
    log_factor = -0.5 * s * LOG_PI + log_gamma(1.0 + 0.5 * s)
    return (s - 1.0) * cmath.exp(log_factor) * zeta(s)


def _logderiv_regular(s: complex, floor: float) -> complex:
    # 1/s + psi(s/2)/2 = psi(1 + s/2)/2 removes the cancellation near s = 0
    return 0.5 * digamma(1.0 + 0.5 * s) + 1.0 / (s - 1.0) - 0.5 * LOG_PI + zeta_logderiv(s, floor)


def _near_cancelling_pole(s: complex) -> bool:
    k = round(-s.real / 2.0)
    return abs(s - 1.0) < NEAR_ONE or (k >= 1 and abs(s + 2.0 * k) < NEAR_ONE)


def xi_logderiv_direct(s, floor: float = ZERO_FLOOR) -> XiLogDerivResult:
    """1/s + 1/(s-1) - log(pi)/2 + psi(s/2)/2 + zeta'/zeta(s).

    xi'/xi is regular at s = 0 and 1, but the formula is not, so those two
    points are refused. Near s = 1, where 1/(s-1) cancels the pole of
    zeta'/zeta, and near the trivial zeros s = -2, -4, ..., where psi and
    zeta'/zeta have cancelling poles, the value is taken as -xi'/xi(1-s).
    """
    s = as_point(s)
    if s == 0 or s == 1:
        raise PoleError(f"xi'/xi is evaluated away from s = 0, 1; got {s}")
    if _near_cancelling_pole(s):
        value = -_logderiv_regular(1.0 - s, floor)
    else:
        value = _logderiv_regular(s, floor)
    return XiLogDerivResult(value, "direct")


def _check_zero_sum_point(s: complex, table: ZeroTable) -> float:
    height = tail_start(table)
    if abs(s.imag) > HEIGHT_FRACTION * height:
        raise HeightError(f"|t| = {abs(s.imag):g} exceeds {HEIGHT_FRACTION} x table height {height:g}")
    if table.count:
        x = s.real - 0.5
        gap = np.min(np.hypot(x, np.abs(abs(s.imag) - table.ordinates)))
        if gap < PROXIMITY_FLOOR:
            raise ProximityError(f"s = {s} lies within {gap:.2g} of a tabulated zero")
    return height


def xi_logderiv_zero_sum(s, table: ZeroTable) -> XiLogDerivResult:
    """Sum of 1/(s - rho) + 1/(s - conj rho) over rho = 1/2 + i gamma in the table.

    Each pair equals 2w/(w^2 + gamma^2) with w = s - 1/2; for gamma > H > |w|
    its modulus is below 2|w|/(gamma^2 - |w|^2) <= 2|w|/(1 - |w|^2/H^2) / gamma^2,
    which feeds the zero-counting tail bound.
    """
    s = as_point(s)
    height = _check_zero_sum_point(s, table)
    w = s - 0.5
    g = table.ordinates
    value = complex(np.sum(2.0 * w / (w * w + g * g))) if table.count else 0j
    r = abs(w)
    if r >= height:
        raise HeightError(f"|s - 1/2| = {r:g} reaches the table height {height:g}")
    decay = 2.0 * r / (1.0 - (r / height) ** 2)
    f_height = 2.0 * r / (height**2 - r**2)
    return XiLogDerivResult(value, "zero_sum", zero_tail_bound(height, table.count, decay, f_height))


def _check_strip(s: complex) -> float:
    d = s.real - 0.5
    if not 0.0 < d < 0.5:
        raise DomainError(f"need 1/2 < sigma < 1, got sigma = {s.real!r}")
    return d


def sigma1_real_part(s, table: ZeroTable) -> tuple[float, float]:
    """Re sum_rho 1/(s - rho) over the table, paired, plus a bound on the rest.

    Returns ``(value, tail_bound)``; the sum over all critical-line zeros lies
    in ``[value, value + tail_bound]``.
    """
    s = as_point(s)
    d = _check_strip(s)
    height = _check_zero_sum_point(s, table)
    t = s.imag
    g = table.ordinates
    value = float(np.sum(d / (d * d + (t - g) ** 2) + d / (d * d + (t + g) ** 2)))
    at = abs(t)
    # each pair is <= 2d/(gamma - |t|)^2 for gamma > |t|
    decay = 2.0 * d / (1.0 - at / height) ** 2
    f_height = 2.0 * d / (height - at) ** 2
    return value, zero_tail_bound(height, table.count, decay, f_height)


def sigma1_sandwich(s, table: ZeroTable) -> tuple[float, float]:
    """Termwise lower and upper companions of sigma1_real_part (truncated sums).

    lower = sum d/(1/4 + (t -+ gamma)^2), upper = sum d^-1/(1 + 4 (t -+ gamma)^2)
    with d = sigma - 1/2; both bracket each term because 0 < d^2 < 1/4.
    """
    s = as_point(s)
    d = _check_strip(s)
    _check_zero_sum_point(s, table)
    t = s.imag
    g = table.ordinates
    lower = float(np.sum(d / (0.25 + (t - g) ** 2) + d / (0.25 + (t + g) ** 2)))
    upper = float(np.sum(1.0 / (d * (1.0 + 4.0 * (t - g) ** 2)) + 1.0 / (d * (1.0 + 4.0 * (t + g) ** 2))))
    return lower, upper


def modulus_slope_probe(s, h: float = 1e-5) -> float:
    """Central difference of |xi(sigma + i t)| in sigma.

    The near-zero guard looks at |zeta(s)|: |xi| itself carries the
    exp(-pi|t|/4) decay of Gamma and is ~1e-14 already at t = 50.
    """
    s = as_point(s)
    if not 0.0 < h <= 1e-3:
        raise DomainError(f"step must be in (0, 1e-3], got {h!r}")
    if abs(zeta(s)) < ZERO_FLOOR:
        raise NearZeroError(f"xi vanishes (to {ZERO_FLOOR:g}) at {s}")
    return (abs(xi(s + h)) - abs(xi(s - h))) / (2.0 * h)
