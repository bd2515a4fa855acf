"""Complex log-gamma, digamma, zeta and zeta'/zeta in binary64.

Everything here works on Python ``complex`` values. Real inputs are
accepted and promoted. Accuracy targets (absolute 1e-10) hold for
``|Im z| <= 1e3``; up to ``|Im z| = 1e4`` the values are still usable but
the phase of ``n**-s`` carries ~1e-11 rounding per term, see README.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from xipos.errors import AccuracyDomainError, DomainError, NearZeroError, PoleError

LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2.0 * math.pi)
HALF_LOG_2PI = 0.5 * LOG_2PI

# B_2 .. B_20
BERNOULLI = [
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
]

# Stirling: B_2k / (2k (2k-1)); digamma: B_2k / (2k); Euler-Maclaurin: B_2k / (2k)!
_STIRLING = [float(b / ((2 * k) * (2 * k - 1))) for k, b in enumerate(BERNOULLI, 1)]
_DIGAMMA = [float(b / (2 * k)) for k, b in enumerate(BERNOULLI, 1)]
_EM = [float(b / math.factorial(2 * k)) for k, b in enumerate(BERNOULLI, 1)]

ASYMPTOTIC_SHIFT = 10.0
ZETA_T_MAX = 1.0e4
ZERO_FLOOR = 1e-12


def as_point(z) -> complex:
    """Promote ``z`` to complex and reject NaN/infinite coordinates."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex point {z!r}")
    return z


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def log_gamma(z) -> complex:
    """log Gamma(z) on the branch continuous from the positive real axis.

    Shifts the argument to Re z >= 10 with log Gamma(z) = log Gamma(z+n) -
    sum log(z+k) and then applies the Stirling series through B_20. The
    recurrence (with principal logs) keeps the same branch convention as
    ``scipy.special.loggamma`` and ``mpmath.loggamma``.
    """
    z = as_point(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma has a pole at {z.real:g}")
    shift = 0j
    while z.real < ASYMPTOTIC_SHIFT:
        shift += cmath.log(z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0j
    power = inv
    for c in _STIRLING:
        series += c * power
        power *= inv2
    return (z - 0.5) * cmath.log(z) - z + HALF_LOG_2PI + series - shift


def digamma(z) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z) via recurrence plus the asymptotic series."""
    z = as_point(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma has a pole at {z.real:g}")
    shift = 0j
    while z.real < ASYMPTOTIC_SHIFT:
        shift += 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0j
    power = inv2
    for c in _DIGAMMA:
        series += c * power
        power *= inv2
    return cmath.log(z) - 0.5 / z - series - shift


def _reduce_even(s: complex) -> tuple[int, complex]:
    """s = 2k + r with |Re r| <= 1, so that sin and tan of pi s/2 keep relative accuracy near even integers."""
    k = round(s.real / 2.0)
    return k, complex(s.real - 2.0 * k, s.imag)


def _log_sin_half_pi(s: complex) -> complex:
    # log sin(pi s / 2) without overflow for large |Im s|; branch is irrelevant
    # because callers exponentiate.
    k, r = _reduce_even(s)
    w = 0.5 * math.pi * r
    shift = 1j * math.pi * (k % 2)  # sin(pi k + w) = (-1)^k sin w
    if abs(w.imag) < 20.0:
        return cmath.log(cmath.sin(w)) + shift
    if w.imag < 0:
        return _log_sin_half_pi(s.conjugate()).conjugate()
    # sin w = exp(-i w) (exp(2 i w) - 1) / (2 i), |exp(2 i w)| <= 1
    return -1j * w + cmath.log((cmath.exp(2j * w) - 1.0) / 2j) + shift


def _euler_maclaurin(s: complex, with_derivative: bool):
    """zeta(s) (and zeta'(s)) by Euler-Maclaurin with N = max(20, ceil(1.3|t|))."""
    big_n = max(20, math.ceil(1.3 * abs(s.imag)))
    n = np.arange(1, big_n, dtype=float)
    log_n = np.log(n)
    powers = np.exp(-s * log_n)
    log_big = math.log(big_n)
    n_pow = cmath.exp(-s * log_big)  # N^-s
    n_pow_1 = big_n * n_pow  # N^(1-s)

    value = powers.sum() + n_pow_1 / (s - 1.0) + 0.5 * n_pow
    deriv = 0j
    if with_derivative:
        deriv = (
            -(log_n * powers).sum()
            - log_big * n_pow_1 / (s - 1.0)
            - n_pow_1 / (s - 1.0) ** 2
            - 0.5 * log_big * n_pow
        )

    # correction k: B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
    poly = s
    dpoly = 1.0 + 0j
    tail_pow = n_pow / big_n  # N^(-s-1)
    for k, c in enumerate(_EM, 1):
        if k > 1:
            for j in (2 * k - 3, 2 * k - 2):
                dpoly = dpoly * (s + j) + poly
                poly = poly * (s + j)
            tail_pow /= big_n * big_n
        value += c * poly * tail_pow
        if with_derivative:
            deriv += c * (dpoly - log_big * poly) * tail_pow
    return value, deriv


def _check_zeta_domain(s: complex) -> None:
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if abs(s.imag) > ZETA_T_MAX:
        raise AccuracyDomainError(f"|Im s| = {abs(s.imag):g} exceeds {ZETA_T_MAX:g}")


def zeta(s) -> complex:
    """Riemann zeta(s).

    Euler-Maclaurin for Re s >= -1, the functional equation
    zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) to the left of it.
    """
    s = as_point(s)
    _check_zeta_domain(s)
    if s.real < -1.0:
        one_minus = 1.0 - s
        log_factor = s * math.log(2.0) + (s - 1.0) * LOG_PI + _log_sin_half_pi(s) + log_gamma(one_minus)
        return cmath.exp(log_factor) * zeta(one_minus)
    return _euler_maclaurin(s, with_derivative=False)[0]


def zeta_logderiv(s, floor: float = ZERO_FLOOR) -> complex:
    """zeta'(s)/zeta(s) with zeta' from termwise-differentiated Euler-Maclaurin.

    Raises NearZeroError when |zeta(s)| < floor.
    """
    s = as_point(s)
    _check_zeta_domain(s)
    if s.real < -1.0:
        if abs(zeta(s)) < floor:
            raise NearZeroError(f"|zeta({s})| below floor {floor:g}")
        one_minus = 1.0 - s
        cot = 1.0 / cmath.tan(0.5 * math.pi * _reduce_even(s)[1])
        return LOG_2PI + 0.5 * math.pi * cot - digamma(one_minus) - zeta_logderiv(one_minus, floor)
    value, deriv = _euler_maclaurin(s, with_derivative=True)
    if abs(value) < floor:
        raise NearZeroError(f"|zeta({s})| = {abs(value):.3g} below floor {floor:g}")
    return deriv / value
