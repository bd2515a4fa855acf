"""Brute-force integration of log(u/2pi)/(a^2 + b^2 (u -+ t)^2) over [alpha, oo).

Two independent schemes live here: adaptive Simpson (the oracle proper) and a
composite fixed-order Gauss-Legendre rule used to cross-check it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from xipos.errors import ConvergenceError, DomainError
from xipos.kernels import KernelParams, Sign, shift

TWO_PI = 2.0 * math.pi
LOG_2PI = math.log(TWO_PI)
MAX_DEPTH = 40
ABS_FLOOR = 1e-14
REL_TOL = 1e-8


@dataclass(frozen=True)
class IntegralResult:
    """Integral value, quadrature error estimate, upper limit used, tail bound.

    For an infinite upper limit ``value`` already includes the closed-form
    integral of the large-u asymptote beyond ``cutoff``; ``tail_bound`` bounds
    how far that asymptote is from the true tail.
    """

    value: float
    abs_error_estimate: float
    cutoff: float
    tail_bound: float


def _integrand(params: KernelParams, sign: Sign):
    a2, b2, c = params.a**2, params.b**2, shift(params.t, sign)

    def f(u):
        return (math.log(u) - LOG_2PI) / (a2 + b2 * (u - c) ** 2)

    return f


def _breakpoints(params: KernelParams, sign: Sign, lo: float, hi: float) -> list[float]:
    """Forced subdivision points: the peak and its half width, then a geometric ladder."""
    points = {lo, hi}
    width = params.a / params.b if params.a > 0 else 1.0
    if sign == "minus":
        t = params.t
        points.update((t - width, t, t + width))
        step = 2.0 * width
        while t + step < hi:
            points.add(t + step)
            step *= 2.0
        step = 2.0 * width
        while t - step > lo:
            points.add(t - step)
            step *= 2.0
    else:
        x = max(lo, width) * 2.0
        while x < hi:
            points.add(x)
            x *= 2.0
    return sorted(p for p in points if lo <= p <= hi)


def _simpson(a, fa, fm, b, fb):
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def adaptive_simpson(f, a: float, b: float, tol: float, max_depth: int = MAX_DEPTH) -> tuple[float, float]:
    """Adaptive Simpson with Richardson extrapolation.

    Returns ``(value, error_estimate)``. Raises ConvergenceError if an
    interval reaches ``max_depth`` without meeting its share of ``tol``.
    """
    if a == b:
        return 0.0, 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(a, fa, fm, b, fb)
    total = 0.0
    err = 0.0
    stack = [(a, fa, m, fm, b, fb, whole, tol, 0)]
    while stack:
        a, fa, m, fm, b, fb, whole, tol, depth = stack.pop()
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = _simpson(a, fa, flm, m, fm)
        right = _simpson(m, fm, frm, b, fb)
        delta = left + right - whole
        if abs(delta) <= 15.0 * max(tol, ABS_FLOOR):
            total += left + right + delta / 15.0
            err += abs(delta) / 15.0
            continue
        if depth >= max_depth:
            raise ConvergenceError(f"no convergence on [{a!r}, {b!r}] after {max_depth} bisections")
        half = 0.5 * tol
        stack.append((m, fm, rm, frm, b, fb, right, half, depth + 1))
        stack.append((a, fa, lm, flm, m, fm, left, half, depth + 1))
    return total, err


def _panel_integral(f, points: list[float], rel_tol: float) -> tuple[float, float]:
    # coarse pass sets the absolute budget, which is then split by panel
    coarse = sum(
        _simpson(p, f(p), f(0.5 * (p + q)), q, f(q)) for p, q in zip(points, points[1:])
    )
    budget = 0.25 * rel_tol * abs(coarse)
    per_panel = budget / max(1, len(points) - 1)
    value = err = 0.0
    for p, q in zip(points, points[1:]):
        v, e = adaptive_simpson(f, p, q, per_panel)
        value += v
        err += e
    return value, err


def _check(params: KernelParams, sign: Sign):
    shift(params.t, sign)
    if sign == "minus" and params.a <= 0:
        raise DomainError("the minus kernel needs a > 0 (its peak u = t can be interior)")


def asymptote_tail(params: KernelParams, sign: Sign, cutoff: float) -> tuple[float, float]:
    """int_cutoff^oo log(u/2pi)/(b^2 (u - c)^2) du in closed form, plus its excess.

    With c the peak location, the antiderivative of log(u/k)/(u-c)^2 is
    -log(u/k)/(u-c) + log((u-c)/u)/c. The asymptote exceeds the kernel by
    a^2/(b^2 (u-c)^2 (a^2 + b^2 (u-c)^2)) <= a^2/(b^4 (u-c)^4), and for
    cutoff >= 10|c| we have (u-c)^-4 <= u^-4 / 0.9^4.
    """
    c = shift(params.t, sign)
    if cutoff < 10.0 * abs(c) or cutoff <= 2.0 * math.pi:
        raise DomainError("asymptotic tail needs cutoff >= 10|t| and > 2 pi")
    log_ratio = math.log(cutoff) - LOG_2PI
    if c == 0.0:
        main = (log_ratio + 1.0) / cutoff
    else:
        main = log_ratio / (cutoff - c) - math.log1p(-c / cutoff) / c
    main /= params.b**2
    excess = (params.a**2 / params.b**4) / 0.9**4 * (log_ratio / (3.0 * cutoff**3) + 1.0 / (9.0 * cutoff**3))
    return main, excess


def finite_kernel_integral(
    params: KernelParams, sign: Sign, lo: float, hi: float, rel_tol: float = REL_TOL
) -> IntegralResult:
    """Adaptive Simpson over [lo, hi] with forced breakpoints."""
    _check(params, sign)
    if not params.alpha <= lo <= hi < math.inf:
        raise DomainError(f"need alpha <= lo <= hi < oo, got lo={lo!r}, hi={hi!r}")
    if lo == hi:
        return IntegralResult(0.0, 0.0, hi, 0.0)
    f = _integrand(params, sign)
    value, err = _panel_integral(f, _breakpoints(params, sign, lo, hi), rel_tol)
    return IntegralResult(value, err, hi, 0.0)


def kernel_integral(
    params: KernelParams, sign: Sign, upper_limit: float = math.inf, rel_tol: float = REL_TOL
) -> IntegralResult:
    """int_alpha^upper_limit log(u/2pi)/(a^2 + b^2 (u -+ t)^2) du.

    For an infinite limit the range is cut at max(10 t, alpha + 1e6) and the
    rest is the closed-form asymptote from :func:`asymptote_tail`.
    """
    _check(params, sign)
    alpha = params.alpha
    if upper_limit < alpha:
        raise DomainError(f"upper limit {upper_limit!r} below alpha {alpha!r}")
    if math.isfinite(upper_limit):
        return finite_kernel_integral(params, sign, alpha, upper_limit, rel_tol)
    cutoff = max(10.0 * abs(params.t), alpha + 1.0e6)
    body = finite_kernel_integral(params, sign, alpha, cutoff, rel_tol)
    tail, excess = asymptote_tail(params, sign, cutoff)
    return IntegralResult(body.value + tail, body.abs_error_estimate, cutoff, excess)


def gauss_kernel_integral(params: KernelParams, sign: Sign, order: int = 40, panels_per_octave: int = 4) -> float:
    """Composite Gauss-Legendre cross-check over [alpha, oo).

    Uses its own panel layout (uniform pieces on a geometric ladder away
    from the peak) and maps [U, oo) to (0, 1] via u = U/x, so it shares no
    code path with the adaptive oracle.
    """
    _check(params, sign)
    nodes, weights = np.polynomial.legendre.leggauss(order)
    a2, b2, c = params.a**2, params.b**2, shift(params.t, sign)

    def f(u):
        return (np.log(u) - LOG_2PI) / (a2 + b2 * (u - c) ** 2)

    def gl(lo, hi):
        half = 0.5 * (hi - lo)
        return half * np.dot(weights, f(half * nodes + 0.5 * (hi + lo)))

    alpha = params.alpha
    width = params.a / params.b if params.a > 0 else 1.0
    edges = {alpha}
    if sign == "minus" and params.t > alpha:
        edges.update(np.linspace(max(alpha, params.t - 4 * width), params.t + 4 * width, 33))
    big = max(20.0 * abs(params.t), 100.0 * alpha, 1.0e3)
    x = alpha
    while x < big:
        edges.add(x)
        x *= 2.0 ** (1.0 / panels_per_octave)
    if sign == "minus":
        span = abs(params.t - alpha) + 1.0
        step = width
        while step < span:
            for e in (params.t - step, params.t + step):
                if alpha < e < big:
                    edges.add(e)
            step *= 1.25
    edges.add(big)
    pts = sorted(e for e in edges if alpha <= e <= big)
    total = sum(gl(p, q) for p, q in zip(pts, pts[1:]))

    # [big, oo): u = big / x, du = big / x^2 dx, x in (0, 1]
    def g(xv):
        u = big / xv
        return f(u) * big / xv**2

    # log(u) makes g mildly singular at x = 0, so panels shrink geometrically there
    xs = [0.0] + [2.0**-k for k in range(48, -1, -1)]
    for p, q in zip(xs, xs[1:]):
        half = 0.5 * (q - p)
        total += half * np.dot(weights, g(half * nodes + 0.5 * (p + q)))
    return float(total)
