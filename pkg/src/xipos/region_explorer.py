"""Where does Re xi'/xi stay positive if some zeros leave the critical line?

For hypothetical zeros beta_k + i gamma_k with 1/2 < beta_k < 1 the
positivity condition reduces to

    sum_k (sigma - beta_k)/((sigma - beta_k)^2 + (t - gamma_k)^2)
        > -c * 0.11 * (sigma - 1/2) * log(t / 2pi)

(minus sum_k (1/2)/(t + gamma_k)^2 on the left when infinitely many zeros
are off the line). This module evaluates both sides on (sigma, t) grids and
writes them out as CSV or SVG.
"""

from __future__ import annotations

import csv
import functools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

import numpy as np
from scipy import ndimage

from xipos.errors import DomainError, ProximityError

Scenario = Literal["one", "finite", "infinite"]

TWO_PI = 2.0 * math.pi
POSITIVITY_SLOPE = 0.11
PROXIMITY = 1e-9
SYNTHETIC_CAP = 100_000
SATISFIED_FILL = "#C0C0C0"
UNSATISFIED_FILL = "#FFFFFF"


@dataclass(frozen=True)
class HypotheticalZeroSet:
    """Off-line zeros (beta, gamma) in the upper half of the right strip.

    An empty set is allowed for any scenario and acts as a probe (no
    off-line zeros at all).
    """

    zeros: tuple[tuple[float, float], ...] = ()
    scenario: Scenario = "finite"

    def __post_init__(self):
        zeros = tuple((float(b), float(g)) for b, g in self.zeros)
        object.__setattr__(self, "zeros", zeros)
        for beta, gamma in zeros:
            if not (0.5 < beta < 1.0 and gamma > 0):
                raise DomainError(f"need 1/2 < beta < 1 and gamma > 0, got ({beta!r}, {gamma!r})")
        n = len(zeros)
        if self.scenario == "one" and n > 1:
            raise DomainError("scenario 'one' takes exactly one zero")
        if self.scenario == "finite" and n == 1:
            raise DomainError("scenario 'finite' takes n >= 2 zeros (or none, as a probe)")
        if self.scenario not in ("one", "finite", "infinite"):
            raise DomainError(f"unknown scenario {self.scenario!r}")

    @property
    def betas(self) -> np.ndarray:
        return np.array([b for b, _ in self.zeros], dtype=float)

    @property
    def gammas(self) -> np.ndarray:
        return np.array([g for _, g in self.zeros], dtype=float)


def parse_inline_zeros(text: str) -> tuple[tuple[float, float], ...]:
    """Parse ``"b1,g1;b2,g2"``."""
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            beta, gamma = (float(v) for v in chunk.split(","))
        except ValueError:
            raise DomainError(f"cannot parse zero {chunk!r}; expected 'beta,gamma'") from None
        pairs.append((beta, gamma))
    return tuple(pairs)


def _check_far(sigma, t, points):
    for b, g in points:
        if math.hypot(sigma - b, t - g) < PROXIMITY:
            raise ProximityError(f"({sigma}, {t}) coincides with a zero at ({b}, {g})")


def offline_contribution(sigma: float, t: float, zeros: HypotheticalZeroSet) -> float:
    """Re of the four terms from {rho, conj rho, 1 - rho, 1 - conj rho} per zero.

    Offsets are formed around sigma = 1/2 so that the beta and 1 - beta
    terms cancel exactly on the critical line.
    """
    x = sigma - 0.5
    total = 0.0
    for beta, gamma in zeros.zeros:
        _check_far(sigma, t, [(beta, gamma), (beta, -gamma), (1 - beta, gamma), (1 - beta, -gamma)])
        y = beta - 0.5
        for d in (x - y, x + y):
            total += d / (d * d + (t - gamma) ** 2) + d / (d * d + (t + gamma) ** 2)
    return total


def synthetic_ordinates(count: int = SYNTHETIC_CAP) -> np.ndarray:
    """Solutions T_n of (T/2pi) log(T/2pi e) + 7/8 = n - 1/2, n = 1..count."""
    return _synthetic_ordinates(int(count)).copy()


@functools.lru_cache(maxsize=4)
def _synthetic_ordinates(count: int) -> np.ndarray:
    target = np.arange(1, count + 1, dtype=float) - 0.5 - 7.0 / 8.0
    # start right of the root; the smooth count is convex there so Newton decreases monotonically
    T = TWO_PI * (target + 10.0) / np.log(target + 10.0) + 40.0
    for _ in range(100):
        value = T / TWO_PI * np.log(T / (TWO_PI * math.e)) - target
        step = value / (np.log(T / TWO_PI) / TWO_PI)
        T = T - step
        if np.max(np.abs(step) / T) < 1e-15:
            break
    return T


def tail_correction(t, ordinates) -> np.ndarray | float:
    """sum_k (1/2)/(t + gamma_k)^2 for each t."""
    g = np.asarray(ordinates, dtype=float)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.array([np.sum(0.5 / (tv + g) ** 2) for tv in t_arr])
    return float(out[0]) if np.ndim(t) == 0 else out


def infinite_correction(t, zeros: HypotheticalZeroSet, c: float, synthetic_cap: int = SYNTHETIC_CAP):
    """Correction for infinitely many off-line zeros.

    The supplied zeros enter directly; the rest of the family is modelled by
    a fraction (1 - c) of the smooth zero sequence, capped at
    ``synthetic_cap`` ordinates.
    """
    corr = tail_correction(t, zeros.gammas)
    if c < 1.0 and synthetic_cap > 0:
        corr = corr + (1.0 - c) * tail_correction(t, _synthetic_ordinates(int(synthetic_cap)))
    return corr


def _check_region_args(sigma, t, c):
    if not 0.5 < sigma < 1.0:
        raise DomainError(f"need 1/2 < sigma < 1, got {sigma!r}")
    if not t > TWO_PI:
        raise DomainError(f"need t > 2 pi, got {t!r}")
    if not 0.0 < c <= 1.0:
        raise DomainError(f"need 0 < c <= 1, got {c!r}")


def scenario_sides(
    sigma: float,
    t: float,
    zeros: HypotheticalZeroSet,
    c: float = 1.0,
    delta: float = 0.0,
    synthetic_cap: int = SYNTHETIC_CAP,
) -> tuple[float, float]:
    """Left and right sides of the positivity condition at one point.

    ``delta`` is an optional safety margin added to the right side.
    """
    _check_region_args(sigma, t, c)
    _check_far(sigma, t, zeros.zeros)
    lhs = 0.0
    for beta, gamma in zeros.zeros:
        d = sigma - beta
        lhs += d / (d * d + (t - gamma) ** 2)
    if zeros.scenario == "infinite":
        lhs -= infinite_correction(t, zeros, c, synthetic_cap)
    rhs = -c * POSITIVITY_SLOPE * (sigma - 0.5) * math.log(t / TWO_PI) + delta
    return lhs, rhs


@dataclass(frozen=True)
class RegionGrid:
    """Cell-centred (sigma, t) grid; arrays are indexed [t_index, sigma_index]."""

    sigma_range: tuple[float, float, int]
    t_range: tuple[float, float, int]
    sigma: np.ndarray
    t: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    satisfied: np.ndarray
    zeros: HypotheticalZeroSet = field(default_factory=HypotheticalZeroSet)
    c: float = 1.0

    @property
    def shape(self) -> tuple[int, int]:
        return self.satisfied.shape

    def cells(self):
        """Yield (sigma, t, lhs, rhs, satisfied), t outer, sigma inner."""
        for j, tv in enumerate(self.t):
            for i, sv in enumerate(self.sigma):
                yield float(sv), float(tv), float(self.lhs[j, i]), float(self.rhs[j, i]), bool(self.satisfied[j, i])

    def cell_index(self, sigma: float, t: float) -> tuple[int, int]:
        """(t_index, sigma_index) of the cell containing the point (lower edge inclusive)."""
        s_lo, s_hi, ns = self.sigma_range
        t_lo, t_hi, nt = self.t_range
        if not (s_lo <= sigma <= s_hi and t_lo <= t <= t_hi):
            raise DomainError(f"({sigma}, {t}) is outside the grid")
        i = min(int((sigma - s_lo) / (s_hi - s_lo) * ns), ns - 1)
        j = min(int((t - t_lo) / (t_hi - t_lo) * nt), nt - 1)
        return j, i


def _check_range(name, rng):
    lo, hi, steps = rng
    if not (isinstance(steps, (int, np.integer)) and steps >= 2):
        raise DomainError(f"{name} needs an integer number of steps >= 2, got {steps!r}")
    if not lo < hi:
        raise DomainError(f"{name} needs lo < hi, got {lo!r}, {hi!r}")
    return float(lo), float(hi), int(steps)


def compute_region(
    zeros: HypotheticalZeroSet,
    c: float = 1.0,
    sigma_range: tuple[float, float, int] = (0.55, 0.95, 100),
    t_range: tuple[float, float, int] = (4000.0, 6000.0, 100),
    delta: float = 0.0,
    synthetic_cap: int = SYNTHETIC_CAP,
) -> RegionGrid:
    """Evaluate the positivity condition cell by cell.

    Each cell is sampled at its centre and, for every hypothetical zero, at
    the point of the cell's centre column closest to that zero's ordinate,
    where the zero's term is most negative. The exclusion notch around a
    zero is only a few units tall in t, far thinner than a typical cell,
    so centre sampling alone would step over it. The recorded sides are
    those of the worst sample; cells touching a zero are unsatisfied.
    """
    s_lo, s_hi, ns = _check_range("sigma_range", sigma_range)
    t_lo, t_hi, nt = _check_range("t_range", t_range)
    if not (0.5 < s_lo and s_hi < 1.0 and t_lo > TWO_PI):
        raise DomainError("grid must lie inside 1/2 < sigma < 1, t > 2 pi")
    if not 0.0 < c <= 1.0:
        raise DomainError(f"need 0 < c <= 1, got {c!r}")

    ds, dt = (s_hi - s_lo) / ns, (t_hi - t_lo) / nt
    sig = s_lo + (np.arange(ns) + 0.5) * ds
    tc = t_lo + (np.arange(nt) + 0.5) * dt
    t_edges_lo = t_lo + np.arange(nt) * dt

    betas, gammas = zeros.betas, zeros.gammas
    # probe ordinates per row: centre plus the clipped zero ordinates, shape (nt, 1 + k)
    probes = np.column_stack([tc] + [np.clip(g, t_edges_lo, t_edges_lo + dt) for g in gammas])
    P = probes[:, :, None]  # (nt, p, 1)
    S = sig[None, None, :]  # (1, 1, ns)

    lhs = np.zeros((nt, probes.shape[1], ns))
    near = np.zeros_like(lhs, dtype=bool)
    with np.errstate(divide="ignore", invalid="ignore"):
        for beta, gamma in zip(betas, gammas):
            d = S - beta
            lhs += d / (d * d + (P - gamma) ** 2)
            near |= np.hypot(d, P - gamma) < PROXIMITY
    if zeros.scenario == "infinite":
        corr = infinite_correction(probes.ravel(), zeros, c, synthetic_cap).reshape(probes.shape)
        lhs -= corr[:, :, None]
    rhs = -c * POSITIVITY_SLOPE * (S - 0.5) * np.log(P / TWO_PI) + delta
    margin = np.where(near, -np.inf, lhs - rhs)
    worst = np.argmin(margin, axis=1)  # (nt, ns)
    pick = (np.arange(nt)[:, None], worst, np.arange(ns)[None, :])
    lhs_w = np.where(near[pick], np.nan, lhs[pick])
    rhs_w = np.broadcast_to(rhs, lhs.shape)[pick]
    satisfied = margin[pick] > 0
    return RegionGrid(
        (s_lo, s_hi, ns), (t_lo, t_hi, nt), sig, tc, lhs_w, np.array(rhs_w), satisfied, zeros, float(c)
    )


def unsatisfied_components(grid: RegionGrid) -> tuple[np.ndarray, int]:
    """Label 4-connected components of the unsatisfied cells."""
    return ndimage.label(~grid.satisfied)


PRESETS = {
    # name: (zeros, scenario, sigma_range, t_range)
    "one-zero": (((0.75, 5000.0),), "one", (0.55, 0.95, 100), (4000.0, 6000.0, 100)),
    "five-zero": (
        ((0.62, 2100.0), (0.85, 2400.0), (0.7, 2750.0), (0.95, 3050.0), (0.78, 3400.0)),
        "finite",
        (0.52, 0.98, 100),
        (2000.0, 3500.0, 150),
    ),
    "no-zero": ((), "finite", (0.55, 0.95, 100), (4000.0, 6000.0, 100)),
}


def preset(name: str) -> tuple[HypotheticalZeroSet, tuple, tuple]:
    try:
        zs, scenario, srange, trange = PRESETS[name]
    except KeyError:
        raise DomainError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    return HypotheticalZeroSet(zs, scenario), srange, trange


def _fmt(x: float) -> str:
    return format(x, ".17g")


def export_grid(grid: RegionGrid, fmt: Literal["csv", "svg"], path) -> None:
    """Write the grid as CSV (one row per cell) or SVG (one rectangle per cell)."""
    if fmt == "csv":
        _write_csv(grid, path)
    elif fmt == "svg":
        _write_svg(grid, path)
    else:
        raise ValueError(f"format must be 'csv' or 'svg', got {fmt!r}")


def _write_csv(grid: RegionGrid, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["sigma", "t", "lhs", "rhs", "satisfied"])
        for sv, tv, lhs, rhs, ok in grid.cells():
            writer.writerow([_fmt(sv), _fmt(tv), _fmt(lhs), _fmt(rhs), "true" if ok else "false"])


def _write_svg(grid: RegionGrid, path) -> None:
    left, top, pw, ph = 80.0, 20.0, 600.0, 480.0
    width, height = left + pw + 20.0, top + ph + 60.0
    s_lo, s_hi, ns = grid.sigma_range
    t_lo, t_hi, nt = grid.t_range
    cw, ch = pw / ns, ph / nt

    def x_of(s):
        return left + (s - s_lo) / (s_hi - s_lo) * pw

    def y_of(t):
        return top + ph - (t - t_lo) / (t_hi - t_lo) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        '<g shape-rendering="crispEdges">',
    ]
    for j in range(nt):
        y = top + ph - (j + 1) * ch
        for i in range(ns):
            fill = SATISFIED_FILL if grid.satisfied[j, i] else UNSATISFIED_FILL
            out.append(
                f'<rect x="{left + i * cw:.4f}" y="{y:.4f}" width="{cw:.4f}" height="{ch:.4f}" fill="{fill}"/>'
            )
    out.append("</g>")
    out.append(f'<rect x="{left:g}" y="{top:g}" width="{pw:g}" height="{ph:g}" fill="none" stroke="black"/>')
    for beta, gamma in grid.zeros.zeros:
        if s_lo <= beta <= s_hi and t_lo <= gamma <= t_hi:
            out.append(f'<circle cx="{x_of(beta):.4f}" cy="{y_of(gamma):.4f}" r="3" fill="black"/>')
    base = top + ph
    out += [
        f'<text x="{left:g}" y="{base + 18:g}" text-anchor="middle" font-size="12">{s_lo:g}</text>',
        f'<text x="{left + pw:g}" y="{base + 18:g}" text-anchor="middle" font-size="12">{s_hi:g}</text>',
        f'<text x="{left + pw / 2:g}" y="{base + 40:g}" text-anchor="middle" font-size="14">sigma</text>',
        f'<text x="{left - 6:g}" y="{base:g}" text-anchor="end" font-size="12">{t_lo:g}</text>',
        f'<text x="{left - 6:g}" y="{top + 10:g}" text-anchor="end" font-size="12">{t_hi:g}</text>',
        f'<text x="{left - 40:g}" y="{top + ph / 2:g}" text-anchor="middle" font-size="14">t</text>',
        "</svg>",
    ]
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8")
