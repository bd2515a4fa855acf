"""Tables of critical-line zero ordinates: loading, validation, counting, sums."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from xipos.errors import AccuracyDomainError, DomainError, TableError
from xipos.kernels import GAMMA1, KernelParams
from xipos.special_functions import ZETA_T_MAX, zeta

TWO_PI = 2.0 * math.pi
FIRST_ORDINATE_TOL = 1e-4
# No zero of zeta in 0 < t <= ZERO_FREE_HEIGHT (gamma_1 = 14.1347...)
ZERO_FREE_HEIGHT = 14.0

FIXTURE_DIR = Path(__file__).resolve().parents[2] / "fixtures"


def fixture_path(name: str = "zeros100.txt") -> Path:
    """Path of a zero table shipped in the repository's ``fixtures/``."""
    return FIXTURE_DIR / name


@dataclass(frozen=True)
class ZeroTable:
    """Ascending ordinates gamma of zeros 1/2 + i gamma.

    The table is assumed complete: it holds every zero with ordinate up to
    ``height``. An empty table stands for "no zeros known".
    """

    ordinates: np.ndarray
    source_label: str = ""

    def __post_init__(self):
        arr = np.array(self.ordinates, dtype=float).ravel()
        arr.setflags(write=False)
        object.__setattr__(self, "ordinates", arr)
        if arr.size == 0:
            return
        if not np.all(np.isfinite(arr)):
            raise TableError("non-finite ordinate in table")
        if arr[0] <= 0:
            raise TableError(f"ordinates must be positive, got {arr[0]!r}")
        bad = np.nonzero(np.diff(arr) <= 0)[0]
        if bad.size:
            i = int(bad[0]) + 1
            raise TableError(f"ordinates not strictly ascending at index {i}: {arr[i - 1]!r} >= {arr[i]!r}")
        if abs(arr[0] - GAMMA1) > FIRST_ORDINATE_TOL:
            raise TableError(f"first ordinate {arr[0]!r} is not gamma_1 = {GAMMA1}")

    @property
    def height(self) -> float:
        return float(self.ordinates[-1]) if self.ordinates.size else 0.0

    @property
    def count(self) -> int:
        return int(self.ordinates.size)

    def __len__(self):
        return self.count

    def truncated(self, count: int) -> "ZeroTable":
        return ZeroTable(self.ordinates[:count], f"{self.source_label}[:{count}]")


def load_zero_table(path) -> ZeroTable:
    """Read one ordinate per line; blank lines and ``#`` comments are skipped."""
    path = Path(path)
    values = []
    last_line = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                value = float(line)
            except ValueError:
                raise TableError(f"{path}:{lineno}: cannot parse {line!r} as an ordinate") from None
            if not math.isfinite(value) or value <= 0:
                raise TableError(f"{path}:{lineno}: ordinate must be positive and finite, got {line!r}")
            if values and value <= values[-1]:
                raise TableError(
                    f"{path}:{lineno}: ordinates not strictly ascending ({values[-1]!r} then {value!r}; "
                    f"previous entry on line {last_line})"
                )
            values.append(value)
            last_line = lineno
    if not values:
        raise TableError(f"{path}: no ordinates found")
    return ZeroTable(np.array(values), source_label=str(path))


def default_table_path() -> Path:
    """``$XIPOS_ZEROS`` if set, else the shipped first-100 fixture."""
    env = os.environ.get("XIPOS_ZEROS")
    return Path(env) if env else fixture_path("zeros100.txt")


def validate_zero_table(table: ZeroTable, tolerance: float = 1e-4) -> list[tuple[int, float]]:
    """Return ``(index, |zeta(1/2 + i gamma)|)`` for every entry above ``tolerance``."""
    if not tolerance > 0:
        raise DomainError("tolerance must be positive")
    if table.height > ZETA_T_MAX:
        raise AccuracyDomainError(f"table height {table.height:g} beyond zeta's validated range")
    flagged = []
    for i, gamma in enumerate(table.ordinates):
        residual = abs(zeta(complex(0.5, gamma)))
        if residual > tolerance:
            flagged.append((i, residual))
    return flagged


def count_zeros_below(table: ZeroTable, T: float) -> int:
    """Number of ordinates <= T."""
    if not 0 < T <= table.height:
        raise DomainError(f"T = {T!r} outside (0, {table.height}]")
    return int(np.searchsorted(table.ordinates, T, side="right"))


def counting_main_term(T: float) -> float:
    return T / TWO_PI * math.log(T / (TWO_PI * math.e)) + 7.0 / 8.0


def counting_error_bound(T: float) -> float:
    """0.110 log T + 0.290 log log T + 2.290 + 25/(48 pi T), valid for T >= e."""
    return 0.110 * math.log(T) + 0.290 * math.log(math.log(T)) + 2.290 + 25.0 / (48.0 * math.pi * T)


def counting_envelopes(u: float) -> tuple[float, float]:
    """Continuous bounds ``(n_low, n_up)`` with n_low <= N(u) <= n_up for u >= e."""
    if not u >= math.e:
        raise DomainError(f"counting envelopes need u >= e, got {u!r}")
    main = u / TWO_PI * math.log(u / (TWO_PI * math.e))
    spread = 0.11 * math.log(u) + 0.29 * math.log(math.log(u))
    small = 25.0 / (48.0 * math.pi * u)
    return main - spread - 1.415 - small, main + spread + 3.165 + small


@dataclass(frozen=True)
class CountingReport:
    T: float
    n_of_T: int
    main_term: float
    deviation: float
    bound: float
    satisfied: bool


def verify_counting_bound(table: ZeroTable, T: float) -> CountingReport:
    if not math.e <= T <= table.height:
        raise DomainError(f"T = {T!r} outside [e, {table.height}]")
    n = count_zeros_below(table, T)
    main = counting_main_term(T)
    bound = counting_error_bound(T)
    deviation = n - main
    return CountingReport(T, n, main, deviation, bound, abs(deviation) <= bound)


def zero_tail_bound(start: float, count_below: int, decay: float, f_start: float) -> float:
    """Upper bound for sum_{gamma > start} f(gamma) over all zeros.

    Requires f >= 0 decreasing on [start, oo) with f(u) <= decay / u^2 there,
    start >= 14 and count_below <= N(start). Partial summation against the
    upper counting envelope gives

        (n_up(start) - count_below) f(start) + int_start^oo n_up'(u) f(u) du

    and n_up'(u) <= log(u/2pi)/(2pi) + 0.11/u + 0.29/(u log u).
    """
    if start < ZERO_FREE_HEIGHT:
        raise DomainError("tail start must be at least 14")
    _, n_up = counting_envelopes(start)
    excess = max(0.0, n_up - count_below)
    log_h = math.log(start)
    integral = (math.log(start / TWO_PI) + 1.0) / (TWO_PI * start)
    integral += 0.11 / (2.0 * start**2) + 0.29 / (2.0 * start**2 * log_h)
    return excess * f_start + decay * integral


def tail_start(table: ZeroTable) -> float:
    return table.height if table.count else ZERO_FREE_HEIGHT


def minus_kernel_tail(table: ZeroTable, a: float, b: float, t: float) -> float:
    """Bound on sum_{gamma > height} 1/(a^2 + b^2 (t - gamma)^2), any t > 0."""
    start = tail_start(table)
    count = table.count
    if t >= start:
        # zeros in (start, 2t]: at most n_up(2t) - count of them, each term <= 1/a^2
        mid = 2.0 * t
        mid_count = max(0.0, counting_envelopes(mid)[1] - count)
        bulk = mid_count / a**2
        f_mid = 1.0 / (a * a + b * b * t * t)
        return bulk + zero_tail_bound(mid, count, 4.0 / b**2, f_mid)
    ratio = 1.0 - t / start
    f_start = 1.0 / (a * a + b * b * (start - t) ** 2)
    return zero_tail_bound(start, count, 1.0 / (b * ratio) ** 2, f_start)


def plus_kernel_tail(table: ZeroTable, a: float, b: float, t: float) -> float:
    """Bound on sum_{gamma > height} 1/(a^2 + b^2 (t + gamma)^2), t >= 0."""
    start = tail_start(table)
    f_start = 1.0 / (a * a + b * b * (start + t) ** 2)
    return zero_tail_bound(start, table.count, 1.0 / b**2, f_start)


@dataclass(frozen=True)
class KernelSums:
    """Truncated S1, S2 and bounds on what the zeros above the table add."""

    s1: float
    s2: float
    s1_tail: float
    s2_tail: float


def kernel_sum(table: ZeroTable, params: KernelParams) -> KernelSums:
    """S1 = sum 1/(a^2 + b^2 (t - gamma)^2), S2 = sum 1/(a^2 + b^2 (t + gamma)^2).

    Sums run over the table; the true sums over all zeros lie in
    [s, s + tail].
    """
    a, b, t = params.a, params.b, params.t
    if not (a > 0 and b > 0):
        raise DomainError("kernel_sum needs a > 0 and b > 0")
    if not t > GAMMA1:
        raise DomainError(f"kernel_sum needs t > gamma_1, got {t!r}")
    g = table.ordinates
    s1 = float(np.sum(1.0 / (a * a + b * b * (t - g) ** 2)))
    s2 = float(np.sum(1.0 / (a * a + b * b * (t + g) ** 2)))
    return KernelSums(s1, s2, minus_kernel_tail(table, a, b, t), plus_kernel_tail(table, a, b, t))
