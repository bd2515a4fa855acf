"""The kernel 1/(a^2 + b^2 (u -+ t)^2) shared by zero sums and integrals."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Literal

GAMMA1 = 14.134725141734693  # ordinate of the first zero on the critical line

Sign = Literal["minus", "plus"]


@dataclass(frozen=True)
class KernelParams:
    """Parameters of the kernel 1/(a^2 + b^2 (u -+ t)^2) on [alpha, oo).

    ``a`` may be 0 for the plus kernel; everything else must be positive.
    """

    a: float
    b: float
    alpha: float = GAMMA1
    t: float = 0.0

    def __post_init__(self):
        for name in ("a", "b", "alpha", "t"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.a < 0 or self.b <= 0 or self.alpha <= 0:
            raise ValueError(f"need a >= 0, b > 0, alpha > 0; got {self}")

    def at(self, t: float) -> "KernelParams":
        return replace(self, t=t)


def shift(t: float, sign: Sign) -> float:
    """Location of the kernel's peak: +t for the minus kernel, -t for plus."""
    if sign == "minus":
        return t
    if sign == "plus":
        return -t
    raise ValueError(f"sign must be 'minus' or 'plus', got {sign!r}")
