"""Extended hyperbolic angles.

An ordinary hyperbolic angle only parametrizes one sector of the plane.  The
full plane (minus the null lines y = +-x) needs an extra label: one of the
four unit numbers +1, +h, -1, -h, which form a Klein four-group under
multiplication.  A pair (theta, k) reaches every non-null direction exactly
once, and the extended cosine/sine below are total on those pairs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .errors import NullDirection, OverflowingAngle
from .tol import null_eps, quadratic_form

if TYPE_CHECKING:  # pragma: no cover
    from .hypnum import HyperbolicNumber

# cosh(350)^2 ~ 2.5e303 still fits in a double, so products of two extended
# values stay finite; anything larger is refused instead of returning inf.
THETA_MAX = 350.0


class KleinIndex(Enum):
    """The four unit directions +1, +h, -1, -h."""

    P1 = "+1"
    H = "+h"
    M1 = "-1"
    MH = "-h"

    def __mul__(self, other: "KleinIndex") -> "KleinIndex":
        return _KLEIN_TABLE[(self, other)]

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def from_label(cls, label: str) -> "KleinIndex":
        for member in cls:
            if member.value == label:
                return member
        raise ValueError(f"unknown Klein index label {label!r}")

    @property
    def unit(self) -> tuple[float, float]:
        """Component pair of the unit number this index stands for."""
        return _KLEIN_UNITS[self]


# The group table is written out in full rather than derived from sign
# arithmetic, so group facts (closure, self-inverse elements) are exact.
_P1, _H, _M1, _MH = KleinIndex.P1, KleinIndex.H, KleinIndex.M1, KleinIndex.MH
_KLEIN_TABLE = {
    (_P1, _P1): _P1, (_P1, _H): _H, (_P1, _M1): _M1, (_P1, _MH): _MH,
    (_H, _P1): _H, (_H, _H): _P1, (_H, _M1): _MH, (_H, _MH): _M1,
    (_M1, _P1): _M1, (_M1, _H): _MH, (_M1, _M1): _P1, (_M1, _MH): _H,
    (_MH, _P1): _MH, (_MH, _H): _M1, (_MH, _M1): _H, (_MH, _MH): _P1,
}

_KLEIN_UNITS = {
    _P1: (1.0, 0.0),
    _H: (0.0, 1.0),
    _M1: (-1.0, 0.0),
    _MH: (0.0, -1.0),
}


@dataclass(frozen=True)
class ExtendedAngle:
    """An angle theta plus the Klein index of its sector."""

    theta: float
    k: KleinIndex = KleinIndex.P1

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", float(self.theta))
        if not math.isfinite(self.theta):
            raise ValueError(f"theta must be finite, got {self.theta!r}")
        if not isinstance(self.k, KleinIndex):
            raise ValueError(f"k must be a KleinIndex, got {self.k!r}")

    def to_dict(self) -> dict:
        return {"theta": self.theta, "k": self.k.label}

    @classmethod
    def from_dict(cls, data: dict) -> "ExtendedAngle":
        return cls(float(data["theta"]), KleinIndex.from_label(data["k"]))


def _checked_cosh_sinh(theta: float) -> tuple[float, float]:
    if abs(theta) > THETA_MAX:
        raise OverflowingAngle(f"|theta| = {abs(theta)} exceeds {THETA_MAX}")
    return math.cosh(theta), math.sinh(theta)


def cosh_sinh(a: ExtendedAngle) -> tuple[float, float]:
    """Both extended values of ``a`` at once.

    The index acts on the plain (cosh, sinh) pair the way its unit number
    multiplies vectors: +1 keeps it, -1 negates it, +-h swaps and signs it.
    """
    c, s = _checked_cosh_sinh(a.theta)
    k = a.k
    if k is KleinIndex.P1:
        return c, s
    if k is KleinIndex.M1:
        return -c, -s
    if k is KleinIndex.H:
        return s, c
    return -s, -c


def cosh_e(a: ExtendedAngle) -> float:
    """Extended hyperbolic cosine."""
    return cosh_sinh(a)[0]


def sinh_e(a: ExtendedAngle) -> float:
    """Extended hyperbolic sine."""
    return cosh_sinh(a)[1]


def from_point(x: float, y: float) -> ExtendedAngle:
    """Extended angle of the direction (x, y).

    Raises NullDirection when (x, y) lies on y = +-x within tolerance (the
    origin included).  Which of the two atanh branches applies is decided by
    the larger of the normalized components, which also fixes the index.
    """
    d = quadratic_form(x, y)
    if abs(d) <= null_eps() * (x * x + y * y):
        raise NullDirection(f"({x}, {y}) has no extended angle")
    rho = math.sqrt(abs(d))
    c = x / rho
    s = y / rho
    if abs(s) < abs(c):
        return ExtendedAngle(math.atanh(s / c), KleinIndex.P1 if c > 0 else KleinIndex.M1)
    return ExtendedAngle(math.atanh(c / s), KleinIndex.H if s > 0 else KleinIndex.MH)


def add_angles(a: ExtendedAngle, b: ExtendedAngle) -> ExtendedAngle:
    """(theta, k) + (theta', k') = (theta + theta', k*k')."""
    return ExtendedAngle(a.theta + b.theta, a.k * b.k)


def sub_angles(a: ExtendedAngle, b: ExtendedAngle) -> ExtendedAngle:
    # every Klein element is its own inverse, so subtraction reuses k*k'
    return ExtendedAngle(a.theta - b.theta, a.k * b.k)


def euler(a: ExtendedAngle) -> "HyperbolicNumber":
    """The unit number k * exp(h * theta) = cosh_e + h sinh_e."""
    from .hypnum import HyperbolicNumber

    c, s = cosh_sinh(a)
    return HyperbolicNumber(c, s)


def circle_map(phi: float) -> tuple[float, float]:
    """Map a Euclidean angle phi to extended values on the unit hyperbolas.

    (cos phi, sin phi) normalized by sqrt|cos 2 phi|; undefined at
    phi = pi/4 + n*pi/2 where the ray is null.
    """
    c2 = math.cos(2.0 * phi)
    if abs(c2) <= null_eps():
        raise NullDirection(f"phi = {phi} points along a null line")
    r = math.sqrt(abs(c2))
    return math.cos(phi) / r, math.sin(phi) / r
