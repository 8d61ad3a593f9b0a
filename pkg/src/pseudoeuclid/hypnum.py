"""Split-complex (hyperbolic) numbers z = x + h*y, where h*h = +1.

The product rule (x1, y1)*(x2, y2) = (x1 x2 + y1 y2, x1 y2 + x2 y1) makes the
plane a commutative ring with zero divisors on the lines y = +-x.  Off those
lines every number has a polar form rho * k * exp(h*theta) with k one of the
four Klein units, and multiplication adds extended angles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from numbers import Real

from . import angle as _angle
from .angle import ExtendedAngle
from .errors import NonPositiveRho, NullDirection, NullDivisor
from .tol import is_null_xy, null_eps, quadratic_form


class Sector(Enum):
    """Where a number sits relative to the null lines."""

    RIGHT = "Right"
    LEFT = "Left"
    UP = "Up"
    DOWN = "Down"
    NULL_PLUS = "null+"
    NULL_MINUS = "null-"
    ORIGIN = "origin"

    @property
    def label(self) -> str:
        return self.value


@dataclass(frozen=True)
class HyperbolicNumber:
    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"components must be finite, got ({self.x!r}, {self.y!r})")

    def __add__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        if not isinstance(other, HyperbolicNumber):
            return NotImplemented
        return HyperbolicNumber(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "HyperbolicNumber") -> "HyperbolicNumber":
        if not isinstance(other, HyperbolicNumber):
            return NotImplemented
        return HyperbolicNumber(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "HyperbolicNumber":
        return HyperbolicNumber(-self.x, -self.y)

    def __mul__(self, other):
        if isinstance(other, HyperbolicNumber):
            return HyperbolicNumber(
                self.x * other.x + self.y * other.y,
                self.x * other.y + self.y * other.x,
            )
        if isinstance(other, Real):
            return HyperbolicNumber(self.x * other, self.y * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "HyperbolicNumber":
        return HyperbolicNumber(self.x, -self.y)

    def square_module(self) -> float:
        """The invariant z * conj(z) = x^2 - y^2 (sign carries the sector kind)."""
        return quadratic_form(self.x, self.y)

    def module(self) -> float:
        return math.sqrt(abs(self.square_module()))

    def is_null(self) -> bool:
        return is_null_xy(self.x, self.y)

    def inverse(self) -> "HyperbolicNumber":
        """conj(z) / (z conj(z)); undefined within tolerance of the null lines."""
        if self.is_null():
            raise NullDivisor(f"({self.x}, {self.y}) is a null divisor")
        d = self.square_module()
        return HyperbolicNumber(self.x / d, -self.y / d)

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y}

    @classmethod
    def from_dict(cls, data: dict) -> "HyperbolicNumber":
        return cls(float(data["x"]), float(data["y"]))


@dataclass(frozen=True)
class SquareDistance:
    """A signed square length D; the actual length is d = sqrt|D|."""

    D: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "D", float(self.D))
        if not math.isfinite(self.D):
            raise ValueError(f"square distance must be finite, got {self.D!r}")

    @property
    def d(self) -> float:
        return math.sqrt(abs(self.D))


def classify_sector(z: HyperbolicNumber) -> Sector:
    """Sector tag of z under the scale-invariant null test."""
    if z.x == 0.0 and z.y == 0.0:
        return Sector.ORIGIN
    if z.is_null():
        return Sector.NULL_PLUS if z.x * z.y > 0 else Sector.NULL_MINUS
    if abs(z.x) > abs(z.y):
        return Sector.RIGHT if z.x > 0 else Sector.LEFT
    return Sector.UP if z.y > 0 else Sector.DOWN


def to_polar(z: HyperbolicNumber) -> tuple[float, ExtendedAngle]:
    """Decompose z = rho * k * exp(h*theta).  Raises NullDirection on y = +-x."""
    return z.module(), _angle.from_point(z.x, z.y)


def from_polar(rho: float, a: ExtendedAngle) -> HyperbolicNumber:
    """Rebuild rho * (cosh_e, sinh_e); rho must be strictly positive."""
    if not (isinstance(rho, Real) and math.isfinite(rho) and rho > 0):
        raise NonPositiveRho(f"rho must be positive and finite, got {rho!r}")
    c, s = _angle.cosh_sinh(a)
    return HyperbolicNumber(rho * c, rho * s)


def rotate(z: HyperbolicNumber, a: ExtendedAngle) -> HyperbolicNumber:
    """Multiply by the unit k * exp(h*theta).

    For k = +-1 this is a proper pseudo-rotation: it preserves the square
    module and the orientation.  For k = +-h it additionally swaps the two
    sector kinds (the square module changes sign).
    """
    return z * _angle.euler(a)


def angle_between(v1: HyperbolicNumber, v2: HyperbolicNumber) -> ExtendedAngle:
    """Extended angle carried by the invariant pair of two non-null vectors.

    The pair (x1 x2 - y1 y2, x1 y2 - x2 y1) / (rho1 rho2) is exactly the
    component pair of unit(v2) * conj(unit(v1)); recovering the angle from it
    gives the angle of v2 as seen from v1.
    """
    if v1.is_null() or v2.is_null():
        raise NullDirection("angle between null vectors is undefined")
    den = v1.module() * v2.module()
    c = (v1.x * v2.x - v1.y * v2.y) / den
    s = (v1.x * v2.y - v1.y * v2.x) / den
    return _angle.from_point(c, s)
