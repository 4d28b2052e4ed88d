"""Exact intersection theory on geometrically ruled surfaces.

The numerical Picard group of a ruled surface over a smooth genus-q curve
has basis h (a section of minimal self-intersection, so h^2 = -e) and f
(a fiber), with h.f = 1 and f^2 = 0.  This module implements that pairing
together with the canonical class, ampleness and good-polarization tests,
and a cycle ring truncated above degree 2, which is just big enough to
push Chern characters and Todd classes down to the base curve.

All arithmetic is exact: divisor classes carry integer coefficients,
cycle classes carry rationals.  Every value is immutable and every
operation is a pure function, so concurrent use needs no coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact integer or rational, got {value!r}")


@dataclass(frozen=True)
class SurfaceGeometry:
    """Base-curve genus q and ruled-surface invariant e (minimal section has h^2 = -e)."""

    q: int
    e: int

    def __post_init__(self):
        if not isinstance(self.q, int) or not isinstance(self.e, int):
            raise TypeError("genus and invariant must be integers")
        if self.q < 0:
            raise ValueError(f"genus must be nonnegative, got q={self.q}")
        if self.e < -self.q:
            raise ValueError(
                f"invariant e={self.e} violates the Nagata-Segre bound e >= -q = {-self.q}"
            )


@dataclass(frozen=True)
class DivisorClass:
    """Numerical divisor class a*h + b*f with integer coefficients."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("divisor coefficients must be integers")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.a * n, self.b * n)

    __rmul__ = __mul__


ZERO = DivisorClass(0, 0)
SECTION = DivisorClass(1, 0)
FIBER = DivisorClass(0, 1)


def intersect(g: SurfaceGeometry, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number of two divisor classes: -e*a1*a2 + a1*b2 + a2*b1."""
    return -g.e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b


def canonical_class(g: SurfaceGeometry) -> DivisorClass:
    """Canonical divisor class -2h + (2q - 2 - e)f."""
    return DivisorClass(-2, 2 * g.q - 2 - g.e)


def is_ample(g: SurfaceGeometry, d: DivisorClass) -> bool:
    """Ampleness of a*h + b*f: a > 0 and b > a*e (e >= 0), or a > 0 and 2b > a*e (e < 0)."""
    if d.a <= 0:
        return False
    if g.e >= 0:
        return d.b > d.a * g.e
    return 2 * d.b > d.a * g.e


def is_good_polarization(g: SurfaceGeometry, d: DivisorClass) -> bool:
    """Ample class R with R.K + R.f < 0, equivalently a(e + 2q - 1) < 2b."""
    if not is_ample(g, d):
        return False
    k = canonical_class(g)
    return intersect(g, d, k) + intersect(g, d, FIBER) < 0


def min_good_twist(g: SurfaceGeometry, d: DivisorClass) -> int:
    """Smallest t >= 0 such that d + t*f is a good polarization.

    Adding fibers keeps an ample class ample and strictly raises the
    right-hand side of the good-polarization inequality, so the loop
    always terminates.  Non-ample input is rejected.
    """
    if not is_ample(g, d):
        raise ValueError(f"{d!r} is not ample on (q={g.q}, e={g.e})")
    t = 0
    current = d
    while not is_good_polarization(g, current):
        t += 1
        current = current + FIBER
    return t


@dataclass(frozen=True)
class CycleClass:
    """Graded cycle r0 + (dh*h + df*f) + p2*[pt], truncated above degree 2.

    Coefficients are exact rationals; integer inputs are converted, anything
    else (floats in particular) is rejected.
    """

    r0: Fraction
    dh: Fraction
    df: Fraction
    p2: Fraction

    def __post_init__(self):
        for name in ("r0", "dh", "df", "p2"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))


@dataclass(frozen=True)
class CurveCycle:
    """Cycle r0 + p1*[pt] on the base curve (degrees 0 and 1 only)."""

    r0: Fraction
    p1: Fraction

    def __post_init__(self):
        for name in ("r0", "p1"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))


def cycle_mul(g: SurfaceGeometry, x: CycleClass, y: CycleClass) -> CycleClass:
    """Product in the truncated cycle ring; the degree-1 square lands on -e, 1, 1, 0."""
    pairing = -g.e * x.dh * y.dh + x.dh * y.df + y.dh * x.df
    return CycleClass(
        x.r0 * y.r0,
        x.r0 * y.dh + y.r0 * x.dh,
        x.r0 * y.df + y.r0 * x.df,
        x.r0 * y.p2 + y.r0 * x.p2 + pairing,
    )


def curve_mul(x: CurveCycle, y: CurveCycle) -> CurveCycle:
    return CurveCycle(x.r0 * y.r0, x.r0 * y.p1 + x.p1 * y.r0)


def chern_character(g: SurfaceGeometry, rank: int, c1: DivisorClass, c2: int) -> CycleClass:
    """Chern character rank + c1 + (c1^2 - 2*c2)/2 of a rank/c1/c2 triple."""
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    top = Fraction(intersect(g, c1, c1) - 2 * c2, 2)
    return CycleClass(Fraction(rank), Fraction(c1.a), Fraction(c1.b), top)


def todd_surface(g: SurfaceGeometry) -> CycleClass:
    """Todd class 1 - K/2 + (1-q)*[pt] of the surface's tangent bundle."""
    k = canonical_class(g)
    return CycleClass(
        Fraction(1), Fraction(-k.a, 2), Fraction(-k.b, 2), Fraction(1 - g.q)
    )


def todd_curve(q: int) -> CurveCycle:
    """Todd class 1 + (1-q)*[pt] of a genus-q curve."""
    if q < 0:
        raise ValueError(f"genus must be nonnegative, got {q}")
    return CurveCycle(Fraction(1), Fraction(1 - q))


def pushforward_to_curve(g: SurfaceGeometry, x: CycleClass) -> CurveCycle:
    """Proper pushforward along the ruling.

    The section class maps isomorphically to the base, fibers contract,
    the degree-0 part dies for dimension reasons, and points go to points.
    """
    return CurveCycle(x.dh, x.p2)
