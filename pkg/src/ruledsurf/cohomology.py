"""Line-bundle cohomology on Hirzebruch surfaces and quantities built on it.

For genus zero the ruling pushes O(a*h + b*f) down to a sum of line bundles
on the base P^1, so every h^i is a finite lattice count: h0 and h1 sum the
section and obstruction counts of the summands O(b - k*e) for k = 0..a, h2
vanishes whenever a >= -1, and the remaining case a <= -2 reduces to the
a >= 0 case through Serre duality in a single step.

On top of the line-bundle table this module evaluates the endomorphism
cohomology of split bundles, the dimension of their local moduli space,
the conormal-power vanishing that makes infinitesimal neighborhoods
manageable, the index past which twisted endomorphism h1 stabilizes at
zero, and the growth of global endomorphisms through the neighborhoods
(computed in the split model, where sections of the layers add up).

Positive genus exposes only the Riemann-Roch Euler characteristic; exact
individual h^i would need Brill-Noether data and is deliberately refused
with a typed error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import (
    ZERO,
    DivisorClass,
    SurfaceGeometry,
    canonical_class,
    intersect,
)


class PositiveGenusError(ValueError):
    """Exact cohomology dimensions are only available for genus zero."""


class StabilizationError(ValueError):
    """The certified vanishing tail was not reached within the search bound."""


def _require_genus_zero(g: SurfaceGeometry):
    if g.q != 0:
        raise PositiveGenusError(
            f"exact cohomology needs genus zero, got q={g.q}; use euler_char instead"
        )


@dataclass(frozen=True)
class CohomologyTable:
    """The three cohomology dimensions (h0, h1, h2) of a sheaf on a surface."""

    h0: int
    h1: int
    h2: int

    def __add__(self, other: "CohomologyTable") -> "CohomologyTable":
        return CohomologyTable(
            self.h0 + other.h0, self.h1 + other.h1, self.h2 + other.h2
        )

    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2


@dataclass(frozen=True)
class SplitBundle:
    """Direct sum of line bundles, recorded by its summand divisor classes."""

    summands: tuple[DivisorClass, ...]

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "summands", summands)

    def rank(self) -> int:
        return len(self.summands)

    def c1(self) -> DivisorClass:
        total = ZERO
        for d in self.summands:
            total = total + d
        return total


@dataclass(frozen=True)
class ConormalData:
    """Numerical conormal class t*h + s*f of the surface inside its ambient threefold.

    For genus zero the standing assumption is ampleness (t > 0, s > e*t);
    for positive genus the degree condition is s > 2q - 2 + |e|.  t > 0 is
    enforced at construction, the genus-dependent part by check_conormal.
    """

    t: int
    s: int

    def __post_init__(self):
        if self.t <= 0:
            raise ValueError(f"conormal h-degree must be positive, got t={self.t}")


def check_conormal(g: SurfaceGeometry, c: ConormalData):
    """Reject conormal data violating the standing positivity assumptions."""
    if g.q == 0:
        if c.s <= g.e * c.t:
            raise ValueError(
                f"conormal class must be ample: need s > e*t, got s={c.s}, e*t={g.e * c.t}"
            )
    else:
        bound = 2 * g.q - 2 + abs(g.e)
        if c.s <= bound:
            raise ValueError(
                f"conormal degree must exceed 2q-2+|e| = {bound}, got s={c.s}"
            )


def _h_line_nonneg(e: int, a: int, b: int) -> CohomologyTable:
    # One Serre-duality step lands every input here with a >= -1.
    if a == -1:
        return CohomologyTable(0, 0, 0)
    if a < 0:
        raise ArithmeticError(f"duality reduction failed to reach a >= -1 (a={a})")
    h0 = sum(max(0, b - k * e + 1) for k in range(a + 1))
    h1 = sum(max(0, k * e - b - 1) for k in range(a + 1))
    return CohomologyTable(h0, h1, 0)


def h_line(g: SurfaceGeometry, d: DivisorClass) -> CohomologyTable:
    """Exact cohomology of the line bundle O(a*h + b*f) on a Hirzebruch surface."""
    _require_genus_zero(g)
    if d.a >= -1:
        return _h_line_nonneg(g.e, d.a, d.b)
    dual = canonical_class(g) - d
    table = _h_line_nonneg(g.e, dual.a, dual.b)
    return CohomologyTable(table.h2, table.h1, table.h0)


def euler_char(g: SurfaceGeometry, d: DivisorClass) -> int:
    """Riemann-Roch Euler characteristic (1 - q) + D.(D - K)/2, any genus."""
    pairing = intersect(g, d, d - canonical_class(g))
    if pairing % 2:
        raise ArithmeticError(
            f"odd pairing D.(D-K) = {pairing} for {d!r}: the intersection ring is broken"
        )
    return (1 - g.q) + pairing // 2


def serre_dual(g: SurfaceGeometry, d: DivisorClass) -> DivisorClass:
    """The class K - D whose cohomology mirrors that of D."""
    return canonical_class(g) - d


def conormal_vanishing(g: SurfaceGeometry, c: ConormalData, n_max: int) -> bool:
    """Whether h1 and h2 of every conormal power n*(t,s), n = 1..n_max, vanish."""
    _require_genus_zero(g)
    check_conormal(g, c)
    for n in range(1, n_max + 1):
        table = h_line(g, DivisorClass(n * c.t, n * c.s))
        if table.h1 or table.h2:
            return False
    return True


def h_split_end(
    g: SurfaceGeometry, bundle: SplitBundle, twist: DivisorClass = ZERO
) -> CohomologyTable:
    """Cohomology of End(bundle) twisted by a divisor class.

    End of a direct sum splits into the lines O(D_j - D_i), so the table is
    the componentwise sum of h_line over all ordered summand pairs.
    """
    _require_genus_zero(g)
    total = CohomologyTable(0, 0, 0)
    for d_i in bundle.summands:
        for d_j in bundle.summands:
            total = total + h_line(g, d_j - d_i + twist)
    return total


def moduli_dimension_split(g: SurfaceGeometry, bundle: SplitBundle) -> int:
    """Dimension h1(End) of the local moduli space at the zeroth neighborhood."""
    return h_split_end(g, bundle).h1


def stabilization_index(
    g: SurfaceGeometry, bundle: SplitBundle, c: ConormalData, y_max: int
) -> int:
    """Smallest x >= 1 with h1(End(bundle) ⊗ O(y*(t,s))) = 0 for all y >= x.

    The claim for y beyond y_max rests on a certificate: once every summand
    difference satisfies y*t + Δa >= -1 and y*s + Δb >= e*(y*t + Δa) - 1,
    the corresponding h1 term is zero, and both inequalities are preserved
    under y -> y+1 because s > e*t.  If no y <= y_max is certified the
    search fails with StabilizationError.
    """
    _require_genus_zero(g)
    check_conormal(g, c)
    if y_max < 1:
        raise ValueError(f"y_max must be at least 1, got {y_max}")

    diffs = [
        d_j - d_i for d_i in bundle.summands for d_j in bundle.summands
    ]

    def certified(y: int) -> bool:
        for delta in diffs:
            fiber_deg = y * c.t + delta.a
            if fiber_deg < -1:
                return False
            if y * c.s + delta.b < g.e * fiber_deg - 1:
                return False
        return True

    cert_y = next((y for y in range(1, y_max + 1) if certified(y)), None)
    if cert_y is None:
        raise StabilizationError(
            f"no stabilization within y_max={y_max}: the certified tail was not reached"
        )

    def h1_at(y: int) -> int:
        return h_split_end(g, bundle, DivisorClass(y * c.t, y * c.s)).h1

    for y in range(cert_y, y_max + 1):
        if h1_at(y):
            raise ArithmeticError(
                f"certified tail has nonzero h1 at y={y}: the cohomology engine is broken"
            )
    x = cert_y
    while x > 1 and h1_at(x - 1) == 0:
        x -= 1
    return x


def endomorphism_growth(
    g: SurfaceGeometry, bundle: SplitBundle, c: ConormalData, n: int
) -> int:
    """Global endomorphism count on the n-th infinitesimal neighborhood, split model.

    In the split model the restriction sequences of the thickenings split,
    so sections add layer by layer: the result is the sum over m = 0..n-1
    of h0(End(bundle) ⊗ O(m*(t,s))).
    """
    _require_genus_zero(g)
    check_conormal(g, c)
    if n < 1:
        raise ValueError(f"neighborhood index must be at least 1, got {n}")
    return sum(
        h_split_end(g, bundle, DivisorClass(m * c.t, m * c.s)).h0 for m in range(n)
    )
