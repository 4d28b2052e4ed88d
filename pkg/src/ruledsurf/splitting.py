"""Splitting types of vector bundles on the projective line.

A bundle on P^1 splits as a sum of line bundles; its type is the
nonincreasing degree sequence.  This module implements the combinatorics
the surface-level theory leans on: the rigid (balanced) type of given rank
and degree, h1 of the endomorphism bundle, the Shatz dominance order with
a brute-force semicontinuity oracle as its independent twin, explicit
degeneration chains down from the rigid type, and the fiberwise
obstruction count for lifting a splitting through the formal neighborhood
of a fiber inside a threefold.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SplittingType:
    """Nonincreasing integer sequence (b1 >= ... >= br), r >= 1."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("a splitting type needs at least one part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    def rank(self) -> int:
        return len(self.parts)

    def degree(self) -> int:
        return sum(self.parts)

    def spread(self) -> int:
        return self.parts[0] - self.parts[-1]


def rigid_type(r: int, d: int) -> SplittingType:
    """The unique rigid type of rank r and degree d: a's then (a-1)'s, a = ceil(d/r)."""
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    a = -(-d // r)
    x = a * r - d
    return SplittingType((a,) * (r - x) + (a - 1,) * x)


def h1_end(t: SplittingType) -> int:
    """h1 of End: sum over ordered pairs of max(0, b_j - b_i - 1)."""
    return sum(
        max(0, bj - bi - 1) for bi in t.parts for bj in t.parts
    )


def is_rigid(t: SplittingType) -> bool:
    """Rigid means no infinitesimal deformations, equivalently spread <= 1."""
    return t.spread() <= 1


def jumping_type(r: int, a: int) -> SplittingType:
    """The minimal degeneration (a+1, a, ..., a, a-1) of the balanced type (a, ..., a)."""
    if r < 2:
        raise ValueError(f"jumping types need rank at least 2, got {r}")
    return SplittingType((a + 1,) + (a,) * (r - 2) + (a - 1,))


def _prefix_sums(parts) -> list[int]:
    sums = []
    total = 0
    for b in parts:
        total += b
        sums.append(total)
    return sums


def specializes(general: SplittingType, special: SplittingType) -> bool:
    """Dominance test: can `general` degenerate to `special` in a flat family.

    True iff ranks and degrees agree and every prefix sum of the special
    type is at least the corresponding prefix sum of the general one (the
    special Harder-Narasimhan polygon lies above).
    """
    if general.rank() != special.rank() or general.degree() != special.degree():
        return False
    pg = ps = 0
    for bg, bs in zip(general.parts, special.parts):
        pg += bg
        ps += bs
        if ps < pg:
            return False
    return True


def semicontinuity_oracle(general: SplittingType, special: SplittingType) -> bool:
    """Brute-force specialization test via section counts of all relevant twists.

    Checks h0(type(k)) for every twist k in a window outside of which both
    counts saturate (to 0 below, to d + r(k+1) above), so the window is
    exhaustive.  Rank or degree mismatch is an error, not False.
    """
    if general.rank() != special.rank():
        raise ValueError("semicontinuity comparison needs equal ranks")
    if general.degree() != special.degree():
        raise ValueError("semicontinuity comparison needs equal degrees")

    def h0(t: SplittingType, k: int) -> int:
        return sum(max(0, b + k + 1) for b in t.parts)

    everything = general.parts + special.parts
    lo = -max(everything) - 1
    hi = -min(everything) + 1
    if h0(general, lo) != 0 or h0(special, lo) != 0:
        raise ArithmeticError("twist window lower bound failed to saturate")
    if h0(general, hi) != h0(special, hi):
        raise ArithmeticError("twist window upper bound failed to saturate")
    return all(h0(special, k) >= h0(general, k) for k in range(lo, hi + 1))


def formal_lift_obstructions(t: SplittingType, conormal_t: int, n_max: int) -> list[int]:
    """Obstruction dimensions o_1..o_n_max for lifting the splitting fiberwise.

    The n-th conormal layer of a fiber line in the ambient threefold is a
    sum of line bundles O(k * conormal_t) for k = 0..n, so the obstruction
    space at level n has dimension

        o_n = sum_{k=0..n} sum_{i,j} max(0, -(k*conormal_t + b_j - b_i) - 1),

    the h1 of that layer tensored with End along the fiber.  An all-zero
    answer certifies that the splitting propagates to every thickening.
    """
    if conormal_t <= 0:
        raise ValueError(f"conormal fiber degree must be positive, got {conormal_t}")
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")

    def layer(k: int) -> int:
        shift = k * conormal_t
        return sum(
            max(0, -(shift + bj - bi) - 1) for bi in t.parts for bj in t.parts
        )

    obstructions = []
    total = layer(0)
    for n in range(1, n_max + 1):
        total += layer(n)
        obstructions.append(total)
    return obstructions


def enumerate_types(r: int, d: int, max_spread: int) -> list[SplittingType]:
    """All rank-r, degree-d types with spread <= max_spread, lexicographically."""
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    if max_spread < 0:
        raise ValueError(f"max_spread must be nonnegative, got {max_spread}")
    found: list[SplittingType] = []
    top_lo = -(-d // r)
    top_hi = (d + (r - 1) * max_spread) // r
    for top in range(top_lo, top_hi + 1):
        _descend([top], r - 1, d - top, top - max_spread, found)
    return found


def _descend(prefix: list[int], m: int, rem: int, lowest: int, found: list):
    if m == 0:
        if rem == 0:
            found.append(SplittingType(tuple(prefix)))
        return
    v_lo = max(lowest, -(-rem // m))
    v_hi = min(prefix[-1], rem - (m - 1) * lowest)
    for v in range(v_lo, v_hi + 1):
        prefix.append(v)
        _descend(prefix, m - 1, rem - v, lowest, found)
        prefix.pop()


def specialization_chain(target: SplittingType) -> list[SplittingType]:
    """A degeneration chain from the rigid type of (rank, degree) down to target.

    Each step transfers 1 from a later part to an earlier one (an
    elementary move), keeps the sequence sorted, and strictly raises the
    prefix-sum vector while staying below the target's, so the walk is
    forced to terminate at the target.
    """
    start = rigid_type(target.rank(), target.degree())
    tgt = _prefix_sums(target.parts)
    chain = [start]
    cur = list(start.parts)
    while tuple(cur) != target.parts:
        pre = _prefix_sums(cur)
        i = next(k for k in range(len(cur)) if pre[k] < tgt[k])
        j = next(k for k in range(i + 1, len(cur)) if pre[k] == tgt[k])
        cur[i] += 1
        cur[j] -= 1
        step = SplittingType(tuple(cur))
        if not specializes(chain[-1], step):
            raise ArithmeticError("elementary move left the dominance order")
        chain.append(step)
    return chain
