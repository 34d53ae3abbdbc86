"""Value semigroups 𝒮 ⊂ Z^r_{≥0}: membership, conductor, δ, wedges, Gorenstein.

A semigroup is stored by its conductor c and the finite set 𝒮 ∩ R(0,c);
membership anywhere follows from the saturation rule
``l ∈ 𝒮  ⇔  min(l, c) ∈ 𝒮`` (coordinates at or above the conductor can be
capped).  The rule is cross-validated against the raw defining data by
:func:`validate_saturation`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .lattice import LatticePoint, Rectangle, vmin


@dataclass(frozen=True)
class ValueSemigroup:
    r: int
    conductor: LatticePoint
    box_elements: frozenset[LatticePoint]
    plane: bool = False

    def __post_init__(self) -> None:
        zero = (0,) * self.r
        if zero not in self.box_elements:
            raise ValueError("0 must belong to the semigroup")
        if self.conductor not in self.box_elements:
            raise ValueError("conductor must belong to the semigroup")
        for e in self.box_elements:
            if len(e) != self.r or any(x < 0 for x in e):
                raise ValueError(f"invalid box element {e}")

    def contains(self, l: LatticePoint) -> bool:
        if len(l) != self.r:
            raise ValueError("arity mismatch")
        if any(x < 0 for x in l):
            return False
        return vmin(l, self.conductor) in self.box_elements

    def box_rectangle(self) -> Rectangle:
        return Rectangle((0,) * self.r, self.conductor)


def contains(s: ValueSemigroup, l: LatticePoint) -> bool:
    return s.contains(l)


def from_numerical_generators(gens: list[int]) -> ValueSemigroup:
    """Numerical semigroup ⟨gens⟩ (r = 1); requires gcd 1."""
    gens = sorted(set(int(g) for g in gens))
    if not gens or any(g <= 0 for g in gens):
        raise ValueError("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise ValueError("gcd of generators must be 1 (finite gap set)")
    bound = max(gens) * max(gens) + 1  # past any Frobenius number
    member = [False] * (bound + max(gens) + 1)
    member[0] = True
    for x in range(len(member)):
        if member[x]:
            for gg in gens:
                if x + gg < len(member):
                    member[x + gg] = True
    # conductor: least c with everything from c on in the semigroup
    c = 0
    for x in range(bound, -1, -1):
        if not member[x]:
            c = x + 1
            break
    box = frozenset((x,) for x in range(c + 1) if member[x])
    return ValueSemigroup(1, (c,), box)


def explicit_semigroup(
    r: int, conductor, box_elements, plane: bool = False
) -> ValueSemigroup:
    return ValueSemigroup(
        r, tuple(conductor), frozenset(tuple(e) for e in box_elements), plane
    )


def wedge(parts: list[ValueSemigroup]) -> ValueSemigroup:
    """One-point-union semigroup: 𝒮 = {0} ∪ ∏_j (𝒮_j ∖ {0})."""
    if len(parts) < 2:
        raise ValueError("wedge needs at least two parts")
    r = sum(p.r for p in parts)
    # a nonzero wedge element is positive in every coordinate, so each
    # conductor coordinate is at least 1 even for a smooth part
    conductor = tuple(max(x, 1) for p in parts for x in p.conductor)
    rect = Rectangle((0,) * r, conductor)
    box = set()
    for l in rect.points():
        if _wedge_member(parts, l):
            box.add(l)
    return ValueSemigroup(r, conductor, frozenset(box))


def _wedge_member(parts: list[ValueSemigroup], l: LatticePoint) -> bool:
    if all(x == 0 for x in l):
        return True
    pos = 0
    for p in parts:
        sub = l[pos : pos + p.r]
        pos += p.r
        if all(x == 0 for x in sub) or not p.contains(sub):
            return False
    return True


def delta(s: ValueSemigroup, h) -> int:
    """δ = |c| − h(c); for r = 1 this equals the gap count (asserted)."""
    d = sum(s.conductor) - h(s.conductor)
    if s.r == 1:
        gaps = sum(
            1 for x in range(s.conductor[0]) if not s.contains((x,))
        )
        assert gaps == d, f"gap count {gaps} != |c|-h(c) = {d}"
    return d


def _delgado_empty(s: ValueSemigroup, l: LatticePoint, i: int) -> bool:
    """True iff Δ_i(l) = {t ∈ 𝒮 : t_i = l_i, t_j > l_j ∀j≠i} is empty."""
    if l[i] < 0:
        return True
    ranges = []
    for j in range(s.r):
        if j == i:
            ranges.append([l[i]])
        else:
            lo = max(l[j] + 1, 0)
            hi = max(s.conductor[j], lo)
            ranges.append(range(lo, hi + 1))
    for t in product(*ranges):
        if s.contains(t):
            return False
    return True


def is_gorenstein(s: ValueSemigroup, h) -> bool:
    """Delgado symmetry: l ∈ 𝒮 ⇔ Δ(c−1−l) = ∅, over l ∈ R(−1, c); when
    symmetric, additionally asserts h(l) − h(c−l) = |l| − δ on R(0,c)."""
    c = s.conductor
    dlt = sum(c) - h(c)
    ranges = [range(-1, ci + 1) for ci in c]
    for l in product(*ranges):
        dual = tuple(ci - 1 - x for ci, x in zip(c, l))
        in_s = all(x >= 0 for x in l) and s.contains(l)
        delg_empty = all(_delgado_empty(s, dual, i) for i in range(s.r))
        if in_s != delg_empty:
            return False
    for l in Rectangle((0,) * s.r, c).points():
        cl = tuple(ci - x for ci, x in zip(c, l))
        assert h(l) - h(cl) == sum(l) - dlt, (
            f"Gorenstein duality h(l)-h(c-l)=|l|-delta fails at {l}"
        )
    return True


def validate_saturation(s: ValueSemigroup, raw_member, factor: int = 3) -> None:
    """Cross-check the saturation rule against raw membership (generator sums
    or the wedge product rule) on R(0, factor·c); abort on mismatch."""
    hi = tuple(max(factor * ci, ci + 2) for ci in s.conductor)
    for l in Rectangle((0,) * s.r, hi).points():
        if s.contains(l) != bool(raw_member(l)):
            raise AssertionError(
                f"saturation rule disagrees with raw membership at {l}"
            )
