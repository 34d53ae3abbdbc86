"""The example corpus: named curve-singularity models with their value
semigroups, raw membership rules (for cross-validation), and sensible default
computation depths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .hilbert import HilbertTable, WeightTable, hilbert_table, weight_table
from .lattice import LatticePoint, Rectangle
from .semigroup import (
    ValueSemigroup,
    explicit_semigroup,
    from_numerical_generators,
    wedge,
)


@dataclass(frozen=True)
class Curve:
    name: str
    semigroup: ValueSemigroup
    n_max: int
    description: str = ""

    def raw_member(self, l: LatticePoint) -> bool:
        raise NotImplementedError

    @property
    def r(self) -> int:
        return self.semigroup.r

    def tables(self, pad: int = 8) -> tuple[HilbertTable, WeightTable]:
        return _tables(self.semigroup, pad)


@lru_cache(maxsize=None)
def _tables(S: ValueSemigroup, pad: int) -> tuple[HilbertTable, WeightTable]:
    rect = Rectangle((0,) * S.r, tuple(x + pad for x in S.conductor))
    h = hilbert_table(S, rect)
    return h, weight_table(h)


@dataclass(frozen=True)
class NumericalCurve(Curve):
    generators: tuple[int, ...] = ()

    def raw_member(self, l) -> bool:
        # brute-force representation as a nonnegative generator combination
        target = l[0]
        reachable = {0}
        for g in self.generators:
            for x in sorted(reachable):
                y = x + g
                while y <= target:
                    reachable.add(y)
                    y += g
        return target in reachable


@dataclass(frozen=True)
class WedgeCurve(Curve):
    parts: tuple[Curve, ...] = ()

    def raw_member(self, l) -> bool:
        if all(x == 0 for x in l):
            return True
        pos = 0
        for p in self.parts:
            sub = l[pos : pos + p.r]
            pos += p.r
            if all(x == 0 for x in sub) or not p.raw_member(sub):
                return False
        return True


@dataclass(frozen=True)
class OrdinaryLinesCurve(Curve):
    """x^3 + y^3 = 0: three pairwise-transverse lines through the origin."""

    def raw_member(self, l) -> bool:
        if all(x == 0 for x in l):
            return True
        if all(x >= 2 for x in l):
            return True
        return sum(1 for x in l if x == 1) >= 2 and all(x >= 1 for x in l)


@dataclass(frozen=True)
class GapBlockCurve(Curve):
    """The family with 𝒮 = {0} ∪ {l ≥ c} for a chosen conductor c."""

    def raw_member(self, l) -> bool:
        return all(x == 0 for x in l) or all(
            x >= cx for x, cx in zip(l, self.semigroup.conductor)
        )


def smooth() -> Curve:
    return NumericalCurve(
        "smooth",
        from_numerical_generators([1]),
        n_max=4,
        description="smooth branch, semigroup <1>",
        generators=(1,),
    )


def cusp23() -> Curve:
    return NumericalCurve(
        "cusp23",
        from_numerical_generators([2, 3]),
        n_max=4,
        description="x^2 + y^3, semigroup <2,3>",
        generators=(2, 3),
    )


def cusp34() -> Curve:
    return NumericalCurve(
        "cusp34",
        from_numerical_generators([3, 4]),
        n_max=4,
        description="x^3 + y^4, semigroup <3,4>",
        generators=(3, 4),
    )


def sg457() -> Curve:
    return NumericalCurve(
        "sg457",
        from_numerical_generators([4, 5, 7]),
        n_max=4,
        description="branch with semigroup <4,5,7> (not a plane curve)",
        generators=(4, 5, 7),
    )


def sg378() -> Curve:
    return NumericalCurve(
        "sg378",
        from_numerical_generators([3, 7, 8]),
        n_max=4,
        description="branch with semigroup <3,7,8> (not a plane curve)",
        generators=(3, 7, 8),
    )


def ordinary_double() -> Curve:
    """x^2 + y^2 = 0: two transverse lines (wedge of two smooth branches)."""
    s1, s2 = smooth(), smooth()
    S = wedge([s1.semigroup, s2.semigroup])
    S = explicit_semigroup(S.r, S.conductor, S.box_elements, plane=True)
    return WedgeCurve(
        "x2y2",
        S,
        n_max=6,
        description="x^2 + y^2, two transverse lines",
        parts=(s1, s2),
    )


def ordinary_triple() -> Curve:
    S = explicit_semigroup(
        3,
        (2, 2, 2),
        [
            (0, 0, 0),
            (1, 1, 1),
            (2, 1, 1),
            (1, 2, 1),
            (1, 1, 2),
            (2, 2, 2),
        ],
        plane=True,
    )
    return OrdinaryLinesCurve(
        "x3y3", S, n_max=4, description="x^3 + y^3, three transverse lines"
    )


def double_cusp34() -> Curve:
    c1, c2 = cusp34(), cusp34()
    S = wedge([c1.semigroup, c2.semigroup])
    return WedgeCurve(
        "cusp34_wedge",
        S,
        n_max=2,
        description="one-point union of two <3,4> cusps",
        parts=(c1, c2),
    )


def gap_block(conductor) -> Curve:
    c = tuple(conductor)
    r = len(c)
    if any(x < 1 for x in c):
        raise ValueError("conductor coordinates must be positive")
    S = explicit_semigroup(r, c, [(0,) * r, c])
    return GapBlockCurve(
        f"gapblock{'x'.join(map(str, c))}",
        S,
        n_max=4,
        description=f"semigroup {{0}} ∪ {{l >= {c}}}",
    )


def corpus() -> list[Curve]:
    return [
        smooth(),
        cusp23(),
        cusp34(),
        sg457(),
        sg378(),
        ordinary_double(),
        ordinary_triple(),
        double_cusp34(),
        gap_block((2, 3)),
    ]


def by_name(name: str) -> Curve:
    for c in corpus():
        if c.name == name:
            return c
    raise KeyError(name)
