"""Lattice points, axis-aligned unit cubes (l, I), and rectangles in Z^r.

A cube is keyed by its base vertex ``l`` (the componentwise-minimal vertex)
and a sorted tuple of direction indices ``I`` (0-based).  The orientation is
fixed by the increasing index order of ``I``; all boundary matrices downstream
inherit a deterministic basis from the lexicographic enumeration order used
here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, NamedTuple

LatticePoint = tuple[int, ...]


def vadd(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return tuple(x - y for x, y in zip(a, b))


def vmin(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return tuple(min(x, y) for x, y in zip(a, b))


def vmax(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    return tuple(max(x, y) for x, y in zip(a, b))


def vleq(a: LatticePoint, b: LatticePoint) -> bool:
    return all(x <= y for x, y in zip(a, b))


def vsum(a: LatticePoint) -> int:
    return sum(a)


def unit(r: int, i: int) -> LatticePoint:
    return tuple(1 if j == i else 0 for j in range(r))


class Cube(NamedTuple):
    """An oriented unit cube: base vertex plus a sorted tuple of directions."""

    base: LatticePoint
    dirs: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.dirs)

    @property
    def top(self) -> LatticePoint:
        return tuple(
            x + (1 if i in self.dirs else 0) for i, x in enumerate(self.base)
        )

    def vertices(self) -> Iterator[LatticePoint]:
        for choice in product((0, 1), repeat=len(self.dirs)):
            v = list(self.base)
            for bit, i in zip(choice, self.dirs):
                v[i] += bit
            yield tuple(v)


def make_cube(base: LatticePoint, dirs) -> Cube:
    return Cube(tuple(base), tuple(sorted(dirs)))


def faces(cube: Cube) -> list[tuple[int, Cube]]:
    """Signed codimension-1 faces: ∂(l,I) = Σ_k (−1)^k [(l+E_{i_k}, I∖i_k) − (l, I∖i_k)]."""
    r = len(cube.base)
    out: list[tuple[int, Cube]] = []
    for k, i in enumerate(cube.dirs):
        rest = tuple(j for j in cube.dirs if j != i)
        sign = -1 if k % 2 else 1
        out.append((sign, Cube(vadd(cube.base, unit(r, i)), rest)))
        out.append((-sign, Cube(cube.base, rest)))
    return out


@dataclass(frozen=True)
class Rectangle:
    """The lattice rectangle [lo, hi] ⊂ Z^r."""

    lo: LatticePoint
    hi: LatticePoint

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise ValueError("lo and hi have different arity")
        if not vleq(self.lo, self.hi):
            raise ValueError("rectangle requires lo <= hi componentwise")

    @property
    def r(self) -> int:
        return len(self.lo)

    def contains_point(self, p: LatticePoint) -> bool:
        return vleq(self.lo, p) and vleq(p, self.hi)

    def contains_cube(self, cube: Cube) -> bool:
        return self.contains_point(cube.base) and self.contains_point(cube.top)

    def points(self) -> Iterator[LatticePoint]:
        ranges = [range(a, b + 1) for a, b in zip(self.lo, self.hi)]
        yield from product(*ranges)

    def cubes(self, dim: int | None = None) -> Iterator[Cube]:
        """All cubes with every vertex in the rectangle, in lexicographic order
        of (base, direction set)."""
        r = self.r
        dims = range(r + 1) if dim is None else [dim]
        for base in self.points():
            for q in dims:
                for dirs in combinations(range(r), q):
                    c = Cube(base, dirs)
                    if vleq(c.top, self.hi):
                        yield c

    def cube_count(self) -> int:
        n = 1
        for a, b in zip(self.lo, self.hi):
            n *= 2 * (b - a) + 1
        return n


def enumerate_cubes(rect: Rectangle) -> list[Cube]:
    return list(rect.cubes())
