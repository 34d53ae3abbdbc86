"""Hilbert function h, weight function w, Poincaré series P, motivic series
P^m, and the Alexander-polynomial reconstruction route.

h is filled by dynamic programming on a rectangle based at 0 and extended
everywhere by the exact tail formula h(l) = h(min(l,c)) + Σ_i max(l_i−c_i, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .lattice import Cube, LatticePoint, Rectangle, unit, vadd, vmin
from .semigroup import ValueSemigroup, explicit_semigroup
from .series import (
    MultiLaurent,
    RationalSeries,
    divide_by_one_minus,
    _geom_multiply,
)


@dataclass
class HilbertTable:
    S: ValueSemigroup
    rect: Rectangle
    values: dict[LatticePoint, int]

    @property
    def conductor(self) -> LatticePoint:
        return self.S.conductor

    @property
    def delta(self) -> int:
        c = self.conductor
        return sum(c) - self(c)

    def __call__(self, l) -> int:
        l = tuple(l)
        v = self.values.get(l)
        if v is not None:
            return v
        cap = vmin(l, self.conductor)
        extra = sum(max(x - c, 0) for x, c in zip(l, self.conductor))
        return self.values[cap] + extra

    def hbar(self, l) -> int:
        return sum(l) - self(l)

    def hcirc(self, l) -> int:
        return self.delta - self.hbar(l)


def hilbert_table(S: ValueSemigroup, rect: Rectangle) -> HilbertTable:
    """Fill h on rect by the increment rule h(l+E_i) = h(l) + [∃s∈𝒮: s_i=l_i,
    s_j≥l_j (j≠i)], checking path independence along the way."""
    if any(rect.lo):
        raise ValueError("Hilbert rectangle must be based at 0")
    if not all(h >= c for h, c in zip(rect.hi, S.conductor)):
        raise ValueError("Hilbert rectangle must contain the conductor box")
    r = S.r
    c = S.conductor
    step_memo: dict[tuple[LatticePoint, int], int] = {}

    def step(prev: LatticePoint, i: int) -> int:
        key = (vmin(prev, c), i)
        v = step_memo.get(key)
        if v is not None:
            return v
        prev = key[0]
        ranges = []
        for j in range(r):
            if j == i:
                ranges.append([prev[i]])
            else:
                ranges.append(range(prev[j], max(prev[j], c[j]) + 1))
        found = 0
        for s in product(*ranges):
            if S.contains(s):
                found = 1
                break
        step_memo[key] = found
        return found

    values: dict[LatticePoint, int] = {}
    pts = sorted(rect.points(), key=lambda p: (sum(p), p))
    for l in pts:
        if not any(l):
            values[l] = 0
            continue
        cands = []
        for i in range(r):
            if l[i] > 0:
                prev = tuple(x - (1 if j == i else 0) for j, x in enumerate(l))
                cands.append((i, values[prev] + step(prev, i)))
        vals = {v for _, v in cands}
        if len(vals) != 1:
            raise AssertionError(
                f"path-inconsistent Hilbert increments at {l}: "
                + ", ".join(f"via E_{i + 1} -> {v}" for i, v in cands)
            )
        values[l] = vals.pop()
    return HilbertTable(S, rect, values)


@dataclass
class WeightTable:
    h: HilbertTable
    m_w: int = field(init=False)

    def __post_init__(self) -> None:
        self.m_w = min(self(l) for l in self.h.S.box_rectangle().points())

    @property
    def S(self) -> ValueSemigroup:
        return self.h.S

    @property
    def rect(self) -> Rectangle:
        return self.h.rect

    @property
    def delta(self) -> int:
        return self.h.delta

    def __call__(self, l) -> int:
        return 2 * self.h(l) - sum(l)

    def cube_weight(self, cube: Cube) -> int:
        return max(self(v) for v in cube.vertices())


def weight_table(h: HilbertTable) -> WeightTable:
    return WeightTable(h)


# ---------------------------------------------------------------------------
# Poincaré series P


def poincare_P(h: HilbertTable) -> RationalSeries:
    """P with coefficients p_l = Σ_{J ⊆ {1..r}} (−1)^{|J|+1} h(l+E_J).

    r = 1: the rational form (Σ_{s∈𝒮, s<c} t^s)·(1−t) + t^c over (1−t);
    r > 1: a polynomial supported in R(0, c).
    """
    S = h.S
    r = S.r
    if r == 1:
        t = ("t",)
        c = S.conductor[0]
        head = MultiLaurent(
            t, {(s,): 1 for s in range(c) if S.contains((s,))}
        )
        one_minus = MultiLaurent(t, {(0,): 1, (1,): -1})
        num = head * one_minus + MultiLaurent.monomial(t, (c,))
        return RationalSeries(num, (((1,), 1),))
    tvars = tuple(f"t{i + 1}" for i in range(r))
    terms: dict[tuple[int, ...], int] = {}
    for l in S.box_rectangle().points():
        p = -h(l)
        for k in range(1, r + 1):
            for J in combinations(range(r), k):
                lj = tuple(x + (1 if i in J else 0) for i, x in enumerate(l))
                p += (-1) ** (k - 1) * h(lj)
        if p:
            terms[l] = p
    return RationalSeries(MultiLaurent(tvars, terms))


# ---------------------------------------------------------------------------
# Motivic series P^m


def motivic_coefficient(h: HilbertTable, l) -> dict[int, int]:
    """p^m_l(q) as {q-exponent: coefficient}, via per-binomial exact division
    (q^a − q^b)/(1−q) = −(q^b + … + q^{a−1})."""
    r = h.S.r
    hl = h(l)
    out: dict[int, int] = {}
    for k in range(1, r + 1):
        for J in combinations(range(r), k):
            lj = tuple(x + (1 if i in J else 0) for i, x in enumerate(l))
            a = h(lj)
            if a < hl:
                raise AssertionError("h not monotone — invalid table")
            sign = (-1) ** k
            for e in range(hl, a):
                out[e] = out.get(e, 0) - sign
    return {e: c for e, c in out.items() if c}


def motivic_pm(h: HilbertTable) -> RationalSeries:
    """P^m(t, q) in rational normal form with denominator ∏(1 − t_i q).

    The numerator is certified supported in R(0, c): the computation runs on
    R(0, c+2) and the shell beyond c must vanish identically (abort if not).
    The t-support of the series is asserted to be exactly 𝒮.
    """
    S = h.S
    r = S.r
    c = S.conductor
    tvars = tuple(f"t{i + 1}" for i in range(r))
    allvars = tvars + ("q",)
    hi = tuple(x + 2 for x in c)
    trunc_terms: dict[tuple[int, ...], int] = {}
    for l in Rectangle((0,) * r, hi).points():
        coeffs = motivic_coefficient(h, l)
        in_s = S.contains(l)
        if bool(coeffs) != in_s:
            raise AssertionError(
                f"motivic support disagrees with the semigroup at {l}"
            )
        for e, v in coeffs.items():
            trunc_terms[l + (e,)] = v
    trunc = MultiLaurent(allvars, trunc_terms)
    num = trunc
    one = MultiLaurent.const(allvars, 1)
    for i in range(r):
        mono = tuple(1 if j == i else 0 for j in range(r)) + (1,)
        num = num * (one - MultiLaurent.monomial(allvars, mono))
    exact = num.filter(lambda e: all(e[i] <= c[i] + 2 for i in range(r)))
    shell = exact.filter(lambda e: any(e[i] > c[i] for i in range(r)))
    if not shell.is_zero():
        raise AssertionError(
            "motivic numerator does not vanish beyond the conductor box"
        )
    kept = exact.filter(lambda e: all(e[i] <= c[i] for i in range(r)))
    denom = tuple(
        ((tuple(1 if j == i else 0 for j in range(r)) + (1,)), 1)
        for i in range(r)
    )
    return RationalSeries(kept, denom)


# ---------------------------------------------------------------------------
# Alexander route


def hilbert_from_alexander(
    delta_poly: MultiLaurent,
    intersections,
    rect: Rectangle,
) -> tuple[HilbertTable, ValueSemigroup]:
    """Reconstruct h (and the value semigroup) of a plane curve from its
    Alexander polynomial and pairwise intersection numbers.

    ``delta_poly`` is Δ in variables t1..tr (for r = 1 the full P equals
    Δ/(1−t)).  Every branch-subset series P_{C_J} is obtained by repeated
    Torres reduction — all removal orders are computed and must agree — and
    H|_{≥0} = (1/∏(1−t_i)) Σ_J (−1)^{|J|−1} (∏_{i∈J} t_i) P_{C_J}.
    """
    r = rect.r
    tvars = tuple(f"t{i + 1}" for i in range(r))
    if delta_poly.vars != tvars:
        raise ValueError(f"Alexander polynomial must use variables {tvars}")
    inter = [[None] * r for _ in range(r)]
    for i in range(r):
        for j in range(r):
            if i != j:
                v = intersections[i][j]
                if not isinstance(v, int) or v <= 0:
                    raise ValueError(
                        "intersection numbers must be positive integers"
                    )
                inter[i][j] = v

    def in_rect(e) -> bool:
        return all(0 <= x <= h for x, h in zip(e, rect.hi))

    # polynomial P_{C_K} for |K| >= 2 (equals the Alexander polynomial of the
    # sublink); truncated series for |K| = 1
    polys: dict[frozenset[int], MultiLaurent] = {}
    series1: dict[int, MultiLaurent] = {}
    full = frozenset(range(r))
    if r == 1:
        series1[0] = _geom_multiply(delta_poly, (1,), in_rect).filter(in_rect)
    else:
        polys[full] = delta_poly
        for size in range(r - 1, 0, -1):
            for K in map(frozenset, combinations(range(r), size)):
                results = []
                for j in sorted(full - K):
                    sup = K | {j}
                    if sup not in polys:
                        continue
                    at_one = _set_var_one(polys[sup], j)
                    mono = tuple(
                        inter[j][k] if k in K else 0 for k in range(r)
                    )
                    if size >= 2:
                        q = divide_by_one_minus(at_one, mono)
                        if q is None:
                            raise AssertionError(
                                "Torres reduction not exact — inconsistent "
                                f"Alexander data at subset {sorted(K)}"
                            )
                        results.append(q)
                    else:
                        results.append(
                            _geom_multiply(at_one, mono, in_rect).filter(in_rect)
                        )
                first = results[0]
                for other in results[1:]:
                    if other != first:
                        raise AssertionError(
                            "Torres reductions disagree between removal "
                            f"orders at subset {sorted(K)}"
                        )
                if size >= 2:
                    polys[K] = first
                else:
                    series1[next(iter(K))] = first

    acc = MultiLaurent.zero(tvars)
    for size in range(1, r + 1):
        for K in map(frozenset, combinations(range(r), size)):
            pk = series1[next(iter(K))] if size == 1 else polys[K]
            tj = MultiLaurent.monomial(
                tvars, tuple(1 if i in K else 0 for i in range(r))
            )
            acc = acc + (pk * tj).scale((-1) ** (size - 1))
    acc = acc.filter(in_rect)
    for i in range(r):
        acc = _geom_multiply(
            acc, tuple(1 if j == i else 0 for j in range(r)), in_rect
        )
    hvals = {l: acc.coeff(l) for l in rect.points()}

    # validate increments and path independence
    for l in rect.points():
        for i in range(r):
            li = vadd(l, unit(r, i))
            if rect.contains_point(li):
                d = hvals[li] - hvals[l]
                if d not in (0, 1):
                    raise AssertionError(
                        f"reconstructed h has increment {d} at {l} -> {li}"
                    )
    if hvals[(0,) * r] != 0:
        raise AssertionError("reconstructed h(0) != 0")

    # recover the semigroup and conductor
    inner = Rectangle((0,) * r, tuple(x - 1 for x in rect.hi))
    members = set()
    for l in inner.points():
        if all(
            hvals[vadd(l, unit(r, i))] > hvals[l] for i in range(r)
        ):
            members.add(l)
    candidates = [
        s
        for s in members
        if all(p in members for p in Rectangle(s, inner.hi).points())
    ]
    if not candidates:
        raise AssertionError(
            "no conductor candidate found — raise the reconstruction rectangle"
        )
    cmin = tuple(min(s[i] for s in candidates) for i in range(r))
    if cmin not in candidates:
        raise AssertionError(
            "conductor is not unique-minimal — inconsistent Alexander data"
        )
    box = frozenset(s for s in members if all(x <= y for x, y in zip(s, cmin)))
    S = explicit_semigroup(r, cmin, box, plane=True)
    table = hilbert_table(S, rect)
    for l in rect.points():
        if table.values[l] != hvals[l]:
            raise AssertionError(
                f"Alexander route disagrees with semigroup route at {l}"
            )
    return table, S


def _set_var_one(poly: MultiLaurent, j: int) -> MultiLaurent:
    def fn(e, c):
        ne = list(e)
        ne[j] = 0
        return (tuple(ne), c)

    return poly.map_terms(poly.vars, fn)
