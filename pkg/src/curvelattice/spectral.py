"""Spectral pages of the lattice filtration, PE series, local complexes,
HFL-style rank tables, and the Y shift operators.

Pages are extracted from a single integer column reduction of each boundary
map, with columns and rows ordered by the filtration (deepest level first).
Every pairing (column cell at level ℓc, pivot row cell at level ℓr) encodes a
differential d^{ℓr−ℓc}; page ranks and differential ranks are read off the
pairing multiset without ever forming quotient modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .hilbert import HilbertTable, WeightTable, motivic_coefficient
from .homology import ChainComplex, HomologyBasis, HomologyGroup, homology
from .lattice import Cube, LatticePoint, Rectangle, faces, make_cube, unit, vadd
from .lattice_homology import SnComplex, working_rectangle
from .linalg import reduce_filtered, solve_frac
from .series import MultiLaurent, RationalSeries, rationalize


def _dot(a, v) -> int:
    return sum(x * y for x, y in zip(a, v))


class FilteredPages:
    """All pages E^k of the level filtration of one sublevel complex S_n.

    ``weights`` generalizes the level of a cube from |base| to a·base for a
    positive integer vector a (the default is all ones).
    """

    def __init__(
        self,
        w: WeightTable,
        n: int,
        rect: Rectangle,
        weights=None,
        cubes=None,
    ) -> None:
        self.w = w
        self.n = n
        r = w.S.r
        self.a = tuple(weights) if weights else (1,) * r
        if any(x <= 0 for x in self.a):
            raise ValueError("filtration weights must be positive")
        if cubes is None:
            cubes = [c for c in rect.cubes() if w.cube_weight(c) <= n]
        self.by_dim: dict[int, list[Cube]] = {}
        for c in cubes:
            self.by_dim.setdefault(c.dim, []).append(c)
        lvl = lambda c: _dot(self.a, c.base)  # noqa: E731
        self.level = lvl
        for m in self.by_dim:
            self.by_dim[m].sort(key=lambda c: (-lvl(c), c.base, c.dirs))
        index = {
            c: i for m in self.by_dim for i, c in enumerate(self.by_dim[m])
        }
        self.counts: dict[tuple[int, int], int] = {}
        for m, cs in self.by_dim.items():
            for c in cs:
                key = (m, lvl(c))
                self.counts[key] = self.counts.get(key, 0) + 1
        # pairs[m]: (level of m-cell column, level of (m-1)-cell pivot row)
        self.pairs: dict[int, list[tuple[int, int]]] = {}
        for m in sorted(self.by_dim):
            if m == 0:
                continue
            cols = []
            for c in self.by_dim[m]:
                col: dict[int, int] = {}
                for sign, f in faces(c):
                    i = index.get(f)
                    if i is not None and f.dim == m - 1:
                        col[i] = col.get(i, 0) + sign
                cols.append({i: v for i, v in col.items() if v})
            pairs, _ = reduce_filtered(cols)
            plist = []
            for j, row in pairs:
                lc = lvl(self.by_dim[m][j])
                lr = lvl(self.by_dim[m - 1][row])
                assert lr >= lc, "boundary lowered the filtration level"
                plist.append((lc, lr))
            self.pairs[m] = plist
        levels = [d for (_m, d) in self.counts]
        self.min_level = min(levels) if levels else 0
        self.max_level = max(levels) if levels else 0

    # -- pages --------------------------------------------------------------
    def page(self, k: int) -> dict[tuple[int, int], int]:
        """Ranks of E^k at (p, q) = (−d, d+m); only nonzero entries appear."""
        out: dict[tuple[int, int], int] = {}
        for (m, d), cnt in self.counts.items():
            dead = sum(
                1
                for lc, lr in self.pairs.get(m, [])
                if lc == d and lr <= d + k - 1
            )
            dead += sum(
                1
                for lc, lr in self.pairs.get(m + 1, [])
                if lr == d and lc >= d - k + 1
            )
            rk = cnt - dead
            if rk:
                out[(-d, d + m)] = rk
        return out

    def differential_ranks(self, k: int) -> dict[tuple[int, int], int]:
        """Rank of d^k leaving each (p, q) of E^k."""
        out: dict[tuple[int, int], int] = {}
        for m, plist in self.pairs.items():
            for lc, lr in plist:
                if lr - lc == k:
                    key = (-lc, lc + m)
                    out[key] = out.get(key, 0) + 1
        return out

    def infinity(self) -> dict[tuple[int, int], int]:
        return self.page(self.max_level - self.min_level + 2)

    def k_invariant(self) -> int:
        """Least k ≥ 1 with E^k = E^∞, certified entrywise: every nonzero
        higher differential would strictly drop some entry's rank, so rank
        equality with E^∞ proves degeneration."""
        inf = self.infinity()
        k = 1
        while self.page(k) != inf:
            k += 1
        return k


def pages(
    w: WeightTable, n: int, rect: Rectangle, weights=None, cubes=None
) -> FilteredPages:
    return FilteredPages(w, n, rect, weights, cubes)


# ---------------------------------------------------------------------------
# Local complexes (the E^1 building blocks)


def local_cubes(
    w: WeightTable, l: LatticePoint, n: int, rect: Rectangle | None = None
) -> list[Cube]:
    """Cubes with base exactly l and weight ≤ n (optionally clipped to rect)."""
    r = w.S.r
    out = []
    for size in range(r + 1):
        for dirs in _subsets(r, size):
            c = make_cube(l, dirs)
            if rect is not None and not rect.contains_cube(c):
                continue
            if w.cube_weight(c) <= n:
                out.append(c)
    return out


def _subsets(r: int, size: int):
    from itertools import combinations

    return combinations(range(r), size)


def local_complex(
    w: WeightTable, l: LatticePoint, n: int, rect: Rectangle | None = None
) -> ChainComplex:
    """Quotient complex spanned by base-l cubes: faces changing the base are
    dropped, which realizes the level-|l| slice of the filtration of S_n."""
    return ChainComplex(local_cubes(w, l, n, rect))


def local_homology(
    w: WeightTable, l: LatticePoint, n: int, rect: Rectangle | None = None
) -> list[HomologyGroup]:
    cubes = local_cubes(w, l, n, rect)
    if not cubes:
        return []
    return homology(ChainComplex(cubes))


def check_local_concentration(
    w: WeightTable, l: LatticePoint, n_lo: int, n_hi: int
) -> None:
    """H_b of the local complex at l is nonzero only when n = w(l) + b.

    This also proves U = 0 on E^1: the inclusion-induced map
    H_b(local, n) → H_b(local, n+1) has source and target supported at
    different n, so one side always vanishes.
    """
    wl = w(l)
    for n in range(n_lo, n_hi + 1):
        for b, grp in enumerate(local_homology(w, l, n)):
            if (grp.rank or grp.torsion) and n != wl + b:
                raise AssertionError(
                    f"local homology at l={l} lives at n={n}, b={b} "
                    f"(expected n = w(l)+b = {wl + b})"
                )


def e1_from_locals(
    w: WeightTable, n: int, rect: Rectangle
) -> dict[tuple[int, int], int]:
    """E^1 ranks assembled from per-base local homology; torsion aborts."""
    out: dict[tuple[int, int], int] = {}
    for l in rect.points():
        cubes = local_cubes(w, l, n, rect)
        if not cubes:
            continue
        d = sum(l)
        for b, grp in enumerate(homology(ChainComplex(cubes))):
            if grp.torsion:
                raise AssertionError(f"torsion on E^1 at base {l}: {grp}")
            if grp.rank:
                key = (-d, d + b)
                out[key] = out.get(key, 0) + grp.rank
    return out


# ---------------------------------------------------------------------------
# PE series


def _pe_vars() -> tuple[str, ...]:
    return ("T", "Q", "h")


def pe_series(
    w: WeightTable,
    n_max: int,
    k: int | None = None,
    weights=None,
    window: int | None = None,
) -> RationalSeries:
    """PE_k(T, Q, h) = Σ_n Σ rank E^k_{−d, d+m}(S_n) T^d Q^n h^m over
    (1 − TQ)^r, with k = None meaning the stable page E^∞.

    Coefficients for Q-exponents ≤ n_max are exact; the rational form is
    certified (or flagged truncated) by the vanishing-window rule.
    """
    r = w.S.r
    rect = working_rectangle(w, n_max)
    vars_ = _pe_vars()
    terms: dict[tuple[int, int, int], int] = {}
    for n in range(w.m_w, n_max + 1):
        fp = FilteredPages(w, n, rect, weights)
        table = fp.infinity() if k is None else fp.page(k)
        for (p, q), rk in table.items():
            d = -p
            m = q - d
            key = (d, n, m)
            terms[key] = terms.get(key, 0) + rk
    trunc = MultiLaurent(vars_, terms)
    denom = (((1, 1, 0), r),)
    return rationalize(
        trunc, denom, "Q", n_max, r + 1 if window is None else window
    )


def k_table(
    w: WeightTable, n_lo: int, n_hi: int, weights=None
) -> dict[int, int]:
    """k(n) = least page with E^k(S_n) = E^∞(S_n), per level n."""
    rect = working_rectangle(w, n_hi)
    return {
        n: FilteredPages(w, n, rect, weights).k_invariant()
        for n in range(n_lo, n_hi + 1)
    }


def bold_pe1(w: WeightTable, h: HilbertTable) -> RationalSeries:
    """Multivariable PE₁(T_1..T_r, Q, h) over ∏(1 − T_i Q).

    Computed twice — from local homology ranks and from the motivic
    coefficients p^m_{l,k} via rank H_b(local at l) = (−1)^b · (coefficient of
    q^{h(l)+b} in p^m_l) — and the two series must agree term by term.
    The numerator must be supported in R(0, c) (shell vanishing is enforced).
    """
    S = w.S
    r = S.r
    c = S.conductor
    tvars = ("T",) if r == 1 else tuple(f"T{i + 1}" for i in range(r))
    vars_ = tvars + ("Q", "h")
    hi = tuple(x + 2 for x in c)
    route_a: dict[tuple[int, ...], int] = {}
    route_b: dict[tuple[int, ...], int] = {}
    for l in Rectangle((0,) * r, hi).points():
        wl = w(l)
        groups = local_homology(w, l, wl + r)
        for b, grp in enumerate(groups):
            if grp.torsion:
                raise AssertionError(f"torsion in local homology at {l}")
        # route A: each degree b at its native level n = w(l) + b
        for b in range(r + 1):
            gs = local_homology(w, l, wl + b)
            rk = gs[b].rank if b < len(gs) else 0
            if rk:
                route_a[l + (wl + b, b)] = rk
        # route B: motivic coefficients
        hl = h(l)
        for e, v in motivic_coefficient(h, l).items():
            b = e - hl
            if b < 0:
                raise AssertionError(f"motivic support below h(l) at {l}")
            coeff = v if b % 2 == 0 else -v
            if coeff:
                route_b[l + (wl + b, b)] = (
                    route_b.get(l + (wl + b, b), 0) + coeff
                )
    ml_a = MultiLaurent(vars_, route_a)
    ml_b = MultiLaurent(vars_, route_b)
    if ml_a != ml_b:
        diff = ml_a - ml_b
        raise AssertionError(
            f"local-homology and motivic routes disagree: {diff}"
        )
    num = ml_a
    one = MultiLaurent.const(vars_, 1)
    denom = []
    for i in range(r):
        mono = tuple(1 if j == i else 0 for j in range(r)) + (1, 0)
        denom.append((mono, 1))
        num = num * (one - MultiLaurent.monomial(vars_, mono))
    shell = num.filter(
        lambda e: any(e[i] > c[i] for i in range(r))
        and all(e[i] <= c[i] + 2 for i in range(r))
    )
    if not shell.is_zero():
        raise AssertionError(
            "multivariable PE1 numerator does not vanish beyond the "
            "conductor box"
        )
    kept = num.filter(lambda e: all(e[i] <= c[i] for i in range(r)))
    return RationalSeries(kept, tuple(denom))


def cube_euler_weight_series(
    w: WeightTable, n_cap: int, with_T: bool = False
) -> MultiLaurent:
    """Σ_□ (−1)^{dim □} Q^{w(□)} (optionally · T^{|base □|}) over all cubes of
    weight ≤ n_cap; exact because every such cube lies in the working
    rectangle."""
    rect = working_rectangle(w, n_cap)
    vars_ = ("T", "Q") if with_T else ("Q",)
    terms: dict[tuple[int, ...], int] = {}
    for c in rect.cubes():
        n = w.cube_weight(c)
        if n > n_cap:
            continue
        key = (sum(c.base), n) if with_T else (n,)
        terms[key] = terms.get(key, 0) + (-1) ** c.dim
    return MultiLaurent(vars_, terms)


# ---------------------------------------------------------------------------
# HFL-style rank tables


def hfl_ranks(w: WeightTable, h: HilbertTable, l) -> dict:
    """Ranks in each Maslov degree at one Alexander multi-index l.

    For a plane-curve semigroup these are link Floer ranks of the algebraic
    link; otherwise the same construction is reported as a formal analogue.
    """
    l = tuple(l)
    wl = w(l)
    hl = h(l)
    ranks: dict[int, int] = {}
    for b in range(w.S.r + 1):
        gs = local_homology(w, l, wl + b)
        rk = gs[b].rank if b < len(gs) else 0
        if rk:
            ranks[-2 * hl - b] = rk
    return {
        "alexander": l,
        "label": "HFL-minus" if w.S.plane else "formal HFL analogue",
        "ranks": ranks,
    }


# ---------------------------------------------------------------------------
# Y operators and the first differential


def local_basis(
    w: WeightTable, l: LatticePoint, n: int, b: int
) -> HomologyBasis:
    return HomologyBasis(ChainComplex(local_cubes(w, l, n)), b)


def y_matrix(
    w: WeightTable, l: LatticePoint, n: int, i: int, b: int
) -> list[list[int]]:
    """Matrix of Y_i : H_b(local at l, S_n) → H_b(local at l+E_i, S_{n+1})."""
    r = w.S.r
    src = local_basis(w, l, n, b)
    tgt = local_basis(w, vadd(l, unit(r, i)), n + 1, b)
    from .homology import induced_map

    def f(cube: Cube):
        return [(1, make_cube(vadd(cube.base, unit(r, i)), cube.dirs))]

    return induced_map(f, src, tgt)


def d1_matrices(
    w: WeightTable, l: LatticePoint, n: int, b: int
) -> dict[LatticePoint, list[list[int]]]:
    """Connecting differential d¹ out of H_b(local at l, S_n), one matrix per
    target base l+E_i: take full cubical boundaries of the cycle
    representatives and keep the base-raising terms."""
    if b < 1:
        return {}
    r = w.S.r
    src = local_basis(w, l, n, b)
    out: dict[LatticePoint, list[list[int]]] = {}
    for i in range(r):
        li = vadd(l, unit(r, i))
        tgt = local_basis(w, li, n, b - 1)
        cols = []
        for rep in src.reps:
            terms = []
            for coeff, cube in zip(rep, src.cells):
                if not coeff:
                    continue
                for sign, f in faces(cube):
                    if f.base == li:
                        terms.append((coeff * sign, f))
            cols.append(tgt.express(tgt.chain_vector(terms)))
        out[li] = [
            [cols[j][k] for j in range(len(cols))] for k in range(tgt.rank)
        ]
    return out


def check_y_commutes_with_d1(
    w: WeightTable, l: LatticePoint, n: int, b: int
) -> None:
    """Y_i ∘ d¹ = d¹ ∘ Y_i out of H_b(local at l, S_n), per target base."""
    from .linalg import matmul

    r = w.S.r
    d1_n = d1_matrices(w, l, n, b)
    for i in range(r):
        li = vadd(l, unit(r, i))
        yi = y_matrix(w, l, n, i, b)
        d1_after = d1_matrices(w, li, n + 1, b)
        for j in range(r):
            lj = vadd(l, unit(r, j))
            target = vadd(li, unit(r, j))
            # path 1: d1 then Y_i
            m1 = None
            if lj in d1_n:
                yij = y_matrix(w, lj, n, i, b - 1)
                m1 = matmul(yij, d1_n[lj])
            # path 2: Y_i then d1
            m2 = None
            if target in d1_after:
                m2 = matmul(d1_after[target], yi)

            def zeroish(m):
                return m is None or all(all(x == 0 for x in row) for row in m)

            if zeroish(m1) and zeroish(m2):
                continue
            if m1 is None or m2 is None or m1 != m2:
                raise AssertionError(
                    f"Y_{i + 1} does not commute with d1 at l={l}, n={n}, "
                    f"b={b}, target {target}: {m1} vs {m2}"
                )


def y_difference_nullhomotopic(
    w: WeightTable,
    rect: Rectangle,
    l: LatticePoint,
    n: int,
    b: int,
    i: int,
    j: int,
) -> bool:
    """Whether (Y_i − Y_j)(α) bounds, over Q, inside S_{n+1} ∩ {level ≥ |l|}
    for every generator α of H_b(local at l, S_n) — the mechanism behind
    second-page collapse of the Y-action differences."""
    r = w.S.r
    src = local_basis(w, l, n, b)
    d = sum(l)
    cubes = [
        c
        for c in rect.cubes()
        if w.cube_weight(c) <= n + 1 and sum(c.base) >= d
    ]
    cc = ChainComplex(cubes)
    bd = cc.boundary_matrix(b + 1)
    for rep in src.reps:
        vec = [0] * cc.n_cells(b)
        for coeff, cube in zip(rep, src.cells):
            if not coeff:
                continue
            for di, dj, sgn in ((i, j, 1), (j, i, -1)):
                shifted = make_cube(vadd(cube.base, unit(r, di)), cube.dirs)
                loc = cc.index.get(shifted)
                if loc is not None:
                    vec[loc[1]] += sgn * coeff
        if any(vec):
            if not bd or solve_frac(bd, vec) is None:
                return False
    return True


# ---------------------------------------------------------------------------
# r = 1 decorated-root data


def y_chains_r1(S) -> list[tuple[int, int | None]]:
    """Maximal runs of consecutive semigroup elements; Y([s]) = [s+1] exactly
    when s+1 is in the semigroup, so these runs are the cyclic Z[Y]-chains.
    The last run (start, None) is infinite (starts at the conductor or the
    last run head below it)."""
    if S.r != 1:
        raise ValueError("numerical-semigroup chains need r = 1")
    c = S.conductor[0]
    elems = [s for s in range(c + 1) if S.contains((s,))]
    runs: list[list[int]] = []
    for s in elems:
        if runs and runs[-1][-1] == s - 1:
            runs[-1].append(s)
        else:
            runs.append([s])
    out: list[tuple[int, int | None]] = []
    for run in runs[:-1]:
        out.append((run[0], len(run)))
    out.append((runs[-1][0], None))
    return out


def free_rank_pattern(
    w: WeightTable, l0: LatticePoint, steps: int = 2
) -> dict[int, int]:
    """Rank of H_b(local at l0, native level) for each b, after asserting the
    same ranks persist one Y-step in every direction (free-module behaviour)."""
    r = w.S.r
    wl = w(l0)
    out: dict[int, int] = {}
    for b in range(r):
        gs = local_homology(w, l0, wl + b)
        rk = gs[b].rank if b < len(gs) else 0
        if rk:
            out[b] = rk
        for i in range(r):
            li = vadd(l0, unit(r, i))
            gi = local_homology(w, li, w(li) + b)
            rki = gi[b].rank if b < len(gi) else 0
            if rki != rk:
                raise AssertionError(
                    f"Y_{i + 1} step changes local rank at {l0}, b={b}: "
                    f"{rk} -> {rki}"
                )
    return out
