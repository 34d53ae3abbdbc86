"""Oracle test for the pairing-based spectral pages.

An independent, textbook implementation over Q (via sympy):

    Z^k_{d,m} = {x supported on level ≥ d cells of degree m : ∂x is supported
                 on level ≥ d+k cells},
    E^k at (−d, d+m) = Z^k_{d,m} / (Z^{k−1}_{d+1,m} + ∂ Z^{k−1}_{d−k+1,m+1})

computed with exact rational nullspaces and ranks, compared entrywise against
the pairing-based extraction on real sublevel complexes.
"""

import pytest
import sympy

import curvelattice as cl
from curvelattice.lattice import faces
from curvelattice.spectral import FilteredPages


def oracle_pages(cubes, level_of, kmax):
    """dict k -> {(p, q): rank} for k = 1..kmax, over Q."""
    by_dim = {}
    for c in cubes:
        by_dim.setdefault(c.dim, []).append(c)
    for m in by_dim:
        by_dim[m].sort()
    pos = {c: i for m in by_dim for i, c in enumerate(by_dim[m])}
    bmats = {}
    for m in sorted(by_dim):
        rows = len(by_dim.get(m - 1, []))
        mat = sympy.zeros(rows, len(by_dim[m]))
        for j, c in enumerate(by_dim[m]):
            for sign, f in faces(c):
                if f in pos and f.dim == m - 1:
                    mat[pos[f], j] += sign
        bmats[m] = mat
    levels = sorted({level_of(c) for c in cubes})

    def z_basis(d, m, k):
        """Basis of Z^k_{d,m} as full-coordinate sympy vectors."""
        cells = by_dim.get(m, [])
        idx = [i for i, c in enumerate(cells) if level_of(c) >= d]
        if not idx:
            return []
        prev = by_dim.get(m - 1, [])
        bad_rows = [i for i, c in enumerate(prev) if level_of(c) < d + k]
        sub = sympy.Matrix(
            [[bmats[m][i, j] for j in idx] for i in bad_rows]
        ) if bad_rows else sympy.zeros(0, len(idx))
        null = sub.nullspace() if sub.rows else [
            sympy.eye(len(idx))[:, j] for j in range(len(idx))
        ]
        out = []
        for v in null:
            full = sympy.zeros(len(cells), 1)
            for a, j in enumerate(idx):
                full[j, 0] = v[a]
            out.append(full)
        return out

    pages = {}
    for k in range(1, kmax + 1):
        table = {}
        for m in sorted(by_dim):
            for d in levels:
                zk = z_basis(d, m, k)
                if not zk:
                    continue
                border = [v for v in z_basis(d + 1, m, k - 1)]
                for y in z_basis(d - k + 1, m + 1, k - 1):
                    border.append(bmats[m + 1] * y)
                ncells = len(by_dim[m])
                cols = zk + border
                big = sympy.Matrix([[c[i, 0] for c in cols]
                                    for i in range(ncells)])
                rk_total = big.rank()
                rk_border = (
                    sympy.Matrix(
                        [[c[i, 0] for c in border] for i in range(ncells)]
                    ).rank()
                    if border
                    else 0
                )
                # dim (Z + B) = dim Z + dim B − dim(Z ∩ B); B ⊆ Z here, so
                # rank of the concatenation equals dim Z
                dim_z = sympy.Matrix(
                    [[c[i, 0] for c in zk] for i in range(ncells)]
                ).rank()
                assert rk_total == dim_z, "border subspace escaped Z^k"
                rk = dim_z - rk_border
                if rk:
                    table[(-d, d + m)] = table.get((-d, d + m), 0) + rk
        pages[k] = table
    return pages


CASES = []


def _case(name, w_builder, n, rect_builder):
    CASES.append((name, w_builder, n, rect_builder))


def _setup_cases():
    def wedge_tables():
        return cl.double_cusp34().tables()

    for name, curve, ns in [
        ("cusp34", cl.cusp34, (-1, 0, 1, 2)),
        ("x2y2", cl.ordinary_double, (0, 1, 2)),
        ("x3y3", cl.ordinary_triple, (0, 1)),
        ("gap23", lambda: cl.gap_block((2, 3)), (-3, -2, 0)),
    ]:
        for n in ns:
            CASES.append((name, curve, n))
    CASES.append(("cusp34_wedge", cl.double_cusp34, -2))
    CASES.append(("cusp34_wedge", cl.double_cusp34, -1))


_setup_cases()


@pytest.mark.parametrize(
    "name,curve,n", CASES, ids=[f"{c[0]}_n{c[2]}" for c in CASES]
)
def test_pairing_pages_match_textbook_oracle(name, curve, n):
    _, w = curve().tables()
    rect = cl.working_rectangle(w, n)
    cubes = [c for c in rect.cubes() if w.cube_weight(c) <= n]
    if not cubes:
        pytest.skip("empty sublevel complex")
    fp = FilteredPages(w, n, rect)
    kmax = fp.max_level - fp.min_level + 2
    oracle = oracle_pages(cubes, lambda c: sum(c.base), min(kmax, 6))
    for k in oracle:
        assert fp.page(k) == oracle[k], f"page E^{k} mismatch at n={n}"
    # E^infinity from the pairing agrees with the deepest oracle page when
    # the sequence has already collapsed there
    if kmax <= 6:
        assert fp.infinity() == oracle[kmax]


def test_component_restricted_pages_match_oracle():
    _, w = cl.double_cusp34().tables()
    rect = cl.working_rectangle(w, -1)
    sn = cl.SnComplex(w, -2, rect)
    k33 = sn.component_of[(3, 3)]
    cubes = sn.component_cubes(k33)
    fp = FilteredPages(w, -2, rect, cubes=cubes)
    oracle = oracle_pages(cubes, lambda c: sum(c.base), 5)
    for k in oracle:
        assert fp.page(k) == oracle[k]


def test_weighted_filtration_pages_match_oracle():
    # generic filtration weights a = (1, 2) on the double-line example
    _, w = cl.ordinary_double().tables()
    rect = cl.working_rectangle(w, 2)
    a = (1, 2)
    for n in (0, 1, 2):
        cubes = [c for c in rect.cubes() if w.cube_weight(c) <= n]
        fp = FilteredPages(w, n, rect, weights=a)
        oracle = oracle_pages(
            cubes, lambda c: a[0] * c.base[0] + a[1] * c.base[1], 6
        )
        for k in oracle:
            assert fp.page(k) == oracle[k], f"weighted page E^{k}, n={n}"
