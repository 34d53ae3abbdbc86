"""Integer homology of cubical (quotient) complexes with basis tracking.

Two levels of machinery:

* :func:`homology` computes ranks and torsion of a :class:`ChainComplex`
  through sparse Smith-normal-form reduction — used on the sublevel complexes
  S_n, relative pairs, and the hat groups.
* :class:`HomologyBasis` additionally fixes cycle representatives for the free
  part of one homology group and can express arbitrary cycles in those
  coordinates — used for induced maps (inclusions, the Y shifts, connecting
  differentials) on small complexes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import Cube, faces
from .linalg import (
    Matrix,
    invariant_factors,
    kernel_basis,
    matvec,
    shape,
    smith_normal_form,
    solve_int,
)


@dataclass(frozen=True)
class HomologyGroup:
    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append(f"Z^{self.rank}" if self.rank > 1 else "Z")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


class ChainComplex:
    """Chain complex spanned by a face-closed-or-quotient set of cubes.

    Faces falling outside the cell set are dropped from the boundary; this
    yields the quotient complex when the missing cells form a subcomplex, and
    the honest chain complex when the set is face-closed.
    """

    def __init__(self, cubes) -> None:
        cells: dict[int, list[Cube]] = {}
        for c in cubes:
            cells.setdefault(c.dim, []).append(c)
        self.dim = max(cells) if cells else -1
        self.cells: list[list[Cube]] = [
            sorted(cells.get(q, [])) for q in range(self.dim + 1)
        ]
        self.index: dict[Cube, tuple[int, int]] = {}
        for q, cl in enumerate(self.cells):
            for i, c in enumerate(cl):
                self.index[c] = (q, i)

    def n_cells(self, q: int) -> int:
        if 0 <= q <= self.dim:
            return len(self.cells[q])
        return 0

    def boundary_cols(self, q: int) -> list[dict[int, int]]:
        """Columns of ∂_q: one sparse column per q-cell over (q−1)-cell rows."""
        cols = []
        for c in self.cells[q] if 0 <= q <= self.dim else []:
            col: dict[int, int] = {}
            for sign, f in faces(c):
                loc = self.index.get(f)
                if loc is not None:
                    col[loc[1]] = col.get(loc[1], 0) + sign
            cols.append({i: v for i, v in col.items() if v})
        return cols

    def boundary_matrix(self, q: int) -> Matrix:
        rows = self.n_cells(q - 1)
        cols = self.boundary_cols(q)
        mat = [[0] * len(cols) for _ in range(rows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                mat[i][j] = v
        return mat

    def check_boundary_squares_to_zero(self) -> None:
        for q in range(2, self.dim + 1):
            for c in self.cells[q]:
                acc: dict[Cube, int] = {}
                for s1, f1 in faces(c):
                    if f1 not in self.index:
                        continue
                    for s2, f2 in faces(f1):
                        if f2 in self.index:
                            acc[f2] = acc.get(f2, 0) + s1 * s2
                if any(acc.values()):
                    raise AssertionError(f"boundary^2 != 0 at {c}")


def homology(cc: ChainComplex) -> list[HomologyGroup]:
    """H_q for q = 0..dim, ranks and torsion exact over Z."""
    out = []
    ranks = {}
    for q in range(cc.dim + 2):
        cols = cc.boundary_cols(q) if q <= cc.dim else []
        rk, _ = invariant_factors(cols, cc.n_cells(q - 1)) if cols else (0, [])
        ranks[q] = rk
    for q in range(cc.dim + 1):
        cols_next = cc.boundary_cols(q + 1) if q + 1 <= cc.dim else []
        rk_next, tors = (
            invariant_factors(cols_next, cc.n_cells(q)) if cols_next else (0, [])
        )
        ker = cc.n_cells(q) - ranks[q]
        out.append(HomologyGroup(ker - rk_next, tuple(tors)))
    return out


def relative_homology(all_cubes, sub_cubes) -> list[HomologyGroup]:
    """Homology of the quotient complex (all ∖ sub); sub must be a subcomplex."""
    sub = set(sub_cubes)
    allc = set(all_cubes)
    if not sub <= allc:
        raise ValueError("subcomplex not contained in the complex")
    for c in sub:
        for _, f in faces(c):
            if f in allc and f not in sub:
                raise ValueError(f"subcomplex not face-closed at {c}")
    return homology(ChainComplex(allc - sub))


class HomologyBasis:
    """Fixed free-part basis of H_q of a (quotient) complex.

    Exposes cycle representatives (integer chains in the q-cell basis) and
    ``express`` which writes any cycle's class in those coordinates.
    """

    def __init__(self, cc: ChainComplex, q: int) -> None:
        self.cc = cc
        self.q = q
        self.cells = cc.cells[q] if 0 <= q <= cc.dim else []
        n = len(self.cells)
        bd = cc.boundary_matrix(q) if q >= 1 else [[0] * n for _ in range(0)]
        if q >= 1 and cc.n_cells(q - 1):
            zcols = kernel_basis(bd)
        else:
            zcols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
        self._z = [
            [zcols[j][i] for j in range(len(zcols))] for i in range(n)
        ]  # n x s
        s = len(zcols)
        img_cols: list[list[int]] = []
        if q + 1 <= cc.dim:
            for col in cc.boundary_cols(q + 1):
                vec = [0] * n
                for i, v in col.items():
                    vec[i] = v
                y = solve_int(self._z, vec) if s else ([] if not any(vec) else None)
                if y is None:
                    raise AssertionError("boundary column not in cycle lattice")
                img_cols.append(y)
        mimg = [[c[i] for c in img_cols] for i in range(s)]
        if s and img_cols:
            d, um, _vm, uminv, _ = smith_normal_form(mimg, want_inverses=True)
            rho = sum(
                1 for i in range(min(shape(d))) if d[i][i]
            ) if shape(d)[0] and shape(d)[1] else 0
            self._um = um
            torsion = [
                d[i][i] for i in range(min(shape(d))) if d[i][i] > 1
            ]
            free_idx = list(range(rho, s))
            gen_y = [[uminv[i][j] for i in range(s)] for j in free_idx]
        else:
            rho = 0
            self._um = [[1 if i == j else 0 for j in range(s)] for i in range(s)]
            torsion = []
            free_idx = list(range(s))
            gen_y = [[1 if i == j else 0 for i in range(s)] for j in free_idx]
        self._rho = rho
        self._free_idx = free_idx
        self.rank = len(free_idx)
        self.torsion = tuple(torsion)
        self.reps: list[list[int]] = [
            matvec(self._z, y) if s else [] for y in gen_y
        ]

    def express(self, chain: list[int]) -> list[int]:
        """Coordinates of a cycle's class on the free generators.

        Raises if the chain is not a cycle of this complex.
        """
        s = len(self._z[0]) if self._z else 0
        if s == 0:
            if any(chain):
                raise AssertionError("nonzero chain in trivial cycle space")
            return []
        y = solve_int(self._z, list(chain))
        if y is None:
            raise AssertionError("chain is not a cycle (or not in the lattice)")
        zc = matvec(self._um, y)
        return [zc[j] for j in self._free_idx]

    def chain_vector(self, terms) -> list[int]:
        """Build a q-chain vector from (coeff, cube) terms; cubes outside the
        complex are dropped (quotient convention)."""
        vec = [0] * len(self.cells)
        pos = {c: i for i, c in enumerate(self.cells)}
        for coeff, cube in terms:
            i = pos.get(cube)
            if i is not None:
                vec[i] += coeff
        return vec


def induced_map(
    f_on_cells, src: HomologyBasis, tgt: HomologyBasis
) -> list[list[int]]:
    """Matrix (rows = tgt generators) of the map induced by a chain map.

    ``f_on_cells(cube) -> iterable of (coeff, cube)`` gives the chain image of
    each source q-cell; images landing outside the target complex are dropped
    (quotient convention).
    """
    cols = []
    for rep in src.reps:
        terms = []
        for coeff, cube in zip(rep, src.cells):
            if coeff:
                for c2, img in f_on_cells(cube):
                    terms.append((coeff * c2, img))
        cols.append(tgt.express(tgt.chain_vector(terms)))
    return [[cols[j][i] for j in range(len(cols))] for i in range(tgt.rank)]
