"""Exact integer / rational linear algebra.

Everything operates on dense matrices given as lists of rows of Python ints
(arbitrary precision), except for the sparse helpers used on larger chain
complexes:

* :func:`smith_normal_form` — dense SNF with unimodular transforms (and,
  optionally, their inverses) for basis tracking,
* :func:`invariant_factors` — sparse unit-pivot pre-reduction followed by a
  dense SNF of the remainder, for homology groups of larger complexes,
* :func:`reduce_filtered` — left-to-right column reduction of a filtered
  boundary matrix (persistence pairing) with exact integer arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    n = len(b[0])
    out = [[0] * n for _ in range(len(a))]
    for i, row in enumerate(a):
        oi = out[i]
        for k, aik in enumerate(row):
            if aik:
                bk = b[k]
                for j in range(n):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def matvec(a: Matrix, v: list[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def shape(a: Matrix) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(
    mat: Matrix, want_inverses: bool = False
) -> tuple[Matrix, Matrix, Matrix] | tuple[Matrix, Matrix, Matrix, Matrix, Matrix]:
    """Return ``(D, U, V)`` with ``D = U @ mat @ V`` diagonal, U and V
    unimodular, and the diagonal a divisibility chain of non-negative
    integers.  With ``want_inverses=True`` also return ``(Uinv, Vinv)``.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    d = [row[:] for row in mat]
    u = identity(m)
    v = identity(n)
    uinv = identity(m) if want_inverses else None
    vinv = identity(n) if want_inverses else None

    def row_add(i: int, j: int, k: int) -> None:
        # row_i += k * row_j
        di, dj = d[i], d[j]
        for t in range(n):
            if dj[t]:
                di[t] += k * dj[t]
        ui, uj = u[i], u[j]
        for t in range(m):
            if uj[t]:
                ui[t] += k * uj[t]
        if uinv is not None:
            for t in range(m):
                if uinv[t][i]:
                    uinv[t][j] -= k * uinv[t][i]

    def col_add(i: int, j: int, k: int) -> None:
        # col_i += k * col_j
        for row in d:
            if row[j]:
                row[i] += k * row[j]
        for row in v:
            if row[j]:
                row[i] += k * row[j]
        if vinv is not None:
            vi, vj = vinv[i], vinv[j]
            for t in range(n):
                if vi[t]:
                    vj[t] -= k * vi[t]

    def row_swap(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        if uinv is not None:
            for t in range(m):
                uinv[t][i], uinv[t][j] = uinv[t][j], uinv[t][i]

    def col_swap(i: int, j: int) -> None:
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        if vinv is not None:
            vinv[i], vinv[j] = vinv[j], vinv[i]

    def row_neg(i: int) -> None:
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        if uinv is not None:
            for t in range(m):
                uinv[t][i] = -uinv[t][i]

    for s in range(min(m, n)):
        while True:
            # locate a minimal-absolute-value nonzero pivot in the block
            piv = None
            best = None
            for i in range(s, m):
                di = d[i]
                for j in range(s, n):
                    x = di[j]
                    if x and (best is None or abs(x) < best):
                        best = abs(x)
                        piv = (i, j)
                        if best == 1:
                            break
                if best == 1:
                    break
            if piv is None:
                break
            i, j = piv
            if i != s:
                row_swap(s, i)
            if j != s:
                col_swap(s, j)
            if d[s][s] < 0:
                row_neg(s)
            p = d[s][s]
            dirty = False
            for i in range(s + 1, m):
                if d[i][s]:
                    q = d[i][s] // p
                    if q:
                        row_add(i, s, -q)
                    if d[i][s]:
                        dirty = True
            for j in range(s + 1, n):
                if d[s][j]:
                    q = d[s][j] // p
                    if q:
                        col_add(j, s, -q)
                    if d[s][j]:
                        dirty = True
            if dirty:
                continue
            # divisibility: fold any non-divisible entry into the pivot row
            bad = None
            for i in range(s + 1, m):
                di = d[i]
                for j in range(s + 1, n):
                    if di[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(s, bad, 1)
        if d[s][s] == 0:
            break

    if want_inverses:
        return d, u, v, uinv, vinv  # type: ignore[return-value]
    return d, u, v


def snf_diagonal(mat: Matrix) -> list[int]:
    d, _, _ = smith_normal_form(mat)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i]:
            out.append(d[i][i])
    return out


# ---------------------------------------------------------------------------
# Rank / solving


def rank(mat: Matrix) -> int:
    """Rank over Q by fraction-free style elimination (exact)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [[Fraction(x) for x in row] for row in mat]
    r = 0
    for j in range(n):
        piv = None
        for i in range(r, m):
            if a[i][j]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][j]
        for i in range(r + 1, m):
            if a[i][j]:
                f = a[i][j] / pv
                ai, ar = a[i], a[r]
                for t in range(j, n):
                    if ar[t]:
                        ai[t] -= f * ar[t]
        r += 1
        if r == m:
            break
    return r


def solve_int(mat: Matrix, b: list[int]) -> list[int] | None:
    """One integer solution of mat @ x = b, or None if none exists."""
    m, n = shape(mat)
    if m == 0:
        return [0] * n
    d, u, v = smith_normal_form(mat)
    c = matvec(u, list(b))
    y = [0] * n
    for i in range(min(m, n)):
        di = d[i][i]
        if di:
            if c[i] % di:
                return None
            y[i] = c[i] // di
        elif c[i]:
            return None
    for i in range(min(m, n), m):
        if c[i]:
            return None
    return matvec(v, y)


def solve_frac(
    mat: list[list[Fraction]] | Matrix, b: list[Fraction] | list[int]
) -> list[Fraction] | None:
    """One rational solution of mat @ x = b, or None."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(mat, b)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for j in range(n):
        piv = None
        for i in range(r, m):
            if a[i][j]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pv = a[r][j]
        a[r] = [x / pv for x in a[r]]
        for i in range(m):
            if i != r and a[i][j]:
                f = a[i][j]
                ai, ar = a[i], a[r]
                for t in range(j, n + 1):
                    if ar[t]:
                        ai[t] -= f * ar[t]
        pivots.append((r, j))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, j in pivots:
        x[j] = a[i][n]
    return x


def kernel_basis(mat: Matrix) -> list[list[int]]:
    """Basis (as column vectors) of the integer kernel; spans a primitive
    sublattice (saturated), since it consists of SNF transform columns."""
    m, n = shape(mat)
    if n == 0:
        return []
    if m == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    d, _, v = smith_normal_form(mat)
    rk = sum(1 for i in range(min(m, n)) if d[i][i])
    return [[v[i][j] for i in range(n)] for j in range(rk, n)]


# ---------------------------------------------------------------------------
# Sparse invariant factors (homology groups of larger complexes)

SparseCols = list[dict[int, int]]


def invariant_factors(cols: SparseCols, nrows: int) -> tuple[int, list[int]]:
    """(rank, invariant factors > 1) of a sparse integer matrix given as a
    list of columns {row: value}.

    Strategy: repeatedly eliminate with ±1 pivots (removing the pivot row and
    column), then run dense SNF on whatever small block remains.
    """
    cols = [dict(c) for c in cols]
    live_cols = {j for j, c in enumerate(cols) if c}
    row_occ: dict[int, set[int]] = {}
    for j in live_cols:
        for i in cols[j]:
            row_occ.setdefault(i, set()).add(j)

    units = 0
    # queue of candidate unit entries
    stack = [
        (i, j) for j in live_cols for i, v in cols[j].items() if abs(v) == 1
    ]
    while stack:
        i, j = stack.pop()
        if j not in live_cols or i not in cols[j] or abs(cols[j][i]) != 1:
            continue
        piv = cols[j][i]
        pivcol = cols[j]
        for j2 in list(row_occ.get(i, ())):
            if j2 == j or j2 not in live_cols:
                continue
            c2 = cols[j2]
            f = c2[i] * piv  # piv is ±1, so this is c2[i]/piv
            for i2, v in pivcol.items():
                nv = c2.get(i2, 0) - f * v
                if nv:
                    if i2 not in c2:
                        row_occ.setdefault(i2, set()).add(j2)
                        if abs(nv) == 1:
                            stack.append((i2, j2))
                    c2[i2] = nv
                    if abs(nv) == 1:
                        stack.append((i2, j2))
                elif i2 in c2:
                    del c2[i2]
                    row_occ[i2].discard(j2)
            if not c2:
                live_cols.discard(j2)
        # remove pivot row and column
        for i2 in pivcol:
            row_occ.get(i2, set()).discard(j)
        live_cols.discard(j)
        for j2 in row_occ.pop(i, set()):
            cols[j2].pop(i, None)
            if not cols[j2]:
                live_cols.discard(j2)
        units += 1

    live_cols = {j for j in live_cols if cols[j]}
    if not live_cols:
        return units, []
    rows_left = sorted({i for j in live_cols for i in cols[j]})
    rindex = {i: t for t, i in enumerate(rows_left)}
    dense = zeros(len(rows_left), len(live_cols))
    for t, j in enumerate(sorted(live_cols)):
        for i, v in cols[j].items():
            dense[rindex[i]][t] = v
    diag = snf_diagonal(dense)
    return units + len(diag), [x for x in diag if abs(x) > 1]


# ---------------------------------------------------------------------------
# Filtered column reduction (persistence pairing)


def reduce_filtered(
    cols: SparseCols,
) -> tuple[list[tuple[int, int]], list[int]]:
    """Left-to-right column reduction of a boundary matrix whose rows and
    columns are already sorted by the filtration order (earlier = smaller
    index).  The pivot of a column is its largest row index.

    Integer column operations (cross-multiplication, gcd-normalized) are used;
    the resulting pairing equals the field-coefficient pairing over Q.

    Returns (pairs, zero_cols) where pairs is a list of (col_index,
    pivot_row_index) and zero_cols the indices of columns reduced to zero.
    """
    cols = [dict(c) for c in cols]
    pivot_owner: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    zero_cols: list[int] = []
    for j, col in enumerate(cols):
        while col:
            p = max(col)
            owner = pivot_owner.get(p)
            if owner is None:
                pivot_owner[p] = j
                pairs.append((j, p))
                break
            oc = cols[owner]
            a = oc[p]
            b = col[p]
            g = gcd(a, b)
            fa = a // g
            fb = b // g
            # col <- fa * col - fb * owner_col   (kills row p)
            for i, v in oc.items():
                nv = fa * col.get(i, 0) - fb * v
                if nv:
                    col[i] = nv
                else:
                    col.pop(i, None)
            for i in list(col):
                if i not in oc:
                    col[i] = fa * col[i]
            g2 = 0
            for v in col.values():
                g2 = gcd(g2, v)
            if g2 > 1:
                for i in list(col):
                    col[i] //= g2
        if not col:
            zero_cols.append(j)
    return pairs, zero_cols
