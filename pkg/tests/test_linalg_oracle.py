"""Oracle tests for the integer linear algebra kernel.

Smith normal form, kernel bases, and the filtered column reduction are checked
against sympy (an independent implementation) on randomized inputs.
"""

import random
from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from curvelattice.linalg import (
    invariant_factors,
    kernel_basis,
    matmul,
    rank,
    reduce_filtered,
    smith_normal_form,
    solve_frac,
    solve_int,
)

rng = random.Random(20240817)


def random_matrix(nr, nc, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(nc)] for _ in range(nr)]


def diag_of(mat):
    return [mat[i][i] for i in range(min(len(mat), len(mat[0]) if mat else 0))]


@pytest.mark.parametrize("trial", range(200))
def test_snf_matches_sympy_on_random_matrices(trial):
    nr = rng.randint(1, 6)
    nc = rng.randint(1, 6)
    a = random_matrix(nr, nc)
    d, u, v = smith_normal_form(a)
    # structural: D = U A V with unimodular U, V
    assert matmul(matmul(u, a), v) == d
    assert abs(sympy.Matrix(u).det()) == 1
    assert abs(sympy.Matrix(v).det()) == 1
    ours = [abs(x) for x in diag_of(d) if x]
    s = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    theirs = [abs(s[i, i]) for i in range(min(s.shape)) if s[i, i]]
    assert ours == theirs


@pytest.mark.parametrize("trial", range(40))
def test_snf_inverse_tracking(trial):
    nr = rng.randint(1, 5)
    nc = rng.randint(1, 5)
    a = random_matrix(nr, nc)
    d, u, v, uinv, vinv = smith_normal_form(a, want_inverses=True)
    ident_r = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    ident_c = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]
    assert matmul(u, uinv) == ident_r
    assert matmul(v, vinv) == ident_c


@pytest.mark.parametrize("trial", range(60))
def test_kernel_basis_spans_sympy_nullspace(trial):
    nr = rng.randint(1, 5)
    nc = rng.randint(1, 6)
    a = random_matrix(nr, nc, -4, 4)
    ker = kernel_basis(a)
    m = sympy.Matrix(a)
    assert len(ker) == nc - m.rank()
    for col in ker:
        assert all(v == 0 for v in (m * sympy.Matrix(col)))
    if ker:
        assert sympy.Matrix([list(c) for c in ker]).rank() == len(ker)


@pytest.mark.parametrize("trial", range(60))
def test_invariant_factors_match_dense_snf(trial):
    nr = rng.randint(1, 7)
    nc = rng.randint(1, 7)
    a = random_matrix(nr, nc, -5, 5)
    cols = [
        {i: a[i][j] for i in range(nr) if a[i][j]} for j in range(nc)
    ]
    rk, tors = invariant_factors(cols, nr)
    s = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    diag = [abs(s[i, i]) for i in range(min(s.shape)) if s[i, i]]
    assert rk == len(diag)
    assert sorted(tors) == sorted(x for x in diag if x > 1)


@pytest.mark.parametrize("trial", range(60))
def test_reduce_filtered_pairs_encode_prefix_ranks(trial):
    nr = rng.randint(1, 7)
    nc = rng.randint(1, 7)
    a = random_matrix(nr, nc, -3, 3)
    cols = [
        {i: a[i][j] for i in range(nr) if a[i][j]} for j in range(nc)
    ]
    pairs, zeros = reduce_filtered([dict(c) for c in cols])
    m = sympy.Matrix(a)
    assert len(pairs) == m.rank()
    assert len(pairs) + len(zeros) == nc
    # the pairing is rank-determined: #pairs among the first j columns equals
    # the rank of that column prefix
    for j in range(1, nc + 1):
        prefix_rank = sympy.Matrix([row[:j] for row in a]).rank()
        assert sum(1 for col, _row in pairs if col < j) == prefix_rank
    # pivot rows are distinct
    rows = [r for _c, r in pairs]
    assert len(rows) == len(set(rows))


@pytest.mark.parametrize("trial", range(40))
def test_solvers_agree_with_sympy(trial):
    nr = rng.randint(1, 5)
    nc = rng.randint(1, 5)
    a = random_matrix(nr, nc, -4, 4)
    x = [rng.randint(-3, 3) for _ in range(nc)]
    b = [sum(a[i][j] * x[j] for j in range(nc)) for i in range(nr)]
    got = solve_int(a, b)
    assert got is not None
    assert [
        sum(a[i][j] * got[j] for j in range(nc)) for i in range(nr)
    ] == b
    gf = solve_frac(a, b)
    assert gf is not None
    for i in range(nr):
        assert sum(Fraction(a[i][j]) * gf[j] for j in range(nc)) == b[i]
    assert rank(a) == sympy.Matrix(a).rank()


def test_solve_int_detects_unsolvable():
    # 2x = 1 has no integer solution
    assert solve_int([[2]], [1]) is None
    # over Q it does
    assert solve_frac([[2]], [1]) == [Fraction(1, 2)]
