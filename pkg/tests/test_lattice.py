"""Cubical lattice primitives: faces, boundary signs, rectangle enumeration."""

from hypothesis import given, settings
from hypothesis import strategies as st

from curvelattice.lattice import Cube, Rectangle, faces, make_cube


def cube_strategy():
    return st.integers(1, 3).flatmap(
        lambda r: st.tuples(
            st.lists(st.integers(-3, 3), min_size=r, max_size=r),
            st.sets(st.integers(0, r - 1)),
        )
    )


@given(cube_strategy())
@settings(max_examples=200)
def test_boundary_of_boundary_vanishes(data):
    base, dirs = data
    c = make_cube(tuple(base), sorted(dirs))
    acc = {}
    for s1, f1 in faces(c):
        for s2, f2 in faces(f1):
            acc[f2] = acc.get(f2, 0) + s1 * s2
    assert all(v == 0 for v in acc.values())


@given(cube_strategy())
@settings(max_examples=100)
def test_faces_have_codimension_one(data):
    base, dirs = data
    c = make_cube(tuple(base), sorted(dirs))
    fs = faces(c)
    assert len(fs) == 2 * c.dim
    for _sign, f in fs:
        assert f.dim == c.dim - 1
        assert set(f.dirs) <= set(c.dirs)


def test_vertices_of_square():
    c = make_cube((1, 2), (0, 1))
    assert sorted(c.vertices()) == [(1, 2), (1, 3), (2, 2), (2, 3)]
    assert c.top == (2, 3)


@given(
    st.integers(1, 3).flatmap(
        lambda r: st.lists(st.integers(0, 3), min_size=r, max_size=r)
    )
)
@settings(max_examples=60)
def test_rectangle_cube_count_formula(hi):
    rect = Rectangle((0,) * len(hi), tuple(hi))
    cubes = list(rect.cubes())
    assert len(cubes) == rect.cube_count()
    expected = 1
    for d in hi:
        expected *= 2 * d + 1
    assert len(cubes) == expected
    assert len(set(cubes)) == len(cubes)
    for c in cubes:
        assert rect.contains_cube(c)


def test_rectangle_points_lex_order():
    rect = Rectangle((0, 0), (1, 2))
    pts = list(rect.points())
    assert pts == sorted(pts)
    assert len(pts) == 2 * 3


def test_face_signs_alternate():
    # d(l, {i,j}) = (l+E_i,{j}) - (l,{j}) - (l+E_j,{i}) + (l,{i})
    c = make_cube((0, 0), (0, 1))
    got = {(f.base, f.dirs): s for s, f in faces(c)}
    assert got == {
        ((1, 0), (1,)): 1,
        ((0, 0), (1,)): -1,
        ((0, 1), (0,)): -1,
        ((0, 0), (0,)): 1,
    }
