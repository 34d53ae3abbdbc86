"""Value semigroups: saturation rule, wedges, delta, Gorenstein symmetry."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import curvelattice as cl
from curvelattice.semigroup import validate_saturation


@pytest.mark.parametrize("curve", cl.corpus(), ids=lambda c: c.name)
def test_saturation_rule_matches_raw_membership(curve):
    validate_saturation(curve.semigroup, curve.raw_member, factor=3)


@given(
    st.sets(st.integers(2, 11), min_size=1, max_size=3).map(sorted)
)
@settings(max_examples=60, deadline=None)
def test_numerical_semigroup_construction(gens):
    from math import gcd

    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        gens = gens + [g + 1]
    S = cl.from_numerical_generators(gens)
    c = S.conductor[0]
    # conductor is tight
    assert S.contains((c,))
    assert c == 0 or not S.contains((c - 1,))

    # membership = representability as a generator combination
    def rep(n):
        reach = {0}
        for gg in gens:
            for x in sorted(reach):
                y = x + gg
                while y <= n:
                    reach.add(y)
                    y += gg
        return n in reach

    for n in range(3 * c + 3):
        assert S.contains((n,)) == rep(n)


def test_wedge_conductor_handles_smooth_parts():
    S = cl.wedge([cl.smooth().semigroup, cl.smooth().semigroup])
    assert S.conductor == (1, 1)
    assert S.contains((0, 0)) and S.contains((1, 1)) and S.contains((2, 5))
    assert not S.contains((1, 0)) and not S.contains((0, 3))


def test_wedge_of_cusps():
    S = cl.wedge([cl.cusp34().semigroup, cl.cusp34().semigroup])
    assert S.conductor == (6, 6)
    assert S.contains((3, 4)) and S.contains((7, 3))
    assert not S.contains((1, 3)) and not S.contains((3, 0))


DELTAS = {
    "smooth": 0,
    "cusp23": 1,
    "cusp34": 3,
    "sg457": 4,
    "sg378": 4,
    "x2y2": 1,
    "x3y3": 3,
    "cusp34_wedge": 7,
    "gapblock2x3": 4,
}

GORENSTEIN = {
    "smooth": True,
    "cusp23": True,
    "cusp34": True,
    "sg457": False,
    "sg378": False,
    "x2y2": True,
    "x3y3": True,
    "cusp34_wedge": False,
}


@pytest.mark.parametrize("curve", cl.corpus(), ids=lambda c: c.name)
def test_delta_values(curve):
    h, w = curve.tables()
    assert cl.delta(curve.semigroup, h) == DELTAS[curve.name]
    assert w.delta == DELTAS[curve.name]


@pytest.mark.parametrize(
    "curve",
    [c for c in cl.corpus() if c.name in GORENSTEIN],
    ids=lambda c: c.name,
)
def test_gorenstein_symmetry(curve):
    h, _ = curve.tables()
    assert cl.is_gorenstein(curve.semigroup, h) == GORENSTEIN[curve.name]


def test_gorenstein_duality_of_weights():
    # for a Gorenstein semigroup, w(l) = w(c - l) on the conductor box
    for curve in (cl.cusp34(), cl.ordinary_triple()):
        h, w = curve.tables()
        c = curve.semigroup.conductor
        for l in curve.semigroup.box_rectangle().points():
            cl_ = tuple(a - b for a, b in zip(c, l))
            assert w(l) == w(cl_)


def test_explicit_semigroup_validation():
    with pytest.raises(ValueError):
        cl.explicit_semigroup(1, (2,), [(2,)])  # missing 0
    with pytest.raises(ValueError):
        cl.explicit_semigroup(1, (2,), [(0,)])  # missing conductor
