import itertools

import pytest

from rank2moduli.isomorphism import (AutGroup, FiberTag, IsoSolution, IsoVerdict, aut_fiber_type,
                                     aut_group, brute_is_isomorphic, is_algebra_isomorphism,
                                     is_isomorphic, iso_odd_char, iso_quadint, iso_solutions,
                                     zsqrt5_counterexample)
from rank2moduli.orbits import STAR_A2, orbits
from rank2moduli.quadratic import AlgebraPoint, all_points, discriminant, point
from rank2moduli.rings import default_battery, ring

BATTERY = default_battery()
UP_TO_5 = [R for R in BATTERY if R.cardinality <= 5]
UP_TO_9 = [R for R in BATTERY if R.cardinality <= 9]


def Z(n):
    return ring(f"zmod({n})")


def sols(src, dst):
    return [(s.v, s.w) for s in iso_solutions(src, dst)]


def test_iso_solutions_examples():
    assert sols(point(Z(2), 0, 0), point(Z(2), 0, 1)) == [(1, 1)]
    assert sols(point(Z(3), 0, 1), point(Z(3), 0, 0)) == []
    assert sols(point(Z(3), 0, 1), point(Z(3), 0, 1)) == [(0, 1), (0, 2)]


def test_is_isomorphic_examples():
    assert is_isomorphic(point(Z(4), 0, 1), point(Z(4), 2, 2))
    assert (1, 1) in sols(point(Z(4), 0, 1), point(Z(4), 2, 2))
    assert not is_isomorphic(point(Z(2), 1, 1), point(Z(2), 0, 1))
    for pt in all_points(Z(4)):
        assert is_isomorphic(pt, pt)
    with pytest.raises(ValueError):
        is_isomorphic(point(Z(2), 0, 0), point(Z(3), 0, 0))


@pytest.mark.parametrize("R", UP_TO_9, ids=str)
def test_iso_matches_star_orbits(R):
    star = orbits(STAR_A2, R)
    pts = all_points(R)
    for p, q in itertools.product(pts, repeat=2):
        same = star.orbit_of[p.coords] == star.orbit_of[q.coords]
        assert is_isomorphic(p, q) == same


@pytest.mark.parametrize("R", [R for R in BATTERY if R.cardinality <= 4], ids=str)
def test_solutions_match_independent_scan(R):
    pts = all_points(R)
    for p, q in itertools.product(pts, repeat=2):
        assert bool(iso_solutions(p, q)) == brute_is_isomorphic(p, q)
        for s in iso_solutions(p, q):
            image = (s.v, s.w)
            assert is_algebra_isomorphism(p, q, image)


@pytest.mark.parametrize("R", UP_TO_5, ids=str)
def test_solutions_compose(R):
    pts = all_points(R)
    for p, q, r in itertools.product(pts, repeat=3):
        first, second = iso_solutions(p, q), iso_solutions(q, r)
        if not first or not second:
            continue
        target = set(iso_solutions(p, r))
        # x -> w y + v followed by y -> w' z + v' is x -> w w' z + (w v' + v)
        for s, t in itertools.product(first, second):
            assert AutGroup.compose(R, s, t) in target


@pytest.mark.parametrize("R", [R for R in UP_TO_9 if R.is_unit(R.from_int(2))], ids=str)
def test_discriminant_rigidity_and_odd_criterion(R):
    pts = all_points(R)
    for p, q in itertools.product(pts, repeat=2):
        solutions = iso_solutions(p, q)
        for s in solutions:
            assert discriminant(p) == R.mul(R.mul(s.w, s.w), discriminant(q))
        ws = iso_odd_char(p, q)
        assert bool(ws) == bool(solutions)
        assert sorted(s.w for s in solutions) == sorted(ws)


def test_iso_odd_char_examples():
    assert iso_odd_char(point(Z(5), 0, 1), point(Z(5), 0, 4)) == [2, 3]
    assert iso_odd_char(point(Z(5), 0, 0), point(Z(5), 0, 0)) == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        iso_odd_char(point(Z(2), 0, 0), point(Z(2), 0, 0))


def test_aut_group_examples():
    assert aut_group(point(Z(3), 0, 1)).order == 2
    g = aut_group(point(Z(5), 0, 0))
    assert g.order == 4 and {s.w for s in g.elements} == {1, 2, 3, 4}
    assert all(s.v == 0 for s in g.elements)
    assert aut_group(point(Z(2), 0, 1)).order == 1


@pytest.mark.parametrize("R", UP_TO_9, ids=str)
def test_aut_group_axioms(R):
    for pt in all_points(R):
        g = aut_group(pt)
        assert g.order >= 1 and g.check_axioms()
        assert g.identity() in g.elements
        for s in g.elements:
            assert AutGroup.inverse(R, s) in g.elements


def test_fiber_type_examples():
    ft = aut_fiber_type(point(Z(3), 0, 1))
    assert (ft.tag, ft.observed_order) == (FiberTag.MU2, 2)
    ft = aut_fiber_type(point(Z(5), 0, 0))
    assert (ft.tag, ft.observed_order) == (FiberTag.GM, 4)
    ft = aut_fiber_type(point(Z(2), 1, 1))
    assert (ft.tag, ft.observed_order) == (FiberTag.Z2_CONSTANT, 2)
    assert [(s.v, s.w) for s in aut_group(point(Z(2), 1, 1)).elements] == [(0, 1), (1, 1)]
    with pytest.raises(ValueError):
        aut_fiber_type(point(Z(4), 0, 0))


@pytest.mark.parametrize("R", [R for R in BATTERY if R.is_field], ids=str)
def test_fiber_orders_are_consistent(R):
    for pt in all_points(R):
        assert aut_fiber_type(pt).consistent


def test_quadint_examples():
    Q = ring("zsqrt(5)")
    src, dst, dec = zsqrt5_counterexample()
    assert discriminant(src) == discriminant(dst) == Q.from_int(-3)
    assert dec.verdict is IsoVerdict.NOT_ISOMORPHIC
    assert sorted(dec.candidates) == [(-1, 0), (1, 0)]
    assert "w²=1 forced" in dec.certificate and "2 ∤" in dec.certificate

    same = iso_quadint(point(Q, 1, 1), point(Q, 1, 1))
    assert same.verdict is IsoVerdict.ISOMORPHIC
    assert same.solutions[0] == IsoSolution(Q.zero, Q.one)

    shift = iso_quadint(point(Q, 0, -1), point(Q, 2, 0))
    assert shift.verdict is IsoVerdict.ISOMORPHIC
    assert IsoSolution(Q.one, Q.one) in shift.solutions
    assert shift.to_json(Q)["isomorphic"] is True


def test_quadint_other_outcomes():
    Q = ring("zsqrt(5)")
    # disc 1 vs disc 5: ratio not in the ring
    dec = iso_quadint(point(Q, 1, 0), AlgebraPoint(Q, (0, 1), Q.zero))
    assert dec.verdict is IsoVerdict.NOT_ISOMORPHIC
    # disc 0 on both sides over a real ring: only torsion units are tried
    dec = iso_quadint(point(Q, 0, 0), point(Q, 2, 1))
    assert dec.verdict is IsoVerdict.ISOMORPHIC
    assert is_isomorphic(point(Q, 0, 0), point(Q, 0, 0))
    assert not is_isomorphic(point(Q, 1, 1), AlgebraPoint(Q, (0, 1), Q.from_int(2)))
