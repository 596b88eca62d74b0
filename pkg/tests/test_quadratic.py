import itertools

import pytest

from rank2moduli.isomorphism import is_isomorphic
from rank2moduli.quadratic import (AlgebraPoint, InfiniteRingError, NormalKind,
                                   NotUnitalRank2, all_points, as_normal_form,
                                   base_change, brute_generator_search, check_normal_form,
                                   discriminant, etale_normal_form, galois_conj,
                                   is_artin_schreier, is_radical, is_separable, point,
                                   point_from_table, radical_normal_form, radical_witness,
                                   artin_schreier_witness, separability_witness,
                                   standard_table, trace)
from rank2moduli.rings import RingHom, default_battery, ring

SMALL = [R for R in default_battery() if R.cardinality <= 8]


def Z(n):
    return ring(f"zmod({n})")


def test_discriminant_examples():
    assert discriminant(point(Z(8), 0, -1)) == 4
    assert discriminant(point(Z(3), 1, 1)) == 0
    Q = ring("zsqrt(5)")
    assert discriminant(point(Q, 1, 1)) == Q.from_int(-3)
    assert discriminant(AlgebraPoint(Q, (0, 1), Q.from_int(2))) == Q.from_int(-3)


def test_separability_examples():
    assert is_separable(point(Z(2), 1, 1))
    assert not is_separable(point(Z(2), 0, 1))
    assert is_separable(point(Z(4), 1, 0))
    assert separability_witness(point(Z(5), 0, 1)) == (3, 0)
    assert separability_witness(point(Z(2), 0, 1)) is None
    assert separability_witness(point(Z(2), 1, 0)) == (0, 1)
    with pytest.raises(InfiniteRingError):
        separability_witness(point(ring("zsqrt(5)"), 1, 1))


def test_radical_and_as_predicates():
    assert radical_witness(point(Z(4), 2, 0)) == 1
    assert not is_radical(point(Z(2), 1, 0))
    assert not is_radical(point(Z(6), 3, 0))
    assert artin_schreier_witness(point(Z(2), 1, 1)) == 0
    assert not is_artin_schreier(point(Z(2), 0, 1))
    assert is_artin_schreier(point(Z(6), 1, 0))


def test_radical_normal_forms():
    nf = radical_normal_form(point(Z(4), 2, 1))
    assert nf.kind is NormalKind.RADICAL and nf.param == 0
    assert radical_normal_form(point(Z(8), 4, 1)).param == 5
    for R in (Z(3), Z(4), ring("gf(2,2,[1,1,1])")):
        for b in R.elements():
            assert radical_normal_form(AlgebraPoint(R, R.zero, b)).param == b
    assert radical_normal_form(point(Z(2), 1, 1)) is None


def test_as_normal_forms():
    for R in (Z(3), Z(5), Z(4)):
        for a0 in R.elements():
            nf = as_normal_form(AlgebraPoint(R, R.neg(R.one), a0))
            assert (nf.w, nf.v, nf.param) == (R.one, R.zero, a0)
    assert as_normal_form(point(Z(2), 1, 1)).param == 1
    nf = as_normal_form(point(Z(3), 1, 1))
    assert (nf.v, nf.w, nf.param) == (0, 2, 1)
    assert as_normal_form(point(Z(2), 0, 1)) is None


def test_etale_normal_forms():
    nf = etale_normal_form(point(Z(5), 1, 1))
    assert nf.kind is NormalKind.ETALE_ODD and nf.param == 2
    nf = etale_normal_form(point(Z(2), 1, 1))
    assert nf.kind is NormalKind.ETALE_EVEN and nf.param == 1
    with pytest.raises(ValueError, match="neither branch applies"):
        etale_normal_form(point(Z(6), 1, 1))
    assert etale_normal_form(point(Z(3), 1, 1)) is None


def test_odd_etale_substitution_is_2x_plus_a():
    # y = 2x + a squares to the discriminant; 2x - a generally does not
    pt = point(Z(5), 1, 1)
    alg = pt.algebra()
    y = alg.add(alg.smul(2, alg.gen), alg.scalar(1))
    assert alg.mul(y, y) == alg.scalar(discriminant(pt))
    y_bad = alg.sub(alg.smul(2, alg.gen), alg.scalar(1))
    assert alg.mul(y_bad, y_bad) != alg.scalar(discriminant(pt))


@pytest.mark.parametrize("R", SMALL, ids=str)
def test_predicates_agree_with_brute_search(R):
    for pt in all_points(R):
        assert is_radical(pt) == (brute_generator_search(pt, "radical") is not None)
        assert is_artin_schreier(pt) == \
            (brute_generator_search(pt, "artin_schreier") is not None)
        assert is_separable(pt) == (separability_witness(pt) is not None)


@pytest.mark.parametrize("R", SMALL, ids=str)
def test_normal_forms_reexpand_and_stay_in_orbit(R):
    two = R.from_int(2)
    for pt in all_points(R):
        forms = [radical_normal_form(pt), as_normal_form(pt)]
        if is_separable(pt) and (R.is_unit(two) or two == R.zero):
            forms.append(etale_normal_form(pt))
        for nf in filter(None, forms):
            assert check_normal_form(pt, nf)
            assert is_isomorphic(pt, nf.target_point())


def test_brute_generator_examples():
    assert brute_generator_search(point(Z(3), 0, 1), "radical") == (0, 1)
    assert brute_generator_search(point(Z(2), 1, 1), "radical") is None
    assert brute_generator_search(point(Z(2), 1, 1), "artin_schreier") == (0, 1)
    with pytest.raises(ValueError):
        brute_generator_search(point(Z(2), 1, 1), "cyclic")


def test_trace_and_conjugation_examples():
    pt = point(Z(5), 0, -1)
    alg = pt.algebra()
    assert galois_conj(pt, alg.one) == alg.one
    assert galois_conj(pt, alg.gen) == alg.neg(alg.gen)
    pt4 = point(Z(4), 2, 1)
    assert all(galois_conj(pt4, galois_conj(pt4, u)) == u for u in pt4.algebra().elements())


@pytest.mark.parametrize("R", [R for R in SMALL if R.cardinality <= 4], ids=str)
def test_conjugation_is_ring_involution(R):
    for pt in all_points(R):
        alg = pt.algebra()
        els = alg.elements()
        assert trace(pt, alg.one) == R.from_int(2)
        for r in R.elements():
            assert galois_conj(pt, alg.scalar(r)) == alg.scalar(r)
        for u, v in itertools.product(els, repeat=2):
            assert galois_conj(pt, alg.mul(u, v)) == \
                alg.mul(galois_conj(pt, u), galois_conj(pt, v))
            assert galois_conj(pt, alg.add(u, v)) == \
                alg.add(galois_conj(pt, u), galois_conj(pt, v))
            assert trace(pt, alg.add(u, v)) == R.add(trace(pt, u), trace(pt, v))


def test_tables():
    for R in (Z(3), Z(4), ring("gf(2,2,[1,1,1])")):
        for pt in all_points(R):
            table, unit = standard_table(pt)
            back, e = point_from_table(R, table, unit)
            assert back == pt and e == (R.zero, R.one)

    R = Z(3)
    table, unit = standard_table(point(R, 1, 2))
    swapped = [[table[1][1][::-1], table[1][0][::-1]], [table[0][1][::-1], table[0][0][::-1]]]
    back, _ = point_from_table(R, swapped, (0, 1))
    assert is_isomorphic(back, point(R, 1, 2))

    zero_table = [[(0, 0), (0, 0)], [(0, 0), (0, 0)]]
    with pytest.raises(NotUnitalRank2):
        point_from_table(R, zero_table, (0, 0))


def test_base_change():
    assert base_change(point(Z(4), 2, 1), RingHom.canonical(Z(4), Z(2))) == point(Z(2), 0, 1)
    assert base_change(point(Z(6), 1, 1), RingHom.canonical(Z(6), Z(3))) == point(Z(3), 1, 1)
    pt = point(Z(5), 3, 4)
    assert base_change(pt, RingHom.canonical(Z(5), Z(5))) == pt
    with pytest.raises(ValueError):
        base_change(pt, RingHom.canonical(Z(4), Z(2)))


def test_point_json_round_trip():
    pt = point(ring("prod(zmod(2),zmod(3))"), 5, 1)
    assert AlgebraPoint.from_json(pt.to_json()) == pt
    assert pt.to_json()["ring"] == "prod(zmod(2),zmod(3))"
