import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rank2moduli.rings import (GF, AllPrimes, InfiniteRingError, NotAUnit, Prod, Quot,
                               RingHom, RingSpecError, ZSqrt, Zmod, default_battery,
                               enumerate_elements, format_ring_spec, parse_ring_spec, ring,
                               split_ring_list)

BATTERY = default_battery()


def test_parse_examples():
    assert parse_ring_spec("zmod(4)") == Zmod(4)
    assert parse_ring_spec(" gf( 3 , 2 , [1, 0, 1] ) ") == GF(3, 2, (1, 0, 1))
    assert parse_ring_spec("prod(zmod(2),zmod(3))") == Prod((Zmod(2), Zmod(3)))
    assert parse_ring_spec("quot(zmod(2),[0,0,1])") == Quot(Zmod(2), (0, 0, 1))
    assert parse_ring_spec("zsqrt(-1)") == ZSqrt(-1)


@pytest.mark.parametrize("text, fragment", [
    ("zmod(1)", "n >= 2"),
    ("gf(4,1,[0,1])", "prime"),
    ("gf(2,2,[1,0,1])", "reducible"),
    ("gf(3,2,[1,1])", "degree"),
    ("quot(zmod(2),[1,1,0])", "monic"),
    ("zsqrt(12)", "squarefree"),
    ("zsqrt(1)", ""),
    ("prod(zmod(2),zsqrt(5))", "finite"),
])
def test_semantic_errors(text, fragment):
    with pytest.raises(RingSpecError) as info:
        parse_ring_spec(text)
    assert fragment in str(info.value)


@pytest.mark.parametrize("text", ["zmod(2", "zmod()", "foo(3)", "zmod(2)x", "gf(2,2,[1,1,1]"])
def test_syntax_errors_carry_position(text):
    with pytest.raises(RingSpecError) as info:
        parse_ring_spec(text)
    assert info.value.position is not None


@pytest.mark.parametrize("R", BATTERY, ids=str)
def test_round_trip_printer(R):
    assert parse_ring_spec(format_ring_spec(R.spec)) == R.spec


def test_split_ring_list_respects_nesting():
    assert split_ring_list("zmod(2), prod(zmod(2),zmod(3)),gf(2,2,[1,1,1])") == \
        ["zmod(2)", "prod(zmod(2),zmod(3))", "gf(2,2,[1,1,1])"]


def test_enumeration_examples():
    assert enumerate_elements(ring("zmod(4)")) == (0, 1, 2, 3)
    assert len(enumerate_elements(ring("prod(zmod(2),zmod(2))"))) == 4
    with pytest.raises(InfiniteRingError):
        enumerate_elements(ring("zsqrt(5)"))


@pytest.mark.parametrize("text, size", [
    ("zmod(7)", 7), ("gf(2,2,[1,1,1])", 4), ("gf(3,2,[1,0,1])", 9),
    ("prod(zmod(2),zmod(3))", 6), ("quot(zmod(2),[0,0,1])", 4),
    ("quot(zmod(4),[1,0,1])", 16), ("prod(zmod(2),gf(2,2,[1,1,1]))", 8),
])
def test_cardinality_formula(text, size):
    R = ring(text)
    assert R.cardinality == size == len(set(R.elements()))


@pytest.mark.parametrize("R", BATTERY, ids=str)
def test_ring_axioms_exhaustive(R):
    els = R.elements()
    for x, y, z in itertools.product(els, repeat=3):
        assert R.add(R.add(x, y), z) == R.add(x, R.add(y, z))
        assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
        assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))
    for x, y in itertools.product(els, repeat=2):
        assert R.add(x, y) == R.add(y, x)
        assert R.mul(x, y) == R.mul(y, x)
    for x in els:
        assert R.add(x, R.zero) == x and R.mul(x, R.one) == x
        assert R.add(x, R.neg(x)) == R.zero


def test_units_examples():
    Z6 = ring("zmod(6)")
    assert Z6.is_unit(5) and Z6.inverse(5) == 5
    assert not Z6.is_unit(3)
    with pytest.raises(NotAUnit, match="not a unit"):
        Z6.inverse(3)
    Q = ring("zsqrt(5)")
    assert Q.is_unit((2, 1)) and Q.norm((2, 1)) == -1
    assert Q.mul((2, 1), Q.inverse((2, 1))) == Q.one
    assert not Q.is_unit((2, 0))


def test_residue_characteristics_examples():
    assert ring("zmod(6)").residue_characteristics() == {2, 3}
    assert ring("gf(3,2,[1,0,1])").residue_characteristics() == {3}
    assert ring("zmod(4)").residue_characteristics() == {2}
    rc = ring("zsqrt(5)").residue_characteristics()
    assert isinstance(rc, AllPrimes) and 2 in rc and 101 in rc


@pytest.mark.parametrize("R", BATTERY, ids=str)
def test_residue_characteristic_iff_nonunit(R):
    for p in (2, 3, 5, 7):
        assert (p in R.residue_characteristics()) == (not R.is_unit(R.from_int(p)))


@pytest.mark.parametrize("R", BATTERY, ids=str)
def test_divides_prime_multiples_iff_unit(R):
    for p, q in itertools.permutations((2, 3, 5, 7), 2):
        assert R.divides(R.from_int(p), R.from_int(q)) == R.is_unit(R.from_int(p))


def test_divides_examples():
    Z6 = ring("zmod(6)")
    assert Z6.divides(2, 4)
    assert not Z6.divides(0, 1) and Z6.divides(0, 0)
    Q = ring("zsqrt(5)")
    assert not Q.divides(Q.from_int(2), (-1, 1))
    assert not Q.divides(Q.from_int(2), (-1, -1))
    assert Q.divides(Q.from_int(2), (2, 4))
    assert all(R.divides(R.one, x) for R in BATTERY for x in R.elements())


def test_quadint_square_roots():
    Q = ring("zsqrt(5)")
    assert sorted(Q.square_roots(Q.one)) == [(-1, 0), (1, 0)]
    assert sorted(Q.square_roots((6, 2))) == [(-1, -1), (1, 1)]
    assert Q.square_roots((2, 0)) == []
    G = ring("zsqrt(-1)")
    assert sorted(G.torsion_units()) == [(-1, 0), (0, -1), (0, 1), (1, 0)]


def test_enumeration_is_deterministic():
    for R in BATTERY:
        assert ring(str(R)).elements() == R.elements()


def test_homomorphisms():
    Z4, Z2, Z6, Z3 = (ring(f"zmod({n})") for n in (4, 2, 6, 3))
    assert RingHom.canonical(Z4, Z2).is_homomorphism()
    assert RingHom.canonical(Z6, Z3).is_homomorphism()
    with pytest.raises(ValueError):
        RingHom.canonical(Z3, Z2)
    P = ring("prod(zmod(2),zmod(3))")
    assert all(RingHom.projection(P, i).is_homomorphism() for i in range(2))
    # F2[e]/(e^2) -> F2, e -> 0
    D = ring("quot(zmod(2),[0,0,1])")
    h = RingHom.from_generator(D, Z2, RingHom.canonical(Z2, Z2), 0)
    assert h.is_homomorphism()
    with pytest.raises(ValueError):
        RingHom.from_generator(D, Z2, RingHom.canonical(Z2, Z2), 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50),
       st.sampled_from([-7, -3, -1, 2, 3, 5, 13]))
def test_quadint_field_laws(m1, n1, m2, n2, d):
    Q = ring(f"zsqrt({d})")
    x, y = (m1, n1), (m2, n2)
    assert Q.norm(Q.mul(x, y)) == Q.norm(x) * Q.norm(y)
    if x != Q.zero:
        q = Q.quotient(x, Q.mul(x, y))
        assert q == y
    assert Q.mul(x, Q.conjugate(x)) == Q.from_int(Q.norm(x))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(BATTERY).flatmap(
    lambda R: st.tuples(st.just(R), st.sampled_from(R.elements()))))
def test_json_round_trip(pair):
    R, x = pair
    assert R.from_json(R.to_json(x)) == x
