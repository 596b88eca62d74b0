"""The eleven acceptance criteria, each reporting one PASS/FAIL line."""

import contextlib
import itertools
import os
import subprocess
import sys
import time


from conftest import ACCEPTANCE_LINES
from rank2moduli.hopf import points_suite, symbolic_suite
from rank2moduli.isomorphism import FiberTag, aut_fiber_type, aut_group, zsqrt5_counterexample
from rank2moduli.orbits import (AS_VARIANTS, R_VARIANTS, Domain, GroupKind, Property, STAR_A2,
                                act, bijection_as_to_h, bijection_r_to_t, crosscheck_moduli,
                                domain_elements, embeddings_report, group_elements,
                                moduli_table)
from rank2moduli.quadratic import (AlgebraPoint, all_points, brute_generator_search,
                                   discriminant, galois_conj, is_artin_schreier, is_radical,
                                   is_separable, point, separability_witness)
from rank2moduli.rings import default_battery, ring

BATTERY = default_battery()

# Frozen before the main build from a standalone brute-force classifier
# (pairwise isomorphism by scanning all linear substitutions over every point).
ORACLE_COUNTS = {
    "zmod(2)": {"F": 3, "SF": 2, "SR": 0},
    "zmod(3)": {"F": 3, "SF": 2, "SR": 2},
    "gf(2,2,[1,1,1])": {"F": 3, "SF": 2, "SR": 0},
}


@contextlib.contextmanager
def criterion(n: int, title: str, budget: float | None = None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        over = budget is not None and elapsed >= budget
        status = "PASS" if ok and not over else "FAIL"
        limit = f" (limit {budget:g}s)" if budget is not None else ""
        line = f"criterion {n:2d}: {status}  {title}  [{elapsed:.2f}s{limit}]"
        print(line)
        ACCEPTANCE_LINES.append(line)
    assert not over, f"criterion {n} took {elapsed:.2f}s, limit {budget}s"


def test_criterion_01_zsqrt5_counterexample():
    with criterion(1, "Z[sqrt5]: (1,1) and (sqrt5,2) share disc -3 but are not isomorphic", 1.0):
        Q = ring("zsqrt(5)")
        src, dst, dec = zsqrt5_counterexample()
        assert (src.a, src.b) == (Q.one, Q.one)
        assert (dst.a, dst.b) == ((0, 1), Q.from_int(2))
        assert discriminant(src) == discriminant(dst) == Q.from_int(-3)
        assert dec.verdict.value == "not_isomorphic" and not dec.solutions
        assert sorted(dec.candidates) == [(-1, 0), (1, 0)]
        # the certificate: c*w - a = +-sqrt5 - 1 is not divisible by 2 for either sign
        for w in dec.candidates:
            num = Q.sub(Q.mul(dst.a, w), src.a)
            assert not Q.divides(Q.from_int(2), num)
        assert "w²=1 forced" in dec.certificate
        assert "2 ∤ (-1+√5)" in dec.certificate and "2 ∤ (-1-√5)" in dec.certificate


def test_criterion_02_orbits_equal_isomorphism_classes():
    rings = [R for R in BATTERY if R.cardinality <= 9]
    with criterion(2, f"orbit partitions = iso partitions, {len(rings)} rings x 6 properties",
                   30.0):
        for R, prop in itertools.product(rings, Property):
            rep = crosscheck_moduli(R, prop)
            assert rep.passed, rep.to_json()


def test_criterion_03_field_moduli_counts():
    with criterion(3, "field counts match the frozen brute-force oracle"):
        for spec, expected in ORACLE_COUNTS.items():
            R = ring(spec)
            got = {p: len(moduli_table(R, p)) for p in expected}
            assert got == expected, (spec, got)
        assert len(moduli_table(ring("zmod(2)"), "SR")) == 0


def test_criterion_04_predicates_match_oracles():
    rings = [R for R in BATTERY if R.cardinality <= 8]
    with criterion(4, "radical/AS/separable predicates agree with brute-force witnesses", 30.0):
        for R in rings:
            for pt in all_points(R):
                assert is_radical(pt) == (brute_generator_search(pt, "radical") is not None)
                assert is_artin_schreier(pt) == \
                    (brute_generator_search(pt, "artin_schreier") is not None)
                assert is_separable(pt) == (separability_witness(pt) is not None)


def test_criterion_05_galois_involution():
    rings = [R for R in BATTERY if R.cardinality <= 4]
    with criterion(5, "conjugation is a ring involution fixing R*1 (order <= 4)"):
        for R in rings:
            for pt in all_points(R):
                alg = pt.algebra()
                tau = lambda u: galois_conj(pt, u)
                els = alg.elements()
                for r in R.elements():
                    assert tau(alg.scalar(r)) == alg.scalar(r)
                for u in els:
                    assert tau(tau(u)) == u
                for u, v in itertools.product(els, repeat=2):
                    assert tau(alg.mul(u, v)) == alg.mul(tau(u), tau(v))
                    assert tau(alg.add(u, v)) == alg.add(tau(u), tau(v))


def test_criterion_06_discriminant_equivariance():
    with criterion(6, "disc((a,b).(w,v)) = w^-2 disc(a,b) over the whole battery"):
        for R in BATTERY:
            group = group_elements(R, GroupKind.FULL)
            for ab in domain_elements(R, Domain.A2):
                d = discriminant(AlgebraPoint(R, *ab))
                for g in group:
                    winv = R.inverse(g.w)
                    out = AlgebraPoint(R, *act(STAR_A2, R, ab, g))
                    assert discriminant(out) == R.mul(R.mul(winv, winv), d)


def test_criterion_07_symbolic_hopf_identities():
    with criterion(7, "Hopf and coaction identities hold; corrupted presentations fail", 1.0):
        results = symbolic_suite()
        for rep, expected in results:
            assert rep.passed == expected, (rep.target, rep.failed())
        mutants = [rep for rep, _ in results if rep.target.startswith("mutant")]
        assert len(mutants) == 2 and not any(r.passed for r in mutants)


def test_criterion_08_functor_of_points():
    rings = [R for R in BATTERY if R.cardinality <= 5]
    with criterion(8, "Aut presentations: points, law, antipode, counit match (order <= 5)"):
        n = 0
        for R in rings:
            for rep in points_suite(R):
                assert rep.passed, (rep.target, rep.failed())
                n += 1
        assert n >= sum(R.cardinality ** 2 for R in rings)


def test_criterion_09_bijections_and_embeddings():
    with criterion(9, f"AS->H via '{AS_VARIANTS[0]}', R->T via '{R_VARIANTS[0]}'; "
                      "SF, R, SAS, AS embed into F"):
        for R in BATTERY:
            as_rep, r_rep = bijection_as_to_h(R), bijection_r_to_t(R)
            assert as_rep.variant == AS_VARIANTS[0], as_rep.to_json()
            assert r_rep.variant == R_VARIANTS[0], r_rep.to_json()
            for check in embeddings_report(R):
                assert check.passed, (str(R), check)


def test_criterion_10_fiber_types():
    fields = [ring(s) for s in ("zmod(2)", "zmod(3)", "gf(2,2,[1,1,1])", "zmod(5)",
                                "gf(3,2,[1,0,1])")]
    with criterion(10, "fiber tags and orders match Aut over F2, F3, F4, F5, F9"):
        for R in fields:
            for pt in all_points(R):
                ft = aut_fiber_type(pt)
                assert ft.consistent and ft.observed_order == aut_group(pt).order
        expected = [(ring("zmod(3)"), (0, 1), FiberTag.MU2, 2),
                    (ring("zmod(5)"), (0, 0), FiberTag.GM, 4),
                    (ring("zmod(2)"), (1, 1), FiberTag.Z2_CONSTANT, 2),
                    (ring("zmod(2)"), (0, 1), FiberTag.GM_x_ALPHA2, 1)]
        for R, (a, b), tag, order in expected:
            ft = aut_fiber_type(point(R, a, b))
            assert (ft.tag, ft.observed_order) == (tag, order)


def test_criterion_11_full_verify():
    with criterion(11, "`verify --suite all` over the default battery exits 0", 60.0):
        proc = subprocess.run([sys.executable, "-m", "rank2moduli", "verify", "--suite", "all"],
                              capture_output=True, text=True, env=dict(os.environ))
        assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
