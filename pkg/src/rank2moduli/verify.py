"""Property suites over a list of finite rings.

Each suite yields ``Outcome`` records. The exhaustive checks follow the
size limits noted next to them; above a limit a seeded sample is used.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import hopf
from .isomorphism import (aut_fiber_type, aut_group, brute_isomorphisms, is_algebra_isomorphism,
                          is_isomorphic, iso_odd_char, iso_quadint, iso_solutions,
                          zsqrt5_counterexample, IsoVerdict)
from .orbits import (ALL_INSTANCES, Domain, Property, TABLE_INSTANCE,
                     act, bijection_as_to_h, bijection_r_to_t, crosscheck_moduli,
                     domain_elements, embeddings_report, field_moduli_counts,
                     group_elements, group_inv, group_mul, identity, moduli_table,
                     orbits)
from .quadratic import (AlgebraPoint, all_points, as_normal_form, brute_generator_search,
                        check_normal_form, discriminant, etale_normal_form,
                        galois_conj, is_artin_schreier, is_radical, is_separable,
                        point_from_table, radical_normal_form, separability_witness,
                        standard_table, trace)
from .rings import (ProductRing, Ring, RingHom, format_ring_spec, parse_ring_spec, ring)

SUITES = ("ring", "algebra", "iso", "orbits", "hopf")

ACTION_LAW_LIMIT = 8   # right-action law exhaustive up to this order
INVOLUTION_LIMIT = 4   # galois conjugation checked on all element pairs up to here
ISO_PAIR_LIMIT = 4     # iso_solutions vs brute scan on all point pairs up to here
ISO_SAMPLES = 150
LAURENT_CASES = 1000


@dataclass
class Outcome:
    suite: str
    ring: str
    check: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"suite": self.suite, "ring": self.ring, "check": self.check,
                "pass": self.passed, "detail": self.detail}


def _first_failure(items, pred: Callable) -> str:
    for item in items:
        if not pred(item):
            return repr(item)
    return ""


def _outcome(suite: str, R, name: str, items, pred) -> Outcome:
    bad = _first_failure(items, pred)
    return Outcome(suite, str(R), name, not bad, bad and f"first failure at {bad}")


# ---------------------------------------------------------------------------
# ring


def ring_suite(R: Ring, rng: random.Random) -> Iterator[Outcome]:
    els = R.elements()
    z, o = R.zero, R.one
    triples = itertools.product(els, repeat=3)

    def axioms(t):
        x, y, w = t
        return (R.add(R.add(x, y), w) == R.add(x, R.add(y, w))
                and R.mul(R.mul(x, y), w) == R.mul(x, R.mul(y, w))
                and R.mul(x, R.add(y, w)) == R.add(R.mul(x, y), R.mul(x, w))
                and R.add(x, y) == R.add(y, x) and R.mul(x, y) == R.mul(y, x))
    yield _outcome("ring", R, "axioms_triples", triples, axioms)
    yield _outcome("ring", R, "identities_and_negation", els,
                   lambda x: R.add(x, z) == x and R.mul(x, o) == x
                   and R.add(x, R.neg(x)) == z)
    yield _outcome("ring", R, "enumeration_canonical", [els],
                   lambda e: len(set(e)) == len(e) == R.cardinality
                   and all(R.index(x) == i for i, x in enumerate(e)))
    yield _outcome("ring", R, "unit_inverse", els,
                   lambda x: R.is_unit(x) == any(R.mul(x, y) == o for y in els)
                   and (not R.is_unit(x) or R.mul(x, R.inverse(x)) == o))
    yield _outcome("ring", R, "spec_round_trip", [R.spec],
                   lambda s: parse_ring_spec(format_ring_spec(s)) == s)
    yield _outcome("ring", R, "json_round_trip", els,
                   lambda x: R.from_json(R.to_json(x)) == x)
    char = R.characteristic
    yield _outcome("ring", R, "characteristic", [char],
                   lambda n: R.from_int(n) == z
                   and all(R.from_int(m) != z for m in range(1, n)))
    yield _outcome("ring", R, "residue_characteristics",
                   [p for p in range(2, char + 1) if char % p == 0
                    and all(p % q for q in range(2, p))],
                   lambda p: (p in R.residue_characteristics())
                   == (not R.is_unit(R.from_int(p))))
    yield _outcome("ring", R, "canonical_hom", [char],
                   lambda n: RingHom.canonical(ring(f"zmod({n})"), R).is_homomorphism())
    primes = (2, 3, 5, 7)
    yield _outcome("ring", R, "divides_iff_unit", [(p, q) for p in primes for q in primes if p != q],
                   lambda pq: R.divides(R.from_int(pq[0]), R.from_int(pq[1]))
                   == R.is_unit(R.from_int(pq[0])))
    yield _outcome("ring", R, "enumeration_deterministic", [R.spec],
                   lambda s: ring(format_ring_spec(s)).elements() == els)
    if isinstance(R, ProductRing):
        yield _outcome("ring", R, "projections", range(len(R.factors)),
                       lambda i: RingHom.projection(R, i).is_homomorphism())


# ---------------------------------------------------------------------------
# algebra


def algebra_suite(R: Ring, rng: random.Random) -> Iterator[Outcome]:
    pts = all_points(R)

    def basis_laws(pt):
        A = pt.algebra()
        basis = [A.one, A.gen]
        for u, v, w in itertools.product(basis, repeat=3):
            if A.mul(A.mul(u, v), w) != A.mul(u, A.mul(v, w)):
                return False
        return A.mul(A.gen, A.gen) == (R.neg(pt.b), R.neg(pt.a)) \
            and A.mul(A.one, A.gen) == A.gen
    yield _outcome("algebra", R, "basis_relations", pts, basis_laws)
    yield _outcome("algebra", R, "separable_iff_witness", pts,
                   lambda pt: is_separable(pt) == (separability_witness(pt) is not None))
    yield _outcome("algebra", R, "radical_iff_generator", pts,
                   lambda pt: is_radical(pt)
                   == (brute_generator_search(pt, "radical") is not None))
    yield _outcome("algebra", R, "as_iff_generator", pts,
                   lambda pt: is_artin_schreier(pt)
                   == (brute_generator_search(pt, "artin_schreier") is not None))

    def normal_forms(pt):
        for fn in (radical_normal_form, as_normal_form):
            nf = fn(pt)
            if nf is not None and not check_normal_form(pt, nf):
                return False
        if is_separable(pt) and (R.is_unit(R.from_int(2)) or R.from_int(2) == R.zero):
            nf = etale_normal_form(pt)
            return nf is not None and check_normal_form(pt, nf)
        return True
    yield _outcome("algebra", R, "normal_forms", pts, normal_forms)

    def involution(pt, exhaustive):
        A = pt.algebra()
        tau = lambda u: galois_conj(pt, u)
        els = A.elements() if exhaustive else [A.one, A.gen]
        for u in els:
            if tau(tau(u)) != u:
                return False
            if A.add(u, tau(u)) != A.scalar(trace(pt, u)):
                return False
        for u, v in itertools.product(els, repeat=2):
            if tau(A.mul(u, v)) != A.mul(tau(u), tau(v)):
                return False
            if tau(A.add(u, v)) != A.add(tau(u), tau(v)):
                return False
        return all(tau(A.scalar(r)) == A.scalar(r) for r in R.elements())
    small = R.cardinality <= INVOLUTION_LIMIT
    yield _outcome("algebra", R, "galois_involution" + ("" if small else "_on_basis"),
                   pts, lambda pt: involution(pt, small))

    def trace_laws(pt):
        A = pt.algebra()
        if trace(pt, A.one) != R.from_int(2):
            return False
        return all(trace(pt, A.add(u, v)) == R.add(trace(pt, u), trace(pt, v))
                   and trace(pt, A.smul(r, u)) == R.mul(r, trace(pt, u))
                   for u in (A.one, A.gen) for v in (A.one, A.gen) for r in R.elements())
    yield _outcome("algebra", R, "trace_linear", pts, trace_laws)

    star = orbits(TABLE_INSTANCE[Property.F], R)

    def same_orbit(pt):
        forms = [radical_normal_form(pt), as_normal_form(pt)]
        if is_separable(pt) and (R.is_unit(R.from_int(2)) or R.from_int(2) == R.zero):
            forms.append(etale_normal_form(pt))
        return all(star.orbit_of[nf.target_point().coords] == star.orbit_of[pt.coords]
                   for nf in forms if nf is not None)
    yield _outcome("algebra", R, "normal_form_in_orbit", pts, same_orbit)

    def round_trip(pt):
        table, unit = standard_table(pt)
        back, _ = point_from_table(R, table, unit)
        return back == pt
    yield _outcome("algebra", R, "table_round_trip", pts, round_trip)


# ---------------------------------------------------------------------------
# iso


def iso_suite(R: Ring, rng: random.Random) -> Iterator[Outcome]:
    pts = all_points(R)
    pairs = list(itertools.product(pts, repeat=2))
    if R.cardinality > ISO_PAIR_LIMIT:
        pairs = rng.sample(pairs, min(ISO_SAMPLES, len(pairs)))
    yield _outcome("iso", R, "solutions_match_brute_scan", pairs,
                   lambda p: {(s.v, s.w) for s in iso_solutions(*p)}
                   == set(brute_isomorphisms(*p)))
    if R.cardinality <= 5:
        def composes(triple):
            p, q, r = triple
            for s1 in iso_solutions(p, q):
                for s2 in iso_solutions(q, r):
                    # x -> w1 y + v1, then y -> w2 z + v2
                    comp = (R.add(R.mul(s1.w, s2.v), s1.v), R.mul(s1.w, s2.w))
                    if not is_algebra_isomorphism(p, r, comp):
                        return False
            return True
        triples = [(p, q, r) for p in pts for q in pts for r in pts]
        if len(triples) > 2000:
            triples = rng.sample(triples, 2000)
        yield _outcome("iso", R, "solutions_compose", triples, composes)
    if R.is_unit(R.from_int(2)):
        def rigid(p):
            src, dst = p
            d1, d2 = discriminant(src), discriminant(dst)
            return all(d1 == R.mul(R.mul(s.w, s.w), d2) for s in iso_solutions(src, dst))
        yield _outcome("iso", R, "disc_rigidity", pairs, rigid)
    yield _outcome("iso", R, "aut_group_axioms", pts,
                   lambda pt: aut_group(pt).check_axioms())
    if R.is_unit(R.from_int(2)):
        yield _outcome("iso", R, "odd_char_criterion", pairs,
                       lambda p: bool(iso_odd_char(*p)) == is_isomorphic(*p))
    if R.is_field:
        yield _outcome("iso", R, "fiber_types", pts,
                       lambda pt: aut_fiber_type(pt).consistent)


def quadint_outcomes() -> Iterator[Outcome]:
    src, dst, dec = zsqrt5_counterexample()
    yield Outcome("iso", "zsqrt(5)", "counterexample", dec.verdict is IsoVerdict.NOT_ISOMORPHIC
                  and discriminant(src) == discriminant(dst), dec.certificate)
    R = src.ring
    checks = [((0, -1), (2, 0), True), ((1, 1), (1, 1), True), ((0, 5), (0, 20), False)]
    for (a, b), (c, d), want in checks:
        P = AlgebraPoint(R, R.from_int(a), R.from_int(b))
        Q = AlgebraPoint(R, R.from_int(c), R.from_int(d))
        got = iso_quadint(P, Q).verdict
        ok = got is (IsoVerdict.ISOMORPHIC if want else IsoVerdict.NOT_ISOMORPHIC)
        yield Outcome("iso", "zsqrt(5)", f"decide({a},{b})~({c},{d})", ok, got.value)


# ---------------------------------------------------------------------------
# orbits


def orbits_suite(R: Ring, rng: random.Random) -> Iterator[Outcome]:
    G = group_elements(R, _full())
    e = identity(R)
    yield _outcome("orbits", R, "group_axioms", G,
                   lambda g: group_mul(R, g, group_inv(R, g)) == e
                   and group_mul(R, e, g) == g == group_mul(R, g, e))
    small = R.cardinality <= ACTION_LAW_LIMIT
    for inst in ALL_INSTANCES:
        grp = group_elements(R, inst.group)
        dom = domain_elements(R, inst.domain)
        dset = set(dom)
        yield _outcome("orbits", R, f"closure[{inst}]", itertools.product(dom, grp),
                       lambda p: act(inst, R, p[0], p[1], check=False) in dset)
        if small:
            def law(p, inst=inst):
                x, g, h = p
                lhs = act(inst, R, x, group_mul(R, g, h))
                return lhs == act(inst, R, act(inst, R, x, g), h) and act(inst, R, x, e) == x
            yield _outcome("orbits", R, f"action_law[{inst}]",
                           itertools.product(dom, grp, grp), law)

    def equivariant(p):
        (a, b), g = p
        pt, img = AlgebraPoint(R, a, b), act(TABLE_INSTANCE[Property.F], R, (a, b), g)
        winv = R.inverse(g.w)
        return discriminant(AlgebraPoint(R, *img)) == R.mul(R.mul(winv, winv),
                                                             discriminant(pt))
    yield _outcome("orbits", R, "disc_equivariance",
                   itertools.product(domain_elements(R, Domain.A2), G), equivariant)
    for prop in Property:
        table = moduli_table(R, prop)
        reps = [c.rep for c in table.classes]
        yield Outcome("orbits", str(R), f"table_partition[{prop.value}]",
                      sum(c.orbit_size for c in table.classes) == table.domain_size
                      and len(set(reps)) == len(reps))
        report = crosscheck_moduli(R, prop)
        bad = [c.name for c in report.checks if not (c.match and c.covers)]
        yield Outcome("orbits", str(R), f"orbits_equal_iso_classes[{prop.value}]",
                      report.passed, ", ".join(bad))
    for bij in (bijection_as_to_h(R), bijection_r_to_t(R)):
        yield Outcome("orbits", str(R), f"bijection[{bij.name}]", bij.passed,
                      f"variant {bij.variant}")
    for emb in embeddings_report(R):
        yield Outcome("orbits", str(R), f"embedding[{emb.name}]", emb.passed)
    if R.is_field:
        counts = field_moduli_counts(R)
        yield Outcome("orbits", str(R), "field_counts", counts["pass"],
                      str(counts["classes"]))


def _full():
    from .orbits import GroupKind
    return GroupKind.FULL


# ---------------------------------------------------------------------------
# hopf


def hopf_symbolic_outcomes() -> Iterator[Outcome]:
    for rep, expected in hopf.symbolic_suite():
        tag = "" if expected else " (expected to fail)"
        yield Outcome("hopf", "Z", rep.target + tag, rep.passed == expected,
                      ", ".join(rep.failed()))


def random_laurent(rng: random.Random, terms: int = 3) -> hopf.TensorPoly:
    out = {}
    for _ in range(rng.randint(0, terms)):
        f = (rng.randint(-3, 3), rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 1))
        p = (rng.randint(0, 1), rng.randint(0, 1))
        out[(p, (f,))] = rng.randint(-4, 4)
    return hopf.TensorPoly(1, out)


def laurent_outcome(rng: random.Random, cases: int = LAURENT_CASES) -> Outcome:
    for i in range(cases):
        p, q, r = (random_laurent(rng) for _ in range(3))
        if not ((p * q) * r == p * (q * r) and p * q == q * p
                and p * (q + r) == p * q + p * r):
            return Outcome("hopf", "Z", "laurent_ring_laws", False, f"case {i}: {p} | {q} | {r}")
    return Outcome("hopf", "Z", "laurent_ring_laws", True, f"{cases} cases")


def hopf_suite(R: Ring, rng: random.Random) -> Iterator[Outcome]:
    reports = hopf.points_suite(R)
    bad = [r.target + ":" + ",".join(r.failed()) for r in reports if not r.passed]
    yield Outcome("hopf", str(R), "aut_hopf_points", not bad,
                  bad[0] if bad else f"{len(reports)} presentations")


# ---------------------------------------------------------------------------


_PER_RING = {"ring": ring_suite, "algebra": algebra_suite, "iso": iso_suite,
             "orbits": orbits_suite, "hopf": hopf_suite}


def run_suites(suite: str, rings: list[Ring], seed: int = 0) -> list[Outcome]:
    """Run one suite (or ``all``) over ``rings``; deterministic for a given seed."""
    names = SUITES if suite == "all" else (suite,)
    for n in names:
        if n not in _PER_RING:
            raise ValueError(f"unknown suite {n!r}; choose from {', '.join(SUITES + ('all',))}")
    out: list[Outcome] = []
    for n in names:
        rng = random.Random(seed)
        for R in rings:
            out.extend(_PER_RING[n](R, rng))
        if n == "iso":
            out.extend(quadint_outcomes())
        if n == "hopf":
            out.extend(hopf_symbolic_outcomes())
            out.append(laurent_outcome(random.Random(seed)))
    return out
