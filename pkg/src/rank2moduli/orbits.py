"""The group R^x |x R, its actions on parameter spaces, and moduli tables.

Points of the two-parameter space are plain ``(a, b)`` tuples; points of
the one-parameter spaces are ring elements. ``ActionInstance`` pins down
which action, which (sub)group and which invariant domain are meant.
"""

from __future__ import annotations

import csv
import enum
import functools
import io
from dataclasses import dataclass, field
from typing import Any, Callable

from .isomorphism import aut_group, brute_is_isomorphic, is_isomorphic
from .quadratic import (AlgebraPoint, as_normal_form, discriminant,
                        radical_normal_form)
from .rings import Ring


@dataclass(frozen=True)
class GroupElem:
    w: Any
    v: Any


def identity(R: Ring) -> GroupElem:
    return GroupElem(R.one, R.zero)


def group_mul(R: Ring, g: GroupElem, h: GroupElem) -> GroupElem:
    """(w, v)(w', v') = (ww', wv' + v)."""
    return GroupElem(R.mul(g.w, h.w), R.add(R.mul(g.w, h.v), g.v))


def group_inv(R: Ring, g: GroupElem) -> GroupElem:
    winv = R.inverse(g.w)
    return GroupElem(winv, R.neg(R.mul(winv, g.v)))


class ActionKind(enum.Enum):
    STAR = "star"            # (a,b).(w,v) = (w^-1(2v+a), w^-2(v^2+av+b))
    DIAMOND = "diamond"      # w.a = w^2 a
    PENTAGRAM = "pentagram"  # a.(w,v) = w^-2(v^2+a), 2v = 0
    AST = "ast"              # a.(1-2v,v) = (1-2v)^-2(v^2-v+a)


class GroupKind(enum.Enum):
    FULL = "full"
    T = "T"
    H = "H"
    UNITS = "units"


class Domain(enum.Enum):
    A2 = "A2"
    S = "S"
    RSET = "Rset"
    ASSET = "ASset"
    SRSET = "SRset"
    A1 = "A1"
    UNITS_SET = "units"
    L = "L"


_LEGAL = {
    (ActionKind.STAR, GroupKind.FULL): {Domain.A2, Domain.S, Domain.RSET,
                                        Domain.ASSET, Domain.SRSET},
    (ActionKind.DIAMOND, GroupKind.UNITS): {Domain.A1, Domain.UNITS_SET},
    (ActionKind.PENTAGRAM, GroupKind.T): {Domain.A1},
    (ActionKind.AST, GroupKind.H): {Domain.A1, Domain.L},
}

TWO_PARAM = {Domain.A2, Domain.S, Domain.RSET, Domain.ASSET, Domain.SRSET}


@dataclass(frozen=True)
class ActionInstance:
    kind: ActionKind
    group: GroupKind
    domain: Domain

    def __post_init__(self):
        if self.domain not in _LEGAL.get((self.kind, self.group), ()):
            raise ValueError(f"illegal action instance {self.kind.value}/"
                             f"{self.group.value}/{self.domain.value}")

    def __str__(self) -> str:
        return f"{self.kind.value} on {self.domain.value}"


STAR_A2 = ActionInstance(ActionKind.STAR, GroupKind.FULL, Domain.A2)
STAR_S = ActionInstance(ActionKind.STAR, GroupKind.FULL, Domain.S)
STAR_R = ActionInstance(ActionKind.STAR, GroupKind.FULL, Domain.RSET)
STAR_AS = ActionInstance(ActionKind.STAR, GroupKind.FULL, Domain.ASSET)
STAR_SR = ActionInstance(ActionKind.STAR, GroupKind.FULL, Domain.SRSET)
DIAMOND_A1 = ActionInstance(ActionKind.DIAMOND, GroupKind.UNITS, Domain.A1)
DIAMOND_UNITS = ActionInstance(ActionKind.DIAMOND, GroupKind.UNITS, Domain.UNITS_SET)
PENTAGRAM_A1 = ActionInstance(ActionKind.PENTAGRAM, GroupKind.T, Domain.A1)
AST_A1 = ActionInstance(ActionKind.AST, GroupKind.H, Domain.A1)
AST_L = ActionInstance(ActionKind.AST, GroupKind.H, Domain.L)

ALL_INSTANCES = (STAR_A2, STAR_S, STAR_R, STAR_AS, STAR_SR, DIAMOND_A1,
                 DIAMOND_UNITS, PENTAGRAM_A1, AST_A1, AST_L)


# ---------------------------------------------------------------------------
# groups and domains


def in_group(R: Ring, group: GroupKind, g: GroupElem) -> bool:
    if not R.is_unit(g.w):
        return False
    if group is GroupKind.FULL:
        return True
    if group is GroupKind.T:
        return R.scale(2, g.v) == R.zero
    if group is GroupKind.H:
        return g.w == R.sub(R.one, R.scale(2, g.v))
    return g.v == R.zero


def group_elements(R: Ring, group: GroupKind) -> list[GroupElem]:
    units = R.units()
    if group is GroupKind.UNITS:
        return [GroupElem(w, R.zero) for w in units]
    if group is GroupKind.H:
        out = []
        for v in R.elements():
            w = R.sub(R.one, R.scale(2, v))
            if R.is_unit(w):
                out.append(GroupElem(w, v))
        return out
    return [GroupElem(w, v) for w in units for v in R.elements()
            if in_group(R, group, GroupElem(w, v))]


def _in_domain(R: Ring, domain: Domain, x) -> bool:
    two = R.from_int(2)
    if domain is Domain.A1:
        return True
    if domain is Domain.UNITS_SET:
        return R.is_unit(x)
    if domain is Domain.L:
        return R.is_unit(R.sub(R.one, R.scale(4, x)))
    a, b = x
    if domain is Domain.A2:
        return True
    sep = R.is_unit(R.sub(R.mul(a, a), R.scale(4, b)))
    rad = any(R.mul(two, r) == a for r in R.elements())
    if domain is Domain.S:
        return sep
    if domain is Domain.RSET:
        return rad
    if domain is Domain.SRSET:
        return sep and rad
    return any(R.is_unit(R.add(R.mul(two, r), a)) for r in R.elements())


@functools.lru_cache(maxsize=256)
def _domain_cache(R: Ring, domain: Domain) -> tuple[tuple, frozenset]:
    els = R.elements()
    if domain in TWO_PARAM:
        space = [(a, b) for a in els for b in els]
    else:
        space = list(els)
    members = tuple(x for x in space if _in_domain(R, domain, x))
    return members, frozenset(members)


def domain_elements(R: Ring, domain: Domain) -> list:
    return list(_domain_cache(R, domain)[0])


def in_domain(R: Ring, domain: Domain, x) -> bool:
    return x in _domain_cache(R, domain)[1]


_DOMAIN_NAMES = {"A2": Domain.A2, "S": Domain.S, "Rset": Domain.RSET,
                 "ASset": Domain.ASSET, "SRset": Domain.SRSET, "A1": Domain.A1,
                 "units": Domain.UNITS_SET, "L": Domain.L}


def restricted_domain(R: Ring, name: str) -> list:
    """Named subsets: S, Rset, ASset, SRset, L, A1, A2, units, or the groups Tgrp, Hgrp."""
    if name == "Tgrp":
        return group_elements(R, GroupKind.T)
    if name == "Hgrp":
        return group_elements(R, GroupKind.H)
    try:
        return domain_elements(R, _DOMAIN_NAMES[name])
    except KeyError:
        raise ValueError(f"unknown domain {name!r}") from None


# ---------------------------------------------------------------------------
# actions


def act(instance: ActionInstance, R: Ring, x, g: GroupElem, check: bool = True):
    if check:
        if not in_group(R, instance.group, g):
            raise ValueError(f"{g} is not in the group {instance.group.value}")
        if not in_domain(R, instance.domain, x):
            raise ValueError(f"{x!r} is not in the domain {instance.domain.value}")
    return _ACTIONS[instance.kind](R, x, g)


def _star(R: Ring, x, g: GroupElem):
    a, b = x
    w, v = g.w, g.v
    winv = R.inverse(w)
    winv2 = R.mul(winv, winv)
    return (R.mul(winv, R.add(R.scale(2, v), a)),
            R.mul(winv2, R.add(R.add(R.mul(v, v), R.mul(a, v)), b)))


def _diamond(R: Ring, x, g: GroupElem):
    return R.mul(R.mul(g.w, g.w), x)


def _pentagram(R: Ring, x, g: GroupElem):
    winv = R.inverse(g.w)
    return R.mul(R.mul(winv, winv), R.add(R.mul(g.v, g.v), x))


def _ast(R: Ring, x, g: GroupElem):
    v = g.v
    winv = R.inverse(R.sub(R.one, R.scale(2, v)))
    return R.mul(R.mul(winv, winv), R.add(R.sub(R.mul(v, v), v), x))


_ACTIONS: dict[ActionKind, Callable] = {
    ActionKind.STAR: _star, ActionKind.DIAMOND: _diamond,
    ActionKind.PENTAGRAM: _pentagram, ActionKind.AST: _ast,
}


# ---------------------------------------------------------------------------
# orbits


class DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in self.parent}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def pair_key(R: Ring, x):
    return (R.index(x[0]), R.index(x[1]))


def elem_key(R: Ring, x):
    return (R.index(x),)


@dataclass
class OrbitSet:
    instance: ActionInstance | None
    ring: Ring
    orbits: list[list]
    orbit_of: dict = field(repr=False)

    @property
    def representatives(self) -> list:
        return [o[0] for o in self.orbits]

    def __len__(self) -> int:
        return len(self.orbits)

    def as_partition(self) -> frozenset:
        return frozenset(frozenset(o) for o in self.orbits)


def _orbit_set(R: Ring, classes, instance=None, pairs=True) -> OrbitSet:
    key = (lambda x: pair_key(R, x)) if pairs else (lambda x: elem_key(R, x))
    orbits = sorted((sorted(c, key=key) for c in classes), key=lambda o: key(o[0]))
    orbit_of = {x: i for i, o in enumerate(orbits) for x in o}
    return OrbitSet(instance, R, orbits, orbit_of)


def orbits(instance: ActionInstance, R: Ring) -> OrbitSet:
    """Partition the domain by union-find over every (point, group element) pair."""
    space = domain_elements(R, instance.domain)
    group = group_elements(R, instance.group)
    fn = _ACTIONS[instance.kind]
    ds = DisjointSet(space)
    for x in space:
        for g in group:
            ds.union(x, fn(R, x, g))
    return _orbit_set(R, ds.classes().values(), instance,
                      instance.domain in TWO_PARAM)


# ---------------------------------------------------------------------------
# moduli tables


class Property(enum.Enum):
    F = "F"
    SF = "SF"
    R = "R"
    SR = "SR"
    AS = "AS"
    SAS = "SAS"


TABLE_INSTANCE = {
    Property.F: STAR_A2, Property.SF: STAR_S, Property.R: STAR_R,
    Property.SR: STAR_SR, Property.AS: STAR_AS, Property.SAS: AST_L,
}


@dataclass
class ModuliClass:
    rep: tuple
    orbit_size: int
    aut_order: int
    disc: Any
    normal_param: Any = None

    def to_json(self, R: Ring) -> dict:
        return {"rep": [R.to_json(self.rep[0]), R.to_json(self.rep[1])],
                "orbit_size": self.orbit_size, "aut_order": self.aut_order,
                "disc": R.to_json(self.disc),
                "normal_param": None if self.normal_param is None
                else R.to_json(self.normal_param)}


@dataclass
class ModuliTable:
    ring: Ring
    prop: Property
    classes: list[ModuliClass]
    domain_size: int

    def __len__(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "property": self.prop.value,
                "classes": [c.to_json(self.ring) for c in self.classes]}

    def to_csv(self) -> str:
        R = self.ring
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["ring", "property", "rep_a", "rep_b", "orbit_size",
                         "aut_order", "disc", "normal_param"])
        for c in self.classes:
            writer.writerow([str(R), self.prop.value, R.format(c.rep[0]),
                             R.format(c.rep[1]), c.orbit_size, c.aut_order,
                             R.format(c.disc),
                             "" if c.normal_param is None else R.format(c.normal_param)])
        return buf.getvalue()


def moduli_table(R: Ring, prop: Property | str) -> ModuliTable:
    prop = Property(prop)
    inst = TABLE_INSTANCE[prop]
    orb = orbits(inst, R)
    minus_one = R.neg(R.one)
    classes = []
    for o in orb.orbits:
        rep = o[0]
        param = None
        if prop is Property.SAS:
            param = rep
            rep = (minus_one, rep)
        pt = AlgebraPoint(R, *rep)
        if prop in (Property.R, Property.SR):
            param = radical_normal_form(pt).param
        elif prop is Property.AS:
            param = as_normal_form(pt).param
        classes.append(ModuliClass(rep, len(o), aut_group(pt).order,
                                   discriminant(pt), param))
    return ModuliTable(R, prop, classes, sum(len(o) for o in orb.orbits))


# ---------------------------------------------------------------------------
# realizations and cross-checks


@dataclass(frozen=True)
class Realization:
    """An orbit space claimed to parametrize the classes of one property.

    ``embed`` sends a domain element to the (a, b) it stands for.
    """

    name: str
    instance: ActionInstance
    embed: Callable


def realizations(R: Ring, prop: Property | str) -> list[Realization]:
    prop = Property(prop)
    zero, minus_one = R.zero, R.neg(R.one)
    ident = lambda x: x
    radical_pt = lambda a: (zero, a)
    as_pt = lambda a: (minus_one, a)
    two_unit = R.is_unit(R.from_int(2))
    out = [Realization("star", TABLE_INSTANCE[prop], ident)] \
        if prop is not Property.SAS else []
    if prop is Property.R:
        out.append(Realization("pentagram", PENTAGRAM_A1, radical_pt))
    if prop in (Property.F, Property.R) and two_unit:
        out.append(Realization("diamond", DIAMOND_A1, radical_pt))
    if prop is Property.SR and two_unit:
        out.append(Realization("diamond", DIAMOND_UNITS, radical_pt))
    if prop is Property.AS:
        out.append(Realization("ast", AST_A1, as_pt))
    if prop is Property.SAS:
        out.append(Realization("ast", AST_L, as_pt))
    return out


def property_domain(R: Ring, prop: Property | str) -> list[tuple]:
    """All (a, b) whose algebra has the property."""
    prop = Property(prop)
    if prop is Property.SAS:
        return [(R.neg(R.one), a) for a in domain_elements(R, Domain.L)]
    return domain_elements(R, TABLE_INSTANCE[prop].domain)


def _oracle(name: str) -> Callable:
    if name == "brute":
        return brute_is_isomorphic
    if name == "solutions":
        return is_isomorphic
    raise ValueError(f"unknown oracle {name!r}")


def iso_partition(R: Ring, points: list[tuple], oracle: str = "brute") -> list[list]:
    """Classes of points under isomorphism, comparing each point with class representatives."""
    test = _oracle(oracle)
    classes: list[list] = []
    for p in points:
        P = AlgebraPoint(R, *p)
        hits = [c for c in classes if test(P, AlgebraPoint(R, *c[0]))]
        if len(hits) > 1:
            raise AssertionError(f"{p} isomorphic to two class representatives")
        if hits:
            hits[0].append(p)
        else:
            classes.append([p])
    return classes


@dataclass
class RealizationCheck:
    name: str
    match: bool
    n_classes: int
    covers: bool
    mismatch: Any = None


@dataclass
class CrosscheckReport:
    ring: Ring
    prop: Property
    checks: list[RealizationCheck]

    @property
    def passed(self) -> bool:
        return all(c.match and c.covers for c in self.checks)

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "property": self.prop.value,
                "pass": self.passed,
                "realizations": [{"name": c.name, "match": c.match,
                                  "covers": c.covers, "classes": c.n_classes,
                                  "mismatch": c.mismatch} for c in self.checks]}


def crosscheck_moduli(R: Ring, prop: Property | str, oracle: str = "brute") -> CrosscheckReport:
    """Compare every orbit realization of ``prop`` with the isomorphism partition.

    For a one-parameter realization the embedded points are partitioned
    by isomorphism, and every point with the property must be isomorphic
    to some embedded point (``covers``).
    """
    prop = Property(prop)
    test = _oracle(oracle)
    full = property_domain(R, prop)
    checks = []
    for real in realizations(R, prop):
        orb = orbits(real.instance, R)
        action_part = {frozenset(real.embed(x) for x in o) for o in orb.orbits}
        embedded = [real.embed(x) for x in domain_elements(R, real.instance.domain)]
        iso_part = {frozenset(c) for c in iso_partition(R, embedded, oracle)}
        mismatch = None
        if action_part != iso_part:
            diff = sorted(action_part.symmetric_difference(iso_part),
                          key=lambda s: sorted(pair_key(R, p) for p in s))
            mismatch = [[R.to_json(p[0]), R.to_json(p[1])]
                        for p in sorted(diff[0], key=lambda p: pair_key(R, p))]
        reps = [AlgebraPoint(R, *sorted(c, key=lambda p: pair_key(R, p))[0])
                for c in iso_part]
        embedded_set = set(embedded)
        covers = all(p in embedded_set or
                     any(test(AlgebraPoint(R, *p), q) for q in reps)
                     for p in full)
        checks.append(RealizationCheck(real.name, action_part == iso_part,
                                       len(orb), covers, mismatch))
    return CrosscheckReport(R, prop, checks)


# ---------------------------------------------------------------------------
# cross-bijections


@dataclass
class VariantResult:
    name: str
    well_defined: bool
    bijective: bool
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.well_defined and self.bijective


@dataclass
class BijectionReport:
    name: str
    ring: Ring
    variant: str | None
    variants: list[VariantResult]
    mapping: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.variant is not None

    def to_json(self) -> dict:
        R = self.ring
        return {"bijection": self.name, "ring": str(R), "variant_used": self.variant,
                "variants": [{"name": v.name, "well_defined": v.well_defined,
                              "bijective": v.bijective, "detail": v.detail}
                             for v in self.variants],
                "mapping": [[R.to_json(s), R.to_json(t)] for s, t in self.mapping]}


def _check_orbit_map(R: Ring, source: OrbitSet, target: OrbitSet, images: Callable,
                     name: str):
    """``images(x)`` yields every candidate image of domain point x."""
    assigned: dict[int, int] = {}
    for i, o in enumerate(source.orbits):
        for x in o:
            for y in images(x):
                j = target.orbit_of[y]
                if assigned.setdefault(i, j) != j:
                    return VariantResult(name, False, False,
                                         f"orbit of {o[0]!r} hits two target orbits"), {}
        if i not in assigned:
            return VariantResult(name, False, False, f"no image for orbit of {o[0]!r}"), {}
    hit = set(assigned.values())
    bij = len(hit) == len(assigned) == len(target)
    detail = "" if bij else f"{len(source)} source orbits, {len(target)} target, {len(hit)} hit"
    return VariantResult(name, True, bij, detail), assigned


def _run_variants(name: str, R: Ring, source: OrbitSet, target: OrbitSet,
                  variants: list[tuple[str, Callable]]) -> BijectionReport:
    results, chosen, mapping = [], None, []
    for vname, images in variants:
        res, assigned = _check_orbit_map(R, source, target, images, vname)
        results.append(res)
        if chosen is None and res.passed:
            chosen = vname
            mapping = [(source.orbits[i][0], target.orbits[j][0])
                       for i, j in sorted(assigned.items())]
    return BijectionReport(name, R, chosen, results, mapping)


AS_VARIANTS = (
    "u=-(2v+a), c=u^-2(b-v^2-uv)",
    "u=-(2v+a), c=u^-2(-b+v^2+uv)",
    "u=a-2v, c=u^-2(-b+v^2+uv)",
    "u=a-2v, c=u^-2(b-v^2-uv)",
)


def bijection_as_to_h(R: Ring) -> BijectionReport:
    """Star-orbits on AS(R) -> ast-orbits on R, trying each sign convention in turn."""
    source = orbits(STAR_AS, R)
    target = orbits(AST_A1, R)

    def make(u_of, sign):
        def images(x):
            a, b = x
            for v in R.elements():
                u = u_of(a, v)
                if not R.is_unit(u):
                    continue
                uinv = R.inverse(u)
                inner = R.sub(R.sub(b, R.mul(v, v)), R.mul(u, v))
                if sign < 0:
                    inner = R.neg(inner)
                yield R.mul(R.mul(uinv, uinv), inner)
        return images

    u_prop = lambda a, v: R.neg(R.add(R.scale(2, v), a))
    u_lit = lambda a, v: R.sub(a, R.scale(2, v))
    variants = [(AS_VARIANTS[0], make(u_prop, 1)), (AS_VARIANTS[1], make(u_prop, -1)),
                (AS_VARIANTS[2], make(u_lit, -1)), (AS_VARIANTS[3], make(u_lit, 1))]
    return _run_variants("AS->H", R, source, target, variants)


R_VARIANTS = ("c=b-v^2", "c=b+v^2")


def bijection_r_to_t(R: Ring) -> BijectionReport:
    """Star-orbits on Rset -> pentagram-orbits on R via a = 2v, (a, b) -> b -/+ v^2."""
    source = orbits(STAR_R, R)
    target = orbits(PENTAGRAM_A1, R)
    two = R.from_int(2)

    def make(sign):
        def images(x):
            a, b = x
            for v in R.elements():
                if R.mul(two, v) == a:
                    sq = R.mul(v, v)
                    yield R.sub(b, sq) if sign < 0 else R.add(b, sq)
        return images

    return _run_variants("R->T", R, source, target,
                         [(R_VARIANTS[0], make(-1)), (R_VARIANTS[1], make(1))])


# ---------------------------------------------------------------------------
# embeddings


@dataclass
class EmbeddingCheck:
    name: str
    well_defined: bool
    injective: bool
    surjective: bool
    expect_bijective: bool

    @property
    def passed(self) -> bool:
        ok = self.well_defined and self.injective
        return ok and (self.surjective or not self.expect_bijective)


def _embedding(name, R, sub: ActionInstance, amb: ActionInstance, embed, bij=False):
    source, target = orbits(sub, R), orbits(amb, R)
    images = lambda x: [embed(x)]
    res, assigned = _check_orbit_map(R, source, target, images, name)
    injective = len(set(assigned.values())) == len(assigned)
    surjective = len(set(assigned.values())) == len(target)
    return EmbeddingCheck(name, res.well_defined, res.well_defined and injective,
                          surjective, bij)


def embeddings_report(R: Ring) -> list[EmbeddingCheck]:
    zero, minus_one = R.zero, R.neg(R.one)
    ident = lambda x: x
    return [
        _embedding("SF -> F", R, STAR_S, STAR_A2, ident),
        _embedding("R(pentagram) ~ R(star)", R, PENTAGRAM_A1, STAR_R,
                   lambda a: (zero, a), bij=True),
        _embedding("R -> F", R, STAR_R, STAR_A2, ident),
        _embedding("SAS -> AS(ast)", R, AST_L, AST_A1, ident),
        _embedding("AS(ast) ~ AS(star)", R, AST_A1, STAR_AS,
                   lambda a: (minus_one, a), bij=True),
        _embedding("AS -> F", R, STAR_AS, STAR_A2, ident),
    ]


# ---------------------------------------------------------------------------
# finite fields


def field_moduli_counts(R: Ring) -> dict:
    """Class counts per property next to the one-parameter orbit counts that predict them."""
    if not R.is_field:
        raise ValueError(f"{R} is not a field")
    counts = {p.value: len(orbits(TABLE_INSTANCE[p], R)) for p in Property}
    if R.characteristic != 2:
        predicted = {
            "F": len(orbits(DIAMOND_A1, R)), "R": len(orbits(DIAMOND_A1, R)),
            "AS": len(orbits(DIAMOND_A1, R)), "SF": len(orbits(DIAMOND_UNITS, R)),
            "SR": len(orbits(DIAMOND_UNITS, R)),
        }
    else:
        t, h = len(orbits(PENTAGRAM_A1, R)), len(orbits(AST_A1, R))
        predicted = {"F": t + h, "R": t, "AS": h, "SF": h, "SR": 0}
    return {"ring": str(R), "classes": counts, "predicted": predicted,
            "pass": all(counts[k] == v for k, v in predicted.items())}
