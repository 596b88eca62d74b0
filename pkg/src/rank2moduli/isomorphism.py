"""Isomorphisms and automorphisms between free rank-2 algebras."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .quadratic import AlgebraPoint, QuadraticAlgebra, discriminant
from .rings import QuadraticIntegerRing, Ring


@dataclass(frozen=True)
class IsoSolution:
    """The algebra map x -> w*y + v (w a unit)."""

    v: Any
    w: Any

    def to_json(self, R: Ring) -> list:
        return [R.to_json(self.v), R.to_json(self.w)]


def _same_ring(src: AlgebraPoint, dst: AlgebraPoint) -> Ring:
    if src.ring != dst.ring:
        raise ValueError(f"points live over different rings: {src.ring}, {dst.ring}")
    return src.ring


def is_algebra_isomorphism(src: AlgebraPoint, dst: AlgebraPoint, image) -> bool:
    """Does the R-linear map 1 -> 1, x -> image define a ring isomorphism?

    Checked directly on the concrete algebras: multiplicativity on the basis
    products and invertibility of the 2x2 coordinate matrix.
    """
    R = src.ring
    A, B = QuadraticAlgebra(src), QuadraticAlgebra(dst)

    def phi(u):
        s, t = u
        return B.add(B.scalar(s), B.smul(t, image))

    # columns (1, 0) and image: det = image[1]
    if not R.is_unit(image[1]):
        return False
    # x*x first: it is the product that fails for almost every candidate
    pairs = [(A.gen, A.gen), (A.one, A.one), (A.one, A.gen), (A.gen, A.one)]
    return all(phi(A.mul(u, v)) == B.mul(phi(u), phi(v)) for u, v in pairs)


def iso_solutions(src: AlgebraPoint, dst: AlgebraPoint) -> list[IsoSolution]:
    """All (v, w) in R x R^x with 2v = cw - a and -dw^2 + v^2 + av + b = 0.

    Each solution is re-checked as a genuine algebra isomorphism.
    """
    R = _same_ring(src, dst)
    a, b, c, d = src.a, src.b, dst.a, dst.b
    two = R.from_int(2)
    units = R.units()
    out = []
    for v in R.elements():
        lhs = R.mul(two, v)
        base = R.add(R.add(R.mul(v, v), R.mul(a, v)), b)
        for w in units:
            if lhs != R.sub(R.mul(c, w), a):
                continue
            if R.sub(base, R.mul(d, R.mul(w, w))) != R.zero:
                continue
            if not is_algebra_isomorphism(src, dst, (v, w)):
                raise AssertionError(f"solution (v={v}, w={w}) is not an isomorphism")
            out.append(IsoSolution(v, w))
    return out


def brute_isomorphisms(src: AlgebraPoint, dst: AlgebraPoint) -> list:
    """Oracle: every image (s, t) of x giving an isomorphism, by full scan of B."""
    R = _same_ring(src, dst)
    return [(s, t) for s in R.elements() for t in R.elements()
            if is_algebra_isomorphism(src, dst, (s, t))]


def brute_is_isomorphic(src: AlgebraPoint, dst: AlgebraPoint) -> bool:
    R = _same_ring(src, dst)
    return any(is_algebra_isomorphism(src, dst, (s, t))
               for t in R.units() for s in R.elements())


def is_isomorphic(src: AlgebraPoint, dst: AlgebraPoint) -> bool:
    R = _same_ring(src, dst)
    if isinstance(R, QuadraticIntegerRing):
        verdict = iso_quadint(src, dst).verdict
        if verdict is IsoVerdict.UNDECIDED:
            raise ValueError("isomorphism undecided over " + str(R))
        return verdict is IsoVerdict.ISOMORPHIC
    return bool(iso_solutions(src, dst))


# ---------------------------------------------------------------------------
# automorphism groups


@dataclass
class AutGroup:
    point: AlgebraPoint
    elements: list[IsoSolution]
    table: list[list[int]] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @staticmethod
    def compose(R: Ring, g: IsoSolution, h: IsoSolution) -> IsoSolution:
        """(v, w) o (v', w') = (w v' + v, w w')."""
        return IsoSolution(R.add(R.mul(g.w, h.v), g.v), R.mul(g.w, h.w))

    @staticmethod
    def inverse(R: Ring, g: IsoSolution) -> IsoSolution:
        winv = R.inverse(g.w)
        return IsoSolution(R.neg(R.mul(winv, g.v)), winv)

    def identity(self) -> IsoSolution:
        R = self.point.ring
        return IsoSolution(R.zero, R.one)

    def check_axioms(self) -> bool:
        R = self.point.ring
        idx = {g: i for i, g in enumerate(self.elements)}
        n = self.order
        if self.identity() not in idx:
            return False
        e = idx[self.identity()]
        T = self.table
        for i in range(n):
            if T[e][i] != i or T[i][e] != i:
                return False
            if idx.get(self.inverse(R, self.elements[i])) is None:
                return False
            for j in range(n):
                for k in range(n):
                    if T[T[i][j]][k] != T[i][T[j][k]]:
                        return False
        return True


def aut_group(pt: AlgebraPoint) -> AutGroup:
    R = pt.ring
    els = iso_solutions(pt, pt)
    idx = {g: i for i, g in enumerate(els)}
    try:
        table = [[idx[AutGroup.compose(R, g, h)] for h in els] for g in els]
    except KeyError as exc:
        raise AssertionError(f"Aut({pt}) not closed under composition") from exc
    return AutGroup(pt, els, table)


class FiberTag(enum.Enum):
    MU2 = "MU2"
    GM = "GM"
    Z2_CONSTANT = "Z2_CONSTANT"
    GM_x_ALPHA2 = "GM_x_ALPHA2"
    # reserved for char-2 rings that are not fields; never produced over a field
    DEFORMATION = "DEFORMATION"


@dataclass(frozen=True)
class FiberType:
    tag: FiberTag
    observed_order: int
    expected_order: int

    @property
    def consistent(self) -> bool:
        return self.observed_order == self.expected_order


def aut_fiber_type(pt: AlgebraPoint) -> FiberType:
    """Group-scheme type of Aut over a finite field, with a point-count check."""
    R = pt.ring
    if not R.is_field:
        raise ValueError(f"{R} is not a field")
    n_units = len(R.units())
    if R.characteristic != 2:
        if discriminant(pt) != R.zero:
            tag = FiberTag.MU2
            expected = sum(1 for w in R.units() if R.mul(w, w) == R.one)
        else:
            tag, expected = FiberTag.GM, n_units
    elif pt.a != R.zero:
        tag, expected = FiberTag.Z2_CONSTANT, 2
    else:
        # k^x times the points of alpha_2, which is {0} over a field
        nilp = sum(1 for y in R.elements() if R.mul(y, y) == R.zero)
        tag, expected = FiberTag.GM_x_ALPHA2, n_units * nilp
    return FiberType(tag, aut_group(pt).order, expected)


# ---------------------------------------------------------------------------
# discriminant criteria


def iso_odd_char(src: AlgebraPoint, dst: AlgebraPoint) -> list:
    """Units w with disc(src) = w^2 disc(dst); requires 2 to be a unit."""
    R = _same_ring(src, dst)
    if not R.is_unit(R.from_int(2)):
        raise ValueError(f"2 is not a unit in {R}")
    d1, d2 = discriminant(src), discriminant(dst)
    return [w for w in R.units() if R.mul(R.mul(w, w), d2) == d1]


class IsoVerdict(enum.Enum):
    ISOMORPHIC = "isomorphic"
    NOT_ISOMORPHIC = "not_isomorphic"
    UNDECIDED = "undecided"


@dataclass
class IsoDecision:
    verdict: IsoVerdict
    solutions: list[IsoSolution]
    certificate: str
    candidates: list = field(default_factory=list)

    def to_json(self, R: Ring) -> dict:
        isomorphic: bool | str
        if self.verdict is IsoVerdict.UNDECIDED:
            isomorphic = "undecided"
        else:
            isomorphic = self.verdict is IsoVerdict.ISOMORPHIC
        return {"isomorphic": isomorphic,
                "solutions": [s.to_json(R) for s in self.solutions],
                "certificate": self.certificate}


def iso_quadint(src: AlgebraPoint, dst: AlgebraPoint) -> IsoDecision:
    """Decide isomorphism over Z[sqrt d] from the discriminant identity.

    Over a domain of characteristic 0 an isomorphism is a unit w with
    disc(src) = w^2 disc(dst) and 2 | (cw - a); then v = (cw - a)/2.
    """
    R = _same_ring(src, dst)
    if not isinstance(R, QuadraticIntegerRing):
        raise ValueError("iso_quadint works over zsqrt rings")
    a, b, c, d = src.a, src.b, dst.a, dst.b
    d1, d2 = discriminant(src), discriminant(dst)
    fmt = R.format
    two = R.from_int(2)
    if d2 == R.zero:
        if d1 != R.zero:
            return IsoDecision(IsoVerdict.NOT_ISOMORPHIC, [],
                               f"disc {fmt(d1)} != 0 = disc of target")
        candidates = R.torsion_units()
        complete = R.d < 0
        forced = "disc 0 on both sides; w ranges over all units"
    else:
        ratio = R.quotient(d2, d1)
        if ratio is None:
            return IsoDecision(IsoVerdict.NOT_ISOMORPHIC, [],
                               f"disc ratio {fmt(d1)}/{fmt(d2)} is not in {R}")
        if not R.is_unit(ratio):
            return IsoDecision(IsoVerdict.NOT_ISOMORPHIC, [],
                               f"w²={fmt(ratio)} forced but it is not a unit")
        candidates = R.square_roots(ratio)
        complete = True
        forced = f"w²={fmt(ratio)} forced"
        if not candidates:
            return IsoDecision(IsoVerdict.NOT_ISOMORPHIC, [],
                               f"{forced}; no square root in {R}")
    candidates = sorted(candidates, key=lambda w: (w != R.one, w))
    solutions, failures = [], []
    for w in candidates:
        num = R.sub(R.mul(c, w), a)
        v = R.quotient(two, num)
        if v is None:
            failures.append(f"2 ∤ ({fmt(num)}) at w={fmt(w)}")
            continue
        resid = R.add(R.add(R.sub(R.mul(v, v), R.mul(d, R.mul(w, w))), R.mul(a, v)), b)
        if resid != R.zero:
            failures.append(f"constant term {fmt(resid)} != 0 at w={fmt(w)}")
            continue
        solutions.append(IsoSolution(v, w))
    ws = "{" + ",".join(fmt(w) for w in candidates) + "}"
    if solutions:
        s = solutions[0]
        return IsoDecision(IsoVerdict.ISOMORPHIC, solutions,
                           f"{forced}; x -> {fmt(s.w)}*y + {fmt(s.v)}", candidates)
    if complete:
        return IsoDecision(IsoVerdict.NOT_ISOMORPHIC, [],
                           f"{forced}; w ∈ {ws}; " + "; ".join(failures), candidates)
    return IsoDecision(IsoVerdict.UNDECIDED, [],
                       f"{forced}; torsion units {ws} fail and the unit group is infinite",
                       candidates)


def zsqrt5_counterexample():
    """(1, 1) and (sqrt5, 2) over Z[sqrt5]: equal discriminant, not isomorphic."""
    from .rings import ring
    R = ring("zsqrt(5)")
    src = AlgebraPoint(R, R.one, R.one)
    dst = AlgebraPoint(R, R.sqrt_d(), R.from_int(2))
    return src, dst, iso_quadint(src, dst)
