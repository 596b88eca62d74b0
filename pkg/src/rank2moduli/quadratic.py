"""Free rank-2 algebras R[x]/(x^2 + a x + b) and their coefficient-level invariants."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any

from .rings import InfiniteRingError, Ring, RingHom, build_ring, parse_ring_spec


@dataclass(frozen=True)
class AlgebraPoint:
    """The algebra R[x]/(x^2 + a x + b)."""

    ring: Ring
    a: Any
    b: Any

    def __post_init__(self):
        if not (self.ring.contains(self.a) and self.ring.contains(self.b)):
            raise ValueError(f"({self.a!r}, {self.b!r}) are not elements of {self.ring}")

    def __repr__(self) -> str:
        R = self.ring
        return f"AlgebraPoint({R}, a={R.format(self.a)}, b={R.format(self.b)})"

    @property
    def coords(self) -> tuple:
        return (self.a, self.b)

    def algebra(self) -> "QuadraticAlgebra":
        return QuadraticAlgebra(self)

    def to_json(self) -> dict:
        return {"ring": str(self.ring), "a": self.ring.to_json(self.a),
                "b": self.ring.to_json(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "AlgebraPoint":
        R = build_ring(parse_ring_spec(obj["ring"]))
        return cls(R, R.from_json(obj["a"]), R.from_json(obj["b"]))


def point(R: Ring, a, b) -> AlgebraPoint:
    """Convenience constructor; Python ints are read as multiples of 1."""
    def conv(x):
        return R.from_int(x) if isinstance(x, int) else x
    return AlgebraPoint(R, conv(a), conv(b))


class QuadraticAlgebra:
    """Elements are pairs (s, t) meaning s*1 + t*e, with e^2 = -b*1 - a*e."""

    def __init__(self, pt: AlgebraPoint):
        self.point = pt
        self.ring = pt.ring
        R = self.ring
        self.one = (R.one, R.zero)
        self.zero = (R.zero, R.zero)
        self.gen = (R.zero, R.one)

    def add(self, u, v):
        R = self.ring
        return (R.add(u[0], v[0]), R.add(u[1], v[1]))

    def sub(self, u, v):
        R = self.ring
        return (R.sub(u[0], v[0]), R.sub(u[1], v[1]))

    def neg(self, u):
        return (self.ring.neg(u[0]), self.ring.neg(u[1]))

    def mul(self, u, v):
        R, a, b = self.ring, self.point.a, self.point.b
        s1, t1 = u
        s2, t2 = v
        tt = R.mul(t1, t2)
        return (R.sub(R.mul(s1, s2), R.mul(b, tt)),
                R.sub(R.add(R.mul(s1, t2), R.mul(s2, t1)), R.mul(a, tt)))

    def scalar(self, r):
        return (r, self.ring.zero)

    def smul(self, r, u):
        return (self.ring.mul(r, u[0]), self.ring.mul(r, u[1]))

    def elements(self) -> list:
        els = self.ring.elements()
        return [(s, t) for s in els for t in els]

    def evaluate(self, a, b, u):
        """u^2 + a*u + b for ring elements a, b."""
        return self.add(self.add(self.mul(u, u), self.smul(a, u)), self.scalar(b))


# ---------------------------------------------------------------------------
# discriminant and predicates


def discriminant(pt: AlgebraPoint):
    R = pt.ring
    return R.sub(R.mul(pt.a, pt.a), R.scale(4, pt.b))


def is_separable(pt: AlgebraPoint) -> bool:
    return pt.ring.is_unit(discriminant(pt))


def _require_finite(R: Ring, what: str) -> None:
    if not R.is_finite:
        raise InfiniteRingError(f"{what} scans the ring; {R} is infinite")


def separability_witness(pt: AlgebraPoint):
    """First (v, w) with 2w = av and -aw + 2bv = 1, or None."""
    R = pt.ring
    _require_finite(R, "separability_witness")
    a, b = pt.a, pt.b
    two = R.from_int(2)
    for v in R.elements():
        av, bv2 = R.mul(a, v), R.mul(two, R.mul(b, v))
        for w in R.elements():
            if (R.mul(two, w) == av
                    and R.add(R.neg(R.mul(a, w)), bv2) == R.one):
                return (v, w)
    return None


def radical_witness(pt: AlgebraPoint):
    """First v with a = 2v, or None."""
    R = pt.ring
    _require_finite(R, "radical_witness")
    two = R.from_int(2)
    return next((v for v in R.elements() if R.mul(two, v) == pt.a), None)


def is_radical(pt: AlgebraPoint) -> bool:
    return radical_witness(pt) is not None


def artin_schreier_witness(pt: AlgebraPoint):
    """First v with 2v + a a unit, or None."""
    R = pt.ring
    _require_finite(R, "artin_schreier_witness")
    return next((v for v in R.elements()
                 if R.is_unit(R.add(R.scale(2, v), pt.a))), None)


def is_artin_schreier(pt: AlgebraPoint) -> bool:
    return artin_schreier_witness(pt) is not None


# ---------------------------------------------------------------------------
# normal forms


class NormalKind(enum.Enum):
    RADICAL = "RadicalParam"     # x^2 + c
    ARTIN_SCHREIER = "ASParam"   # x^2 - x + c
    ETALE_ODD = "EtaleOdd"       # y^2 - c
    ETALE_EVEN = "EtaleEven"     # y^2 - y + c


@dataclass(frozen=True)
class NormalForm:
    """A one-parameter form reached by the substitution ``x = w*y + v``.

    ``(w, v)`` is the group element carrying the original point to
    ``target_point()`` under the parameter action.
    """

    kind: NormalKind
    ring: Ring
    param: Any
    w: Any
    v: Any

    def target_point(self) -> AlgebraPoint:
        R, c = self.ring, self.param
        if self.kind is NormalKind.RADICAL:
            return AlgebraPoint(R, R.zero, c)
        if self.kind is NormalKind.ETALE_ODD:
            return AlgebraPoint(R, R.zero, R.neg(c))
        return AlgebraPoint(R, R.neg(R.one), c)

    def generator(self, alg: QuadraticAlgebra):
        """The new generator y = w^{-1}(x - v) inside the original algebra."""
        R = self.ring
        winv = R.inverse(self.w)
        return alg.smul(winv, alg.sub(alg.gen, alg.scalar(self.v)))

    def to_json(self) -> dict:
        R = self.ring
        return {"kind": self.kind.value, "param": R.to_json(self.param),
                "substitution": {"w": R.to_json(self.w), "v": R.to_json(self.v)}}


def check_normal_form(pt: AlgebraPoint, nf: NormalForm) -> bool:
    """Re-expand: the substituted generator satisfies the claimed polynomial."""
    alg = pt.algebra()
    tgt = nf.target_point()
    y = nf.generator(alg)
    return alg.evaluate(tgt.a, tgt.b, y) == alg.zero


def _checked(pt: AlgebraPoint, nf: NormalForm) -> NormalForm:
    if not check_normal_form(pt, nf):
        raise AssertionError(f"normal form {nf} fails re-expansion for {pt}")
    return nf


def radical_normal_form(pt: AlgebraPoint) -> NormalForm | None:
    """x^2 + (b - v^2) via y = x + v, where a = 2v."""
    v = radical_witness(pt)
    if v is None:
        return None
    R = pt.ring
    c = R.sub(pt.b, R.mul(v, v))
    return _checked(pt, NormalForm(NormalKind.RADICAL, R, c, R.one, R.neg(v)))


def as_normal_form(pt: AlgebraPoint) -> NormalForm | None:
    """x^2 - x + u^{-2}(b - v^2 - uv) via y = u^{-1}(x - v), u = -(2v + a)."""
    v = artin_schreier_witness(pt)
    if v is None:
        return None
    R = pt.ring
    u = R.neg(R.add(R.scale(2, v), pt.a))
    uinv = R.inverse(u)
    c = R.mul(R.mul(uinv, uinv), R.sub(R.sub(pt.b, R.mul(v, v)), R.mul(u, v)))
    return _checked(pt, NormalForm(NormalKind.ARTIN_SCHREIER, R, c, u, v))


def etale_normal_form(pt: AlgebraPoint) -> NormalForm | None:
    """Separable points only: y^2 - disc when 2 is a unit, y^2 - y + b/a^2 when 2 = 0.

    The odd branch substitutes y = 2x + a.
    """
    R = pt.ring
    two = R.from_int(2)
    if not (R.is_unit(two) or two == R.zero):
        raise ValueError(f"neither branch applies: 2 is neither a unit nor zero in {R}")
    if not is_separable(pt):
        return None
    if R.is_unit(two):
        # x = (y - a)/2, i.e. (w, v) = (1/2, -a/2)
        half = R.inverse(two)
        nf = NormalForm(NormalKind.ETALE_ODD, R, discriminant(pt), half,
                        R.neg(R.mul(half, pt.a)))
        return _checked(pt, nf)
    ainv = R.inverse(pt.a)
    c = R.mul(R.mul(ainv, ainv), pt.b)
    return _checked(pt, NormalForm(NormalKind.ETALE_EVEN, R, c, pt.a, R.zero))


# ---------------------------------------------------------------------------
# trace and conjugation


def trace(pt: AlgebraPoint, u):
    """Trace of multiplication by u = s + t e: 2s - a t."""
    R = pt.ring
    s, t = u
    return R.sub(R.scale(2, s), R.mul(pt.a, t))


def galois_conj(pt: AlgebraPoint, u):
    """tau(u) = Tr(u)*1 - u."""
    R = pt.ring
    return (R.sub(trace(pt, u), u[0]), R.neg(u[1]))


# ---------------------------------------------------------------------------
# multiplication tables and base change


class NotUnitalRank2(ValueError):
    pass


def point_from_table(R: Ring, table, unit) -> tuple[AlgebraPoint, Any]:
    """Recover (a, b) from a rank-2 multiplication table.

    ``table[i][j]`` holds the coordinates of ``b_i * b_j`` in the basis
    ``(b_1, b_2)``; ``unit`` holds the coordinates of ``1_A``. Returns the
    point and the coordinates of the generator ``e`` that was used.
    """
    _require_finite(R, "point_from_table")
    u1, u2 = unit

    def tmul(p, q):
        out = [R.zero, R.zero]
        for i in range(2):
            for j in range(2):
                c = R.mul(p[i], q[j])
                prod_ij = table[i][j]
                out[0] = R.add(out[0], R.mul(c, prod_ij[0]))
                out[1] = R.add(out[1], R.mul(c, prod_ij[1]))
        return tuple(out)

    basis = [(R.one, R.zero), (R.zero, R.one)]
    if any(tmul(tuple(unit), bv) != bv for bv in basis):
        raise NotUnitalRank2("designated unit does not act as the identity")
    r = next(((r1, r2) for r1 in R.elements() for r2 in R.elements()
              if R.add(R.mul(r1, u1), R.mul(r2, u2)) == R.one), None)
    if r is None:
        raise NotUnitalRank2("unit coordinates generate a proper ideal")
    r1, r2 = r
    # e = -r2*b1 + r1*b2 makes det[[u1, u2], [-r2, r1]] = r1 u1 + r2 u2 = 1
    e = (R.neg(r2), r1)
    e2 = tmul(e, e)
    # write e^2 = alpha*1 + beta*e by inverting [[u1, u2], [-r2, r1]]
    # alpha*u1 - beta*r2 = e2[0]; alpha*u2 + beta*r1 = e2[1]
    alpha = R.add(R.mul(e2[0], r1), R.mul(e2[1], r2))
    beta = R.sub(R.mul(e2[1], u1), R.mul(e2[0], u2))
    return AlgebraPoint(R, R.neg(beta), R.neg(alpha)), e


def standard_table(pt: AlgebraPoint):
    """Table of the basis (1, e), plus the unit coordinates."""
    R, a, b = pt.ring, pt.a, pt.b
    one, e = (R.one, R.zero), (R.zero, R.one)
    ee = (R.neg(b), R.neg(a))
    return [[one, e], [e, ee]], (R.one, R.zero)


def base_change(pt: AlgebraPoint, hom: RingHom) -> AlgebraPoint:
    if hom.source != pt.ring:
        raise ValueError(f"hom starts at {hom.source}, point lives over {pt.ring}")
    return AlgebraPoint(hom.target, hom(pt.a), hom(pt.b))


# ---------------------------------------------------------------------------
# brute-force oracle


def brute_generator_search(pt: AlgebraPoint, kind: str):
    """Scan the algebra for a radical or Artin-Schreier generator.

    ``kind`` is ``"radical"`` (u^2 in R) or ``"artin_schreier"`` (u^2 - u in R);
    ``(1, u)`` must be a basis, i.e. the e-coordinate of u is a unit.
    """
    R = pt.ring
    _require_finite(R, "brute_generator_search")
    alg = pt.algebra()
    for u in alg.elements():
        if not R.is_unit(u[1]):
            continue
        sq = alg.mul(u, u)
        if kind == "radical":
            val = sq
        elif kind == "artin_schreier":
            val = alg.sub(sq, u)
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
        if val[1] == R.zero:
            return u
    return None


def all_points(R: Ring) -> list[AlgebraPoint]:
    els = R.elements()
    return [AlgebraPoint(R, a, b) for a in els for b in els]
