"""Symbolic Hopf-algebra and coaction identities, and points of Aut Hopf algebras.

Polynomials live in tensor powers of Z[a, b][x, 1/x, y, z, t]. The scalars
a and b are central, so they are stored once per term rather than per
tensor factor. Only x may carry a negative exponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .isomorphism import AutGroup, IsoSolution, aut_group
from .quadratic import AlgebraPoint
from .rings import Ring

VARS = ("x", "y", "z", "t")
PARAMS = ("a", "b")
_ZERO4 = (0, 0, 0, 0)


class ConstructionError(ValueError):
    pass


def _check_factor(f: tuple) -> None:
    if len(f) != 4:
        raise ConstructionError(f"exponent vector {f} has the wrong length")
    if min(f[1:]) < 0:
        raise ConstructionError(f"only x may be inverted, got exponents {f}")


class TensorPoly:
    """Sparse element of Z[a,b] (x) H^{(x)n} with integer coefficients.

    ``terms`` maps ``(param_exponents, factor_exponents)`` to a non-zero int,
    where param_exponents is (e_a, e_b) and factor_exponents has one 4-tuple
    (e_x, e_y, e_z, e_t) per tensor factor.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None):
        self.n = n
        clean = {}
        for (params, factors), c in (terms or {}).items():
            if len(factors) != n:
                raise ConstructionError(f"term of degree {len(factors)} in a degree-{n} tensor")
            if len(params) != 2 or min(params) < 0:
                raise ConstructionError(f"bad parameter exponents {params}")
            for f in factors:
                _check_factor(f)
            if c:
                clean[(tuple(params), tuple(map(tuple, factors)))] = int(c)
        self.terms = clean

    # constructors

    @classmethod
    def constant(cls, c: int, n: int = 1) -> "TensorPoly":
        return cls(n, {((0, 0), (_ZERO4,) * n): c})

    @classmethod
    def var(cls, name: str, power: int = 1, n: int = 1, at: int = 0) -> "TensorPoly":
        if name in PARAMS:
            e = [0, 0]
            e[PARAMS.index(name)] = power
            return cls(n, {(tuple(e), (_ZERO4,) * n): 1})
        f = [0, 0, 0, 0]
        f[VARS.index(name)] = power
        factors = [_ZERO4] * n
        factors[at] = tuple(f)
        return cls(n, {((0, 0), tuple(factors)): 1})

    # arithmetic

    def _coerce(self, other) -> "TensorPoly":
        if isinstance(other, int):
            return TensorPoly.constant(other, self.n)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        if other.n != self.n:
            raise ConstructionError(f"tensor degrees differ: {self.n} vs {other.n}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorPoly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorPoly(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (p1, f1), c1 in self.terms.items():
            for (p2, f2), c2 in other.terms.items():
                key = ((p1[0] + p2[0], p1[1] + p2[1]),
                       tuple(tuple(u + v for u, v in zip(g1, g2)) for g1, g2 in zip(f1, f2)))
                out[key] = out.get(key, 0) + c1 * c2
        return TensorPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            inv = self.monomial_inverse()
            return inv ** (-e)
        out = TensorPoly.constant(1, self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def monomial_inverse(self) -> "TensorPoly":
        """Inverse of a +-1 times x-power monomial; anything else is not invertible."""
        if len(self.terms) != 1:
            raise ConstructionError("only monomials can be inverted")
        (params, factors), c = next(iter(self.terms.items()))
        if c not in (1, -1) or params != (0, 0) or any(f[1:] != (0, 0, 0) for f in factors):
            raise ConstructionError(f"{self} is not invertible")
        return TensorPoly(self.n, {((0, 0), tuple((-f[0], 0, 0, 0) for f in factors)): c})

    def tensor(self, other: "TensorPoly") -> "TensorPoly":
        out: dict = {}
        for (p1, f1), c1 in self.terms.items():
            for (p2, f2), c2 in other.terms.items():
                key = ((p1[0] + p2[0], p1[1] + p2[1]), f1 + f2)
                out[key] = out.get(key, 0) + c1 * c2
        return TensorPoly(self.n + other.n, out)

    def __matmul__(self, other):
        return self.tensor(other)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TensorPoly.constant(other, self.n)
        return isinstance(other, TensorPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def first_monomial(self) -> str | None:
        if not self.terms:
            return None
        k, c = self.sorted_terms()[0]
        return _format_term(k, c, self.n)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        s = " + ".join(_format_term(k, c, self.n) for k, c in self.sorted_terms())
        return s.replace("+ -", "- ")


def _format_monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_term(key, c: int, n: int) -> str:
    params, factors = key
    out = str(c)
    pstr = _format_monomial(PARAMS, params)
    if pstr:
        out += "*" + pstr
    if n:
        out += "*[" + " (x) ".join(_format_monomial(VARS, f) or "1" for f in factors) + "]"
    return out


def laurent(n: int = 1):
    """Shorthand generators x, y, z, t, a, b in a degree-n tensor power (at factor 0)."""
    return tuple(TensorPoly.var(v, n=n) for v in VARS + PARAMS)


X, Y, Z, T, A, B = laurent()
ONE = TensorPoly.constant(1)
LaurentPoly = TensorPoly  # a LaurentPoly is a degree-1 TensorPoly


def as_laurent(p: TensorPoly) -> TensorPoly:
    if p.n != 1:
        raise ConstructionError(f"expected a Laurent polynomial, got tensor degree {p.n}")
    return p


def embed(p: TensorPoly, n: int) -> TensorPoly:
    """A degree-0 tensor (a scalar in Z[a,b]) as a multiple of 1 in degree n."""
    if p.n != 0:
        raise ConstructionError("only scalars can be embedded")
    return TensorPoly(n, {(params, (_ZERO4,) * n): c for (params, _), c in p.terms.items()})


# ---------------------------------------------------------------------------
# algebra maps


@dataclass
class AlgebraMap:
    """Ring map Z[a,b][x,1/x,y,z,t] -> degree-k tensor, fixed on a and b.

    ``images`` names the image of each generator that matters; unlisted
    generators map to themselves in factor 0 (only sensible when k == 1).
    ``x_inv`` is the image of 1/x.
    """

    name: str
    k: int
    images: dict
    x_inv: TensorPoly | None = None

    def __post_init__(self):
        for v, img in self.images.items():
            if img.n != self.k:
                raise ConstructionError(f"{self.name}: image of {v} has degree {img.n}")
        if "x" in self.images:
            if self.x_inv is None:
                self.x_inv = self.images["x"].monomial_inverse()
            if self.images["x"] * self.x_inv != TensorPoly.constant(1, self.k):
                raise ConstructionError(f"{self.name}: x and 1/x images are not inverse")
        self._pow: dict = {}

    def image(self, var: str) -> TensorPoly:
        if var in self.images:
            return self.images[var]
        if self.k != 1:
            raise ConstructionError(f"{self.name} has no image for {var}")
        return TensorPoly.var(var)

    def _power(self, var: str, e: int) -> TensorPoly:
        key = (var, e)
        if key not in self._pow:
            if var == "x" and e < 0:
                base = self.x_inv if self.x_inv is not None else self.image("x").monomial_inverse()
                self._pow[key] = base ** (-e)
            else:
                self._pow[key] = self.image(var) ** e
        return self._pow[key]

    def on_monomial(self, f: tuple) -> TensorPoly:
        out = TensorPoly.constant(1, self.k)
        for var, e in zip(VARS, f):
            if e:
                out = out * self._power(var, e)
        return out

    def __call__(self, p: TensorPoly) -> TensorPoly:
        return apply_factorwise(p, [self])


IDENTITY = AlgebraMap("id", 1, {})


def apply_factorwise(p: TensorPoly, maps: list[AlgebraMap]) -> TensorPoly:
    """(f_1 (x) ... (x) f_n)(p); the result has degree sum of the k_i."""
    if len(maps) != p.n:
        raise ConstructionError(f"{len(maps)} maps for a degree-{p.n} tensor")
    k = sum(m.k for m in maps)
    out = TensorPoly(k)
    for (params, factors), c in p.terms.items():
        term = TensorPoly(0, {(params, ()): c})
        for m, f in zip(maps, factors):
            term = term.tensor(m.on_monomial(f))
        out = out + term
    return out


def multiply_factors(p: TensorPoly, i: int) -> TensorPoly:
    """Apply the multiplication map to tensor factors i and i+1."""
    out: dict = {}
    for (params, fs), c in p.terms.items():
        merged = tuple(u + v for u, v in zip(fs[i], fs[i + 1]))
        key = (params, fs[:i] + (merged,) + fs[i + 2:])
        out[key] = out.get(key, 0) + c
    return TensorPoly(p.n - 1, out)


# ---------------------------------------------------------------------------
# reducers: decide membership in the ideal of a relation, exactly


def reduce_mod_2y(p: TensorPoly) -> TensorPoly:
    """Normal form modulo 2y in every factor.

    Z[x,1/x][y]/(2y) is Z[x,1/x] plus (Z/2)[x,1/x]-multiples of positive
    powers of y, and tensor products of these stay free in the same way,
    so a term whose monomial involves y anywhere keeps only its parity.
    """
    out = {}
    for key, c in p.terms.items():
        if any(f[1] for f in key[1]):
            c %= 2
        if c:
            out[key] = c
    return TensorPoly(p.n, out)


def reduce_x_is_1_minus_2y(p: TensorPoly) -> TensorPoly:
    """Image in Z[a,b][y_i, z, t] after clearing x-denominators and putting x = 1 - 2y.

    Modulo x + 2y - 1 each factor becomes a localization of a polynomial
    ring, which Z[y] injects into, so multiplying by a power of x first
    does not change whether the element vanishes.
    """
    if not p.terms:
        return p
    shift = [max(0, -min(f[i][0] for _, f in p.terms)) for i in range(p.n)]
    subst_cache: dict = {}

    def x_power(e: int, at: int) -> TensorPoly:
        key = (e, at)
        if key not in subst_cache:
            subst_cache[key] = (TensorPoly.constant(1, p.n)
                                - 2 * TensorPoly.var("y", n=p.n, at=at)) ** e
        return subst_cache[key]

    out = TensorPoly(p.n)
    for (params, factors), c in p.terms.items():
        rest = tuple((0,) + f[1:] for f in factors)
        term = TensorPoly(p.n, {(params, rest): c})
        for i, f in enumerate(factors):
            e = f[0] + shift[i]
            if e:
                term = term * x_power(e, i)
        out = out + term
    return out


def no_reduction(p: TensorPoly) -> TensorPoly:
    return p


# ---------------------------------------------------------------------------
# presentations


@dataclass
class HopfPresentation:
    name: str
    delta: AlgebraMap
    antipode: AlgebraMap
    counit: AlgebraMap
    generators: tuple = ("x", "y")
    relations: list = field(default_factory=list)
    reducer: Callable[[TensorPoly], TensorPoly] = no_reduction


def _gen(name: str) -> TensorPoly:
    return X ** -1 if name == "1/x" else TensorPoly.var(name)


def semidirect_presentation(name: str = "Gm x| Ga", relations=(), reducer=no_reduction,
                            delta_y: TensorPoly | None = None) -> HopfPresentation:
    x1, x2 = TensorPoly.var("x", n=2, at=0), TensorPoly.var("x", n=2, at=1)
    y1, y2 = TensorPoly.var("y", n=2, at=0), TensorPoly.var("y", n=2, at=1)
    if delta_y is None:
        delta_y = x1 * y2 + y1
    one0 = TensorPoly.constant(1, 0)
    return HopfPresentation(
        name,
        delta=AlgebraMap("delta", 2, {"x": x1 * x2, "y": delta_y}),
        antipode=AlgebraMap("S", 1, {"x": X ** -1, "y": -(X ** -1) * Y}),
        counit=AlgebraMap("eps", 0, {"x": one0, "y": TensorPoly(0)}),
        generators=("x", "1/x", "y"),
        relations=list(relations), reducer=reducer)


def gm_presentation() -> HopfPresentation:
    x1, x2 = TensorPoly.var("x", n=2, at=0), TensorPoly.var("x", n=2, at=1)
    return HopfPresentation(
        "Gm", delta=AlgebraMap("delta", 2, {"x": x1 * x2}),
        antipode=AlgebraMap("S", 1, {"x": X ** -1}),
        counit=AlgebraMap("eps", 0, {"x": TensorPoly.constant(1, 0)}),
        generators=("x", "1/x"))


def t_presentation() -> HopfPresentation:
    """The subgroup 2v = 0, as the quotient by 2y."""
    return semidirect_presentation("T: relation 2y", [2 * Y], reduce_mod_2y)


def h_presentation() -> HopfPresentation:
    """The subgroup w = 1 - 2v, as the quotient by x + 2y - 1."""
    return semidirect_presentation("H: relation x + 2y - 1", [X + 2 * Y - 1],
                                   reduce_x_is_1_minus_2y)


def mutated_presentation() -> HopfPresentation:
    """Deliberately broken: delta(y) = y (x) y."""
    return semidirect_presentation(
        "mutant: delta(y) = y (x) y",
        delta_y=TensorPoly.var("y", n=2, at=0) * TensorPoly.var("y", n=2, at=1))


# ---------------------------------------------------------------------------
# reports


@dataclass
class Check:
    axiom: str
    passed: bool
    counterexample: str | None = None

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "pass": self.passed,
                "counterexample_monomial": self.counterexample}


@dataclass
class Report:
    target: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.axiom for c in self.checks if not c.passed]

    def check(self, axiom: str) -> Check:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"target": self.target,
                               "checks": [c.to_json() for c in self.checks]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _compare(axiom: str, lhs: TensorPoly, rhs: TensorPoly, reducer) -> Check:
    diff = reducer(lhs - rhs)
    return Check(axiom, diff.is_zero(), diff.first_monomial())


def verify_hopf_axioms(pres: HopfPresentation) -> Report:
    """Coassociativity, counit and antipode laws on each generator.

    The structure maps are ring maps, so agreement on generators gives
    agreement everywhere. For a quotient presentation the relations are
    also checked to generate a Hopf ideal.
    """
    rep = Report(pres.name)
    d, s, e, red = pres.delta, pres.antipode, pres.counit, pres.reducer
    for g in pres.generators:
        p = _gen(g)
        dp = d(p)
        rep.checks.append(_compare(f"coassociativity[{g}]",
                                   apply_factorwise(dp, [d, IDENTITY]),
                                   apply_factorwise(dp, [IDENTITY, d]), red))
        rep.checks.append(_compare(f"counit_left[{g}]",
                                   apply_factorwise(dp, [e, IDENTITY]), p, red))
        rep.checks.append(_compare(f"counit_right[{g}]",
                                   apply_factorwise(dp, [IDENTITY, e]), p, red))
        unit = embed(e(p), 1)
        rep.checks.append(_compare(f"antipode_left[{g}]",
                                   multiply_factors(apply_factorwise(dp, [s, IDENTITY]), 0),
                                   unit, red))
        rep.checks.append(_compare(f"antipode_right[{g}]",
                                   multiply_factors(apply_factorwise(dp, [IDENTITY, s]), 0),
                                   unit, red))
    for i, rel in enumerate(pres.relations):
        rep.checks.append(_compare(f"ideal_delta[{i}]", d(rel), TensorPoly(2), red))
        rep.checks.append(_compare(f"ideal_antipode[{i}]", s(rel), TensorPoly(1), red))
        rep.checks.append(_compare(f"ideal_counit[{i}]", e(rel), TensorPoly(0), no_reduction))
    return rep


@dataclass
class Coaction:
    """Right coaction M -> M (x) H given on the generators of M = Z[z, t] or Z[z].

    ``action(R, coords, (w, v))`` is the set-level action the coaction is
    meant to induce; ``group(R)`` lists the (w, v) it is evaluated on.
    """

    name: str
    hopf: HopfPresentation
    rho: AlgebraMap
    generators: tuple
    action: Callable | None = None
    group: Callable | None = None


def verify_coaction(co: Coaction, rings: Iterable[Ring] = ()) -> Report:
    """Coassociativity and counit of the coaction, plus the induced action on points."""
    rep = Report(co.name)
    h, red = co.hopf, co.hopf.reducer
    for g in co.generators:
        p = TensorPoly.var(g)
        rp = co.rho(p)
        rep.checks.append(_compare(f"coassociativity[{g}]",
                                   apply_factorwise(rp, [IDENTITY, h.delta]),
                                   apply_factorwise(rp, [co.rho, IDENTITY]), red))
        rep.checks.append(_compare(f"counit[{g}]",
                                   apply_factorwise(rp, [IDENTITY, h.counit]), p, red))
    if co.action is not None:
        rings = list(rings)
        bad = _induced_action_counterexample(co, rings)
        rep.checks.append(Check("induces_action", bad is None, bad))
    return rep


def _induced_action_counterexample(co: Coaction, rings: list[Ring]) -> str | None:
    for R in rings:
        n = len(co.generators)
        els = R.elements()
        points = [(u,) for u in els] if n == 1 else [(u, s) for u in els for s in els]
        for w, v in co.group(R):
            for pt in points:
                module = dict(zip(co.generators, pt))
                got = tuple(evaluate(co.rho.image(g), R, [module, {"x": w, "y": v}])
                            for g in co.generators)
                want = co.action(R, pt, (w, v))
                if got != want:
                    return (f"{R}: point {pt} at (w,v)=({R.format(w)},{R.format(v)}) "
                            f"gives {got}, expected {want}")
    return None


# ---------------------------------------------------------------------------
# evaluation at points


def evaluate(p: TensorPoly, R: Ring, factors: list[dict], params: dict | None = None):
    """Value in R with ``factors[i]`` assigning the variables of factor i."""
    params = params or {}
    total = R.zero
    for (pe, fs), c in p.terms.items():
        val = R.from_int(c)
        for name, e in zip(PARAMS, pe):
            if e:
                val = R.mul(val, R.pow(params[name], e))
        for assign, f in zip(factors, fs):
            for name, e in zip(VARS, f):
                if not e:
                    continue
                base = assign[name]
                if e < 0:
                    base, e = R.inverse(base), -e
                val = R.mul(val, R.pow(base, e))
        total = R.add(total, val)
    return total


# ---------------------------------------------------------------------------
# the coactions


def _star_group(R: Ring):
    return [(w, v) for w in R.units() for v in R.elements()]


def _t_group(R: Ring):
    return [(w, v) for w in R.units() for v in R.elements() if R.scale(2, v) == R.zero]


def _h_group(R: Ring):
    out = []
    for v in R.elements():
        w = R.sub(R.one, R.scale(2, v))
        if R.is_unit(w):
            out.append((w, v))
    return out


def _star_act(R, pt, g):
    from .orbits import GroupElem, _star
    return _star(R, pt, GroupElem(*g))


def _diamond_act(R, pt, g):
    return (R.mul(R.mul(g[0], g[0]), pt[0]),)


def _pentagram_act(R, pt, g):
    from .orbits import GroupElem, _pentagram
    return (_pentagram(R, pt[0], GroupElem(*g)),)


def _ast_act(R, pt, g):
    from .orbits import GroupElem, _ast
    return (_ast(R, pt[0], GroupElem(*g)),)


def _rho(images: dict) -> AlgebraMap:
    return AlgebraMap("rho", 2, images)


def _mh(m: TensorPoly, h: TensorPoly) -> TensorPoly:
    """m (x) h for Laurent polynomials m on the module side and h on the Hopf side."""
    return m.tensor(h)


def star_coaction(t_image: TensorPoly | None = None) -> Coaction:
    xi = X ** -1
    rho_z = _mh(ONE, 2 * xi * Y) + _mh(Z, xi)
    rho_t = t_image if t_image is not None else \
        _mh(ONE, xi ** 2 * Y ** 2) + _mh(Z, xi ** 2 * Y) + _mh(T, xi ** 2)
    return Coaction("star coaction on Z[z,t]", semidirect_presentation(),
                    _rho({"z": rho_z, "t": rho_t}), ("z", "t"), _star_act, _star_group)


def diamond_coaction() -> Coaction:
    return Coaction("diamond coaction on Z[z]", gm_presentation(),
                    _rho({"z": _mh(Z, X ** 2)}), ("z",), _diamond_act,
                    lambda R: [(w, R.zero) for w in R.units()])


def pentagram_coaction(literal: bool = False) -> Coaction:
    """Coaction of T on Z[z] for a -> w^-2(v^2 + a).

    ``literal=True`` uses the coefficient 2 on the x^-2 y^2 term, which is
    zero modulo 2y and so induces a -> w^-2 a instead.
    """
    xi2 = X ** -2
    c = 2 if literal else 1
    name = "pentagram coaction" + (" (coefficient 2)" if literal else "")
    return Coaction(name, t_presentation(),
                    _rho({"z": _mh(ONE, c * xi2 * Y ** 2) + _mh(Z, xi2)}), ("z",),
                    _pentagram_act, _t_group)


def ast_coaction(literal: bool = False) -> Coaction:
    """Coaction of H on Z[z] for a -> (1-2v)^-2(v^2 - v + a).

    ``literal=True`` uses 1 (x) 2x^-1 y + z (x) x^-1, the first component of
    the star coaction, which is a coaction but induces a different action.
    """
    xi = X ** -1
    if literal:
        rz = _mh(ONE, 2 * xi * Y) + _mh(Z, xi)
    else:
        rz = _mh(ONE, xi ** 2 * (Y ** 2 - Y)) + _mh(Z, xi ** 2)
    name = "ast coaction" + (" (first star component)" if literal else "")
    return Coaction(name, h_presentation(), _rho({"z": rz}), ("z",), _ast_act, _h_group)


def mutated_coaction() -> Coaction:
    """Star coaction with the sign of the z (x) x^-2 y term flipped."""
    xi = X ** -1
    bad_t = _mh(ONE, xi ** 2 * Y ** 2) - _mh(Z, xi ** 2 * Y) + _mh(T, xi ** 2)
    co = star_coaction(bad_t)
    co.name = "mutant: star coaction with -z (x) x^-2 y"
    return co


def default_check_rings() -> list[Ring]:
    from .rings import ring
    return [ring(s) for s in ("zmod(2)", "zmod(3)", "zmod(4)", "zmod(5)", "gf(2,2,[1,1,1])")]


def symbolic_suite(rings: list[Ring] | None = None) -> list[tuple[Report, bool]]:
    """Every symbolic check with whether it is expected to pass."""
    rings = default_check_rings() if rings is None else rings
    out = [
        (verify_hopf_axioms(semidirect_presentation()), True),
        (verify_hopf_axioms(gm_presentation()), True),
        (verify_hopf_axioms(t_presentation()), True),
        (verify_hopf_axioms(h_presentation()), True),
        (verify_coaction(star_coaction(), rings), True),
        (verify_coaction(diamond_coaction(), rings), True),
        (verify_coaction(pentagram_coaction(), rings), True),
        (verify_coaction(ast_coaction(), rings), True),
        (verify_hopf_axioms(mutated_presentation()), False),
        (verify_coaction(mutated_coaction(), rings), False),
    ]
    lit_t = verify_coaction(pentagram_coaction(literal=True), rings)
    lit_t.notes.append("coefficient 2 vanishes modulo 2y; axioms hold, induced action is w^-2 a")
    lit_h = verify_coaction(ast_coaction(literal=True), rings)
    lit_h.notes.append("first star component restricted to H; axioms hold, action differs")
    out += [(lit_t, False), (lit_h, False)]
    return out


# ---------------------------------------------------------------------------
# functor of points of the Aut Hopf algebras


@dataclass
class AutPresentation:
    """Quotient of the semidirect Hopf algebra whose points should be Aut(a, b)."""

    name: str
    relations: list[TensorPoly]
    applies: Callable[[AlgebraPoint], bool]
    params: Callable[[AlgebraPoint], dict]


def general_aut_presentation() -> AutPresentation:
    return AutPresentation("general", [2 * Y - A * (X - 1), B * (1 - X ** 2) + Y ** 2 + A * Y],
                           lambda pt: True, lambda pt: {"a": pt.a, "b": pt.b})


def radical_aut_presentation() -> AutPresentation:
    """Points (0, a): relations 2y and a(1 - x^2) + y^2."""
    return AutPresentation("radical", [2 * Y, A * (1 - X ** 2) + Y ** 2],
                           lambda pt: pt.a == pt.ring.zero, lambda pt: {"a": pt.b})


def as_aut_presentation(literal: bool = False) -> AutPresentation:
    """Points (-1, a): relations 2y + x - 1 and (1 - 4a)(y^2 - y).

    ``literal=True`` uses 4a + 1 for the second factor instead.
    """
    factor = (4 * A + 1) if literal else (1 - 4 * A)
    name = "artin-schreier" + (" (4a+1)" if literal else "")
    return AutPresentation(name, [2 * Y + X - 1, factor * (Y ** 2 - Y)],
                           lambda pt: pt.a == pt.ring.neg(pt.ring.one),
                           lambda pt: {"a": pt.b})


def presentation_points(pres: AutPresentation, pt: AlgebraPoint) -> list[IsoSolution]:
    R = pt.ring
    params = pres.params(pt)
    out = []
    for v in R.elements():
        for w in R.units():
            if all(evaluate(rel, R, [{"x": w, "y": v}], params) == R.zero
                   for rel in pres.relations):
                out.append(IsoSolution(v, w))
    return out


def points_of_aut_hopf(pt: AlgebraPoint, pres: AutPresentation | None = None,
                       hopf: HopfPresentation | None = None) -> Report:
    """Compare the points of an Aut presentation with aut_group(pt).

    The group law, inverse and unit on the points are read off the
    symbolic comultiplication, antipode and counit by evaluation.
    """
    pres = pres or general_aut_presentation()
    hopf = hopf or semidirect_presentation()
    R = pt.ring
    rep = Report(f"Aut({R.format(pt.a)},{R.format(pt.b)}) over {R} [{pres.name}]")
    pts = presentation_points(pres, pt)
    G: AutGroup = aut_group(pt)
    ptset, gset = set(pts), set(G.elements)
    diff = sorted(ptset.symmetric_difference(gset), key=lambda s: (R.index(s.v), R.index(s.w)))
    rep.checks.append(Check("points", not diff,
                            None if not diff else
                            f"(v,w)=({R.format(diff[0].v)},{R.format(diff[0].w)}) "
                            f"{'only in presentation' if diff[0] in ptset else 'missing'}; "
                            f"{len(pts)} points vs |Aut|={G.order}"))
    dx, dy = hopf.delta.image("x"), hopf.delta.image("y")
    law_bad = None
    for g in pts:
        for h in pts:
            assign = [{"x": g.w, "y": g.v}, {"x": h.w, "y": h.v}]
            prod = IsoSolution(evaluate(dy, R, assign), evaluate(dx, R, assign))
            if prod != AutGroup.compose(R, g, h) or prod not in ptset:
                law_bad = f"({R.format(g.v)},{R.format(g.w)})*({R.format(h.v)},{R.format(h.w)})"
                break
        if law_bad:
            break
    rep.checks.append(Check("group_law", law_bad is None, law_bad))
    inv_bad = None
    sx, sy = hopf.antipode.image("x"), hopf.antipode.image("y")
    for g in pts:
        assign = [{"x": g.w, "y": g.v}]
        inv = IsoSolution(evaluate(sy, R, assign), evaluate(sx, R, assign))
        if inv != AutGroup.inverse(R, g) or inv not in ptset:
            inv_bad = f"({R.format(g.v)},{R.format(g.w)})"
            break
    rep.checks.append(Check("antipode", inv_bad is None, inv_bad))
    ex, ey = hopf.counit.image("x"), hopf.counit.image("y")
    unit = IsoSolution(evaluate(ey, R, []), evaluate(ex, R, []))
    ok = unit == G.identity() and unit in ptset
    rep.checks.append(Check("counit", ok, None if ok else
                            f"({R.format(unit.v)},{R.format(unit.w)})"))
    return rep


def aut_presentations_for(pt: AlgebraPoint) -> list[AutPresentation]:
    return [p for p in (general_aut_presentation(), radical_aut_presentation(),
                        as_aut_presentation()) if p.applies(pt)]


def points_suite(R: Ring) -> list[Report]:
    """points_of_aut_hopf for every (a, b) over R and every presentation that applies."""
    out = []
    for a in R.elements():
        for b in R.elements():
            pt = AlgebraPoint(R, a, b)
            for pres in aut_presentations_for(pt):
                out.append(points_of_aut_hopf(pt, pres))
    return out


def literal_as_mismatches(R: Ring) -> list[tuple]:
    """Points (-1, a) where the 4a + 1 form and Aut disagree: (a, presented, |Aut|)."""
    out = []
    minus_one = R.neg(R.one)
    lit = as_aut_presentation(literal=True)
    for a in R.elements():
        pt = AlgebraPoint(R, minus_one, a)
        n_lit = len(presentation_points(lit, pt))
        n_aut = aut_group(pt).order
        if n_lit != n_aut:
            out.append((a, n_lit, n_aut))
    return out
