"""Base rings: a tower of finite commutative rings plus the quadratic orders Z[sqrt d].

Finite rings are built from ``zmod(n)``, ``gf(p,k,[...])``, ``prod(...)`` and
``quot(base,[...])``. Elements are plain hashable encodings:

* ``zmod``: the residue ``0 <= r < n``
* ``gf`` / ``quot``: a tuple of coefficients (low degree first) in the base
* ``prod``: a tuple with one entry per factor
* ``zsqrt``: a pair ``(m, n)`` standing for ``m + n*sqrt(d)``

Two elements are equal iff their encodings are equal, and the canonical
element order of a finite ring is the lexicographic order on encodings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Any, Callable, Iterator, Union

MAX_ZSQRT_D = 10_000
TABLE_LIMIT = 1024


class RingSpecError(ValueError):
    """Raised for malformed or mathematically invalid ring descriptions."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotAUnit(ArithmeticError):
    pass


class InfiniteRingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Specs


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class GF:
    p: int
    k: int
    modulus: tuple[int, ...]


@dataclass(frozen=True)
class Prod:
    factors: tuple["RingSpec", ...]


@dataclass(frozen=True)
class Quot:
    base: "RingSpec"
    modulus: tuple[int, ...]


@dataclass(frozen=True)
class ZSqrt:
    d: int


RingSpec = Union[Zmod, GF, Prod, Quot, ZSqrt]

GRAMMAR = """\
spec := "zmod(" INT ")" | "gf(" INT "," INT "," poly ")" | "prod(" spec { "," spec } ")"
      | "quot(" spec "," poly ")" | "zsqrt(" INT ")"
poly := "[" INT { "," INT } "]"      (coefficients low-to-high degree)"""


def format_ring_spec(spec: RingSpec) -> str:
    """Canonical printer; ``parse_ring_spec(format_ring_spec(s)) == s``."""
    if isinstance(spec, Zmod):
        return f"zmod({spec.n})"
    if isinstance(spec, GF):
        return f"gf({spec.p},{spec.k},{_fmt_poly(spec.modulus)})"
    if isinstance(spec, Prod):
        return "prod(" + ",".join(format_ring_spec(f) for f in spec.factors) + ")"
    if isinstance(spec, Quot):
        return f"quot({format_ring_spec(spec.base)},{_fmt_poly(spec.modulus)})"
    if isinstance(spec, ZSqrt):
        return f"zsqrt({spec.d})"
    raise TypeError(f"not a ring spec: {spec!r}")


def _fmt_poly(coeffs: tuple[int, ...]) -> str:
    return "[" + ",".join(str(c) for c in coeffs) + "]"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, token: str) -> None:
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos:self.pos + len(token)] or "end of input"
            raise RingSpecError(f"expected {token!r}, found {found!r}", self.pos)
        self.pos += len(token)

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if digits in ("", "+", "-"):
            self.pos = start
            raise RingSpecError("expected an integer", start)
        return int(digits)

    def poly(self) -> tuple[int, ...]:
        self.expect("[")
        coeffs = [self.integer()]
        while self.peek(","):
            self.expect(",")
            coeffs.append(self.integer())
        self.expect("]")
        return tuple(coeffs)

    def spec(self) -> RingSpec:
        self.skip()
        start = self.pos
        for name in ("zmod", "gf", "prod", "quot", "zsqrt"):
            if self.text.startswith(name + "(", self.pos) or (
                self.text.startswith(name, self.pos)
                and self.text[self.pos + len(name):].lstrip().startswith("(")
            ):
                self.pos += len(name)
                self.expect("(")
                break
        else:
            raise RingSpecError(
                "expected one of zmod, gf, prod, quot, zsqrt", start)
        if name == "zmod":
            out: RingSpec = Zmod(self.integer())
        elif name == "zsqrt":
            out = ZSqrt(self.integer())
        elif name == "gf":
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(",")
            out = GF(p, k, self.poly())
        elif name == "prod":
            factors = [self.spec()]
            while self.peek(","):
                self.expect(",")
                factors.append(self.spec())
            out = Prod(tuple(factors))
        else:
            base = self.spec()
            self.expect(",")
            out = Quot(base, self.poly())
        self.expect(")")
        return out


def parse_ring_spec(text: str) -> RingSpec:
    """Parse and validate a ring description such as ``"gf(3,2,[1,0,1])"``."""
    parser = _Parser(text)
    spec = parser.spec()
    parser.skip()
    if parser.pos != len(text):
        raise RingSpecError("trailing input", parser.pos)
    validate_ring_spec(spec)
    return spec


def split_ring_list(text: str) -> list[str]:
    """Split ``"zmod(2),gf(3,2,[1,0,1])"`` at top-level commas only."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i].strip())
            start = i + 1
    parts.append(text[start:].strip())
    return [p for p in parts if p]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % q for q in range(2, math.isqrt(n) + 1))


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _is_squarefree(d: int) -> bool:
    d = abs(d)
    return all(d % (q * q) for q in range(2, math.isqrt(d) + 1))


def _poly_rem_mod_p(num: list[int], den: list[int], p: int) -> list[int]:
    # den monic
    num = [c % p for c in num]
    while len(num) >= len(den):
        lead = num[-1]
        if lead:
            shift = len(num) - len(den)
            for i, c in enumerate(den):
                num[shift + i] = (num[shift + i] - lead * c) % p
        num.pop()
    return num


def is_irreducible_mod_p(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by every monic polynomial of degree <= deg/2."""
    poly = [c % p for c in coeffs]
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not any(_poly_rem_mod_p(poly, list(low) + [1], p)):
                return False
    return True


def validate_ring_spec(spec: RingSpec) -> None:
    if isinstance(spec, Zmod):
        if spec.n < 2:
            raise RingSpecError(f"zmod(n) requires n >= 2, got {spec.n}")
    elif isinstance(spec, GF):
        if not _is_prime(spec.p):
            raise RingSpecError(f"gf: {spec.p} is not prime")
        if spec.k < 1:
            raise RingSpecError("gf: degree k must be positive")
        if len(spec.modulus) != spec.k + 1:
            raise RingSpecError(
                f"gf: modulus must have degree {spec.k}, got {len(spec.modulus) - 1}")
        if spec.modulus[-1] % spec.p != 1:
            raise RingSpecError("gf: modulus must be monic")
        if not is_irreducible_mod_p(spec.modulus, spec.p):
            raise RingSpecError(
                f"gf: modulus {_fmt_poly(spec.modulus)} is reducible mod {spec.p}")
    elif isinstance(spec, Prod):
        if not spec.factors:
            raise RingSpecError("prod needs at least one factor")
        for f in spec.factors:
            validate_ring_spec(f)
            if isinstance(f, ZSqrt):
                raise RingSpecError("prod factors must be finite rings")
    elif isinstance(spec, Quot):
        validate_ring_spec(spec.base)
        if isinstance(spec.base, ZSqrt):
            raise RingSpecError("quot base must be a finite ring")
        if len(spec.modulus) < 2:
            raise RingSpecError("quot: modulus must have degree >= 1")
        base = build_ring(spec.base)
        if base.from_int(spec.modulus[-1]) != base.one:
            raise RingSpecError("quot: modulus must be monic")
    elif isinstance(spec, ZSqrt):
        d = spec.d
        if d in (0, 1) or not _is_squarefree(d):
            raise RingSpecError(f"zsqrt: d={d} must be squarefree and not 0 or 1")
        if abs(d) > MAX_ZSQRT_D:
            raise RingSpecError(f"zsqrt: |d| must be <= {MAX_ZSQRT_D}")
    else:
        raise TypeError(f"not a ring spec: {spec!r}")


# ---------------------------------------------------------------------------
# Rings


class AllPrimes:
    """Marker for 'every prime': no prime is invertible in Z[sqrt d]."""

    def __contains__(self, p: object) -> bool:
        return isinstance(p, int) and _is_prime(p)

    def __repr__(self) -> str:
        return "AllPrimes()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AllPrimes)

    def __hash__(self) -> int:
        return hash(AllPrimes)


class Ring:
    """Common interface. Subclasses provide ``_add``, ``_mul``, ``_neg``."""

    spec: RingSpec
    zero: Any
    one: Any
    is_finite = True

    def __repr__(self) -> str:
        return f"Ring({format_ring_spec(self.spec)!r})"

    def __str__(self) -> str:
        return format_ring_spec(self.spec)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    # arithmetic --------------------------------------------------------
    def add(self, x, y):
        return self._add(x, y)

    def mul(self, x, y):
        return self._mul(x, y)

    def neg(self, x):
        return self._neg(x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def from_int(self, n: int):
        # double-and-add so large n stays cheap
        result, base = self.zero, self.one
        if n < 0:
            base, n = self.neg(base), -n
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def pow(self, x, e: int):
        if e < 0:
            x, e = self.inverse(x), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def scale(self, n: int, x):
        return self.mul(self.from_int(n), x)

    # enumeration -------------------------------------------------------
    @cached_property
    def _elements(self) -> tuple:
        return tuple(sorted(self._enumerate()))

    def elements(self) -> tuple:
        """All elements in canonical (lexicographic encoding) order."""
        if not self.is_finite:
            raise InfiniteRingError(f"{self} is infinite; cannot enumerate")
        return self._elements

    @cached_property
    def _index(self) -> dict:
        return {x: i for i, x in enumerate(self._elements)}

    def index(self, x) -> int:
        return self._index[x]

    @property
    def cardinality(self) -> int:
        if not self.is_finite:
            raise InfiniteRingError(f"{self} is infinite")
        return len(self._elements)

    def contains(self, x) -> bool:
        return x in self._index

    # units -------------------------------------------------------------
    @cached_property
    def _inverses(self) -> dict:
        els = self.elements()
        inv = {}
        for x in els:
            for y in els:
                if self.mul(x, y) == self.one:
                    inv[x] = y
                    break
        return inv

    def is_unit(self, x) -> bool:
        return x in self._inverses

    def inverse(self, x):
        try:
            return self._inverses[x]
        except KeyError:
            raise NotAUnit(f"{self.format(x)} is not a unit in {self}") from None

    def units(self) -> tuple:
        return tuple(x for x in self.elements() if self.is_unit(x))

    @property
    def is_field(self) -> bool:
        return self.is_finite and len(self._inverses) == self.cardinality - 1

    @cached_property
    def characteristic(self) -> int:
        n, x = 1, self.one
        while x != self.zero:
            x = self.add(x, self.one)
            n += 1
        return n

    def residue_characteristics(self) -> frozenset[int] | AllPrimes:
        """Primes p for which p*1 is not a unit."""
        return frozenset(p for p in _prime_factors(self.characteristic)
                         if not self.is_unit(self.from_int(p)))

    def divides(self, p, q) -> bool:
        return self.quotient(p, q) is not None

    def quotient(self, p, q):
        """Some r with p*r == q (first in canonical order), or None."""
        for r in self.elements():
            if self.mul(p, r) == q:
                return r
        return None

    def square_roots(self, x) -> list:
        return [r for r in self.elements() if self.mul(r, r) == x]

    # serialization -----------------------------------------------------
    def to_json(self, x) -> Any:
        return _tuples_to_lists(x)

    def from_json(self, obj: Any):
        if isinstance(obj, int):
            return self.from_int(obj)
        x = _lists_to_tuples(obj)
        if not self.contains(x):
            raise ValueError(f"{json.dumps(obj)} is not an element of {self}")
        return x

    def format(self, x) -> str:
        return json.dumps(self.to_json(x), separators=(",", ":"))


def _tuples_to_lists(x):
    if isinstance(x, tuple):
        return [_tuples_to_lists(y) for y in x]
    return x


def _lists_to_tuples(x):
    if isinstance(x, list):
        return tuple(_lists_to_tuples(y) for y in x)
    return x


class ZmodRing(Ring):
    def __init__(self, spec: Zmod):
        self.spec = spec
        self.n = spec.n
        self.zero, self.one = 0, 1

    def _enumerate(self):
        return range(self.n)

    def _add(self, x, y):
        return (x + y) % self.n

    def _mul(self, x, y):
        return (x * y) % self.n

    def _neg(self, x):
        return -x % self.n

    def from_int(self, n: int):
        return n % self.n

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.n

    def is_unit(self, x) -> bool:
        return math.gcd(x, self.n) == 1

    def inverse(self, x):
        if not self.is_unit(x):
            raise NotAUnit(f"{x} is not a unit in {self}")
        return pow(x, -1, self.n)

    @property
    def is_field(self) -> bool:
        return _is_prime(self.n)

    @cached_property
    def characteristic(self) -> int:
        return self.n


class _TabulatedRing(Ring):
    """Finite ring whose +, * are cached in lookup tables once enumerated."""

    @cached_property
    def _tables(self):
        els = self.elements()
        add = {(x, y): self._raw_add(x, y) for x in els for y in els}
        mul = {(x, y): self._raw_mul(x, y) for x in els for y in els}
        neg = {x: self._raw_neg(x) for x in els}
        return add, mul, neg

    def _add(self, x, y):
        if len(self._elements) <= TABLE_LIMIT:
            return self._tables[0][x, y]
        return self._raw_add(x, y)

    def _mul(self, x, y):
        if len(self._elements) <= TABLE_LIMIT:
            return self._tables[1][x, y]
        return self._raw_mul(x, y)

    def _neg(self, x):
        if len(self._elements) <= TABLE_LIMIT:
            return self._tables[2][x]
        return self._raw_neg(x)


class QuotientRing(_TabulatedRing):
    """base[t] / (monic modulus); elements are coefficient tuples of length deg."""

    def __init__(self, spec: Quot | GF, base: Ring, modulus: tuple):
        self.spec = spec
        self.base = base
        self.modulus = modulus  # base elements, monic
        self.degree = len(modulus) - 1
        self.zero = (base.zero,) * self.degree
        self.one = (base.one,) + (base.zero,) * (self.degree - 1)

    def _enumerate(self):
        return product(self.base.elements(), repeat=self.degree)

    def _raw_add(self, x, y):
        return tuple(self.base.add(a, b) for a, b in zip(x, y))

    def _raw_neg(self, x):
        return tuple(self.base.neg(a) for a in x)

    def _raw_mul(self, x, y):
        B = self.base
        prod_ = [B.zero] * (2 * self.degree - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                prod_[i + j] = B.add(prod_[i + j], B.mul(a, b))
        return self.reduce(prod_)

    def reduce(self, coeffs: list) -> tuple:
        B, m, k = self.base, self.modulus, self.degree
        coeffs = list(coeffs)
        while len(coeffs) > k:
            lead = coeffs.pop()
            shift = len(coeffs) - k
            for i in range(k):
                coeffs[shift + i] = B.sub(coeffs[shift + i], B.mul(lead, m[i]))
        coeffs += [B.zero] * (k - len(coeffs))
        return tuple(coeffs)

    def from_int(self, n: int):
        return (self.base.from_int(n),) + (self.base.zero,) * (self.degree - 1)

    def generator(self):
        """The class of t."""
        return self.reduce([self.base.zero, self.base.one])

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == self.degree
                and all(self.base.contains(a) for a in x))


class GaloisField(QuotientRing):
    @property
    def is_field(self) -> bool:
        return True


class ProductRing(_TabulatedRing):
    def __init__(self, spec: Prod, factors: list[Ring]):
        self.spec = spec
        self.factors = tuple(factors)
        self.zero = tuple(f.zero for f in factors)
        self.one = tuple(f.one for f in factors)

    def _enumerate(self):
        return product(*(f.elements() for f in self.factors))

    def _raw_add(self, x, y):
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def _raw_mul(self, x, y):
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def _raw_neg(self, x):
        return tuple(f.neg(a) for f, a in zip(self.factors, x))

    def from_int(self, n: int):
        return tuple(f.from_int(n) for f in self.factors)

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == len(self.factors)
                and all(f.contains(a) for f, a in zip(self.factors, x)))

    def is_unit(self, x) -> bool:
        return all(f.is_unit(a) for f, a in zip(self.factors, x))

    def inverse(self, x):
        if not self.is_unit(x):
            raise NotAUnit(f"{self.format(x)} is not a unit in {self}")
        return tuple(f.inverse(a) for f, a in zip(self.factors, x))


class QuadraticIntegerRing(Ring):
    """Z[sqrt d]; elements are pairs (m, n) meaning m + n*sqrt(d)."""

    is_finite = False

    def __init__(self, spec: ZSqrt):
        self.spec = spec
        self.d = spec.d
        self.zero, self.one = (0, 0), (1, 0)

    def _add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def _neg(self, x):
        return (-x[0], -x[1])

    def _mul(self, x, y):
        return (x[0] * y[0] + self.d * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def from_int(self, n: int):
        return (n, 0)

    def sqrt_d(self):
        return (0, 1)

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == 2
                and all(isinstance(c, int) for c in x))

    def norm(self, x) -> int:
        return x[0] * x[0] - self.d * x[1] * x[1]

    def conjugate(self, x):
        return (x[0], -x[1])

    def is_unit(self, x) -> bool:
        return self.norm(x) in (1, -1)

    def inverse(self, x):
        nm = self.norm(x)
        if nm not in (1, -1):
            raise NotAUnit(f"{self.format(x)} is not a unit in {self} (norm {nm})")
        c = self.conjugate(x)
        return (c[0] * nm, c[1] * nm)

    def quotient(self, p, q):
        """The exact quotient q/p if it lies in Z[sqrt d], else None."""
        if p == self.zero:
            return self.zero if q == self.zero else None
        nm = self.norm(p)
        m, n = self.mul(q, self.conjugate(p))
        if m % nm or n % nm:
            return None
        return (m // nm, n // nm)

    def square_roots(self, x) -> list:
        """All r with r*r == x. Exact, by a bounded search when d > 0."""
        m, n = x
        if self.d < 0:
            return self._square_roots_imag(x)
        # r = u + v*sqrt(d): m = u^2 + d v^2 >= 0, n = 2uv
        if m < 0:
            return []
        roots = []
        for v in range(math.isqrt(m // self.d) + 1):
            u2 = m - self.d * v * v
            u = math.isqrt(u2)
            if u * u != u2:
                continue
            for r in {(u, v), (-u, v), (u, -v), (-u, -v)}:
                if self.mul(r, r) == x:
                    roots.append(r)
        return sorted(set(roots))

    def _square_roots_imag(self, x) -> list:
        # norm is multiplicative and positive: N(r)^2 = N(x)
        nx = self.norm(x)
        nr = math.isqrt(nx)
        if nr * nr != nx:
            return []
        e = -self.d
        roots = []
        for v in range(math.isqrt(nr // e) + 1 if e else 1):
            u2 = nr - e * v * v
            u = math.isqrt(u2)
            if u * u != u2:
                continue
            for r in {(u, v), (-u, v), (u, -v), (-u, -v)}:
                if self.mul(r, r) == x:
                    roots.append(r)
        return sorted(set(roots))

    def torsion_units(self) -> list:
        if self.d == -1:
            return [(-1, 0), (0, -1), (0, 1), (1, 0)]
        return [(-1, 0), (1, 0)]

    def residue_characteristics(self) -> AllPrimes:
        return AllPrimes()

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def is_field(self) -> bool:
        return False

    def format(self, x) -> str:
        m, n = x
        if n == 0:
            return str(m)
        root = f"√{self.d}" if self.d > 0 else f"√({self.d})"
        coef = "" if n == 1 else "-" if n == -1 else str(n)
        if m == 0:
            return f"{coef}{root}"
        return f"{m}{'+' if n > 0 else '-'}{'' if abs(n) == 1 else abs(n)}{root}"

    def from_json(self, obj: Any):
        if isinstance(obj, int):
            return (obj, 0)
        x = _lists_to_tuples(obj)
        if not self.contains(x):
            raise ValueError(f"{json.dumps(obj)} is not an element of {self}")
        return x


@lru_cache(maxsize=None)
def build_ring(spec: RingSpec) -> Ring:
    """Realize a (validated) spec; cached so equal specs share one object."""
    if isinstance(spec, Zmod):
        validate_ring_spec(spec)
        return ZmodRing(spec)
    if isinstance(spec, GF):
        validate_ring_spec(spec)
        base = build_ring(Zmod(spec.p))
        return GaloisField(spec, base, tuple(c % spec.p for c in spec.modulus))
    if isinstance(spec, Prod):
        validate_ring_spec(spec)
        return ProductRing(spec, [build_ring(f) for f in spec.factors])
    if isinstance(spec, Quot):
        validate_ring_spec(spec)
        base = build_ring(spec.base)
        return QuotientRing(spec, base, tuple(base.from_int(c) for c in spec.modulus))
    if isinstance(spec, ZSqrt):
        validate_ring_spec(spec)
        return QuadraticIntegerRing(spec)
    raise TypeError(f"not a ring spec: {spec!r}")


def ring(text: str) -> Ring:
    """Shorthand: ``ring("zmod(4)")``."""
    return build_ring(parse_ring_spec(text))


def enumerate_elements(R: Ring) -> tuple:
    return R.elements()


DEFAULT_BATTERY = (
    "zmod(2)", "zmod(3)", "zmod(4)", "zmod(5)", "zmod(6)", "zmod(7)",
    "zmod(8)", "zmod(9)", "gf(2,2,[1,1,1])", "gf(3,2,[1,0,1])",
    "prod(zmod(2),zmod(2))", "prod(zmod(2),zmod(3))", "quot(zmod(2),[0,0,1])",
)


def default_battery(max_order: int | None = None) -> list[Ring]:
    rings = [ring(s) for s in DEFAULT_BATTERY]
    if max_order is not None:
        rings = [R for R in rings if R.cardinality <= max_order]
    return rings


# ---------------------------------------------------------------------------
# Homomorphisms


class RingHom:
    """A unital ring map ``source -> target``.

    Build with one of the classmethods; ``images`` records the generator
    assignment the map was built from.
    """

    def __init__(self, source: Ring, target: Ring, fn: Callable, description: str,
                 images: tuple = ()):
        self.source = source
        self.target = target
        self._fn = fn
        self.description = description
        self.images = images

    def __call__(self, x):
        return self._fn(x)

    def __repr__(self) -> str:
        return f"RingHom({self.source} -> {self.target}: {self.description})"

    @classmethod
    def identity(cls, R: Ring) -> "RingHom":
        return cls(R, R, lambda x: x, "identity")

    @classmethod
    def canonical(cls, source: Ring, target: Ring) -> "RingHom":
        """The unique map out of Z/n, k -> k*1; needs char(target) | n."""
        if not isinstance(source, ZmodRing):
            raise ValueError("canonical maps start at a zmod ring")
        if target.from_int(source.n) != target.zero:
            raise ValueError(f"no ring map {source} -> {target}: "
                             f"{source.n}*1 is nonzero in the target")
        return cls(source, target, target.from_int, "canonical")

    @classmethod
    def projection(cls, source: ProductRing, i: int) -> "RingHom":
        return cls(source, source.factors[i], lambda x: x[i], f"projection {i}")

    @classmethod
    def pairing(cls, source: Ring, target: ProductRing, homs: list["RingHom"]) -> "RingHom":
        """``x -> (h_0(x), h_1(x), ...)`` into a product."""
        homs = list(homs)
        return cls(source, target, lambda x: tuple(h(x) for h in homs), "pairing",
                   tuple(homs))

    @classmethod
    def from_generator(cls, source: QuotientRing, target: Ring, base_hom: "RingHom",
                       t_image) -> "RingHom":
        """Map ``base[t]/(m)`` by ``base_hom`` on coefficients and ``t -> t_image``.

        Raises ValueError when ``m(t_image) != 0``, i.e. the assignment does
        not descend to the quotient.
        """
        T = target

        def evaluate(coeffs):
            acc = T.zero
            for c in reversed(coeffs):
                acc = T.add(T.mul(acc, t_image), base_hom(c))
            return acc

        if evaluate(source.modulus) != T.zero:
            raise ValueError("generator image is not a root of the modulus")
        return cls(source, target, evaluate, f"t -> {T.format(t_image)}",
                   (base_hom, t_image))

    def compose(self, first: "RingHom") -> "RingHom":
        """``self o first``."""
        return RingHom(first.source, self.target, lambda x: self(first(x)),
                       f"{self.description} o {first.description}")

    def is_homomorphism(self) -> bool:
        """Exhaustive check of 0, 1, +, * preservation (finite sources)."""
        S, T = self.source, self.target
        if self(S.one) != T.one or self(S.zero) != T.zero:
            return False
        els = S.elements()
        img = {x: self(x) for x in els}
        if not all(T.contains(y) for y in img.values()):
            return False
        return all(img[S.add(x, y)] == T.add(img[x], img[y])
                   and img[S.mul(x, y)] == T.mul(img[x], img[y])
                   for x in els for y in els)


def iter_pairs(R: Ring) -> Iterator[tuple]:
    els = R.elements()
    return product(els, els)
