"""Exact arithmetic in GF(p) and in multivariate polynomial rings over GF(p).

Polynomials are sparse, canonical and immutable: a term list strictly sorted
in descending ring order, no zero coefficients, coefficients reduced to the
least non-negative residue.  Equality is structural.  Rings carry a weighted
grading (default: all weights 1) and a monomial order; grevlex ties inside
equal weighted degree are broken by reverse lexicographic comparison on the
declared variable order, so all outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Union

Mono = tuple  # exponent vector, one entry per ring variable

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for a prime p < 2**31."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not 2 <= self.p < 2**31:
            raise ValueError(f"characteristic must be an integer in [2, 2^31): {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"characteristic must be prime: {self.p}")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1 % self.p, self)

    def elements(self):
        """All field elements, ascending by residue (use for small p only)."""
        return [FieldElement(v, self) for v in range(self.p)]

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("inverse of 0 in GF(p)")
        return pow(value, self.p - 2, self.p)


@dataclass(frozen=True)
class FieldElement:
    """A residue in GF(p); always fully reduced."""

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            object.__setattr__(self, "value", self.value % self.field.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement((v - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value % self.field.p, self.field)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * self.field.inv(v) % self.field.p, self.field)

    def __pow__(self, n: int):
        if n < 0:
            return FieldElement(pow(self.field.inv(self.value), -n, self.field.p), self.field)
        return FieldElement(pow(self.value, n, self.field.p), self.field)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Order:
    """Monomial order tag: grevlex, lex, or elimination of a leading block."""

    kind: str
    block: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order: {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise ValueError("elimination order needs a leading block of size >= 1")

    @property
    def tag(self) -> str:
        return self.kind if self.kind != "elim" else f"elim{self.block}"


GREVLEX = Order("grevlex")
LEX = Order("lex")


def elimination(k: int) -> Order:
    return Order("elim", k)


def order_from_tag(tag: str) -> Order:
    if tag == "grevlex":
        return GREVLEX
    if tag == "lex":
        return LEX
    if tag.startswith("elim"):
        return Order("elim", int(tag[4:]))
    raise ValueError(f"unknown monomial order tag: {tag!r}")


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring GF(p)[variables] with weights and a monomial order."""

    field: PrimeField
    variables: tuple
    weights: tuple = ()
    order: Order = GREVLEX

    def __post_init__(self) -> None:
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        weights = tuple(self.weights) if self.weights else (1,) * len(variables)
        object.__setattr__(self, "weights", weights)
        if len(weights) != len(variables):
            raise ValueError("one weight per variable")
        if any(not isinstance(w, int) or w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        if self.order.kind == "elim" and self.order.block >= len(variables):
            raise ValueError("elimination block must leave at least one trailing variable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def weighted_degree(self, mono: Mono) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def monomial_key(self, order: Optional[Order] = None):
        """Key function: key(a) > key(b) iff a > b under the order."""
        return _key_function(self, order or self.order)

    def compare(self, a: Mono, b: Mono, order: Optional[Order] = None) -> int:
        """Total order on monomials: -1, 0 or 1."""
        key = self.monomial_key(order)
        ka, kb = key(a), key(b)
        return (ka > kb) - (ka < kb)

    # -- element construction -------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        if name not in self.variables:
            raise ValueError(f"unknown variable {name!r}")
        i = self.variables.index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: 1})

    def monomial(self, mono: Mono, coeff: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(mono): coeff})

    def gens(self) -> tuple:
        return tuple(self.variable(v) for v in self.variables)


_KEY_FUNCS: dict = {}


def _key_function(ring: RingSpec, order: Order):
    ck = (ring, order)
    fn = _KEY_FUNCS.get(ck)
    if fn is not None:
        return fn
    weights = ring.weights
    n = ring.nvars
    memo: dict = {}
    if order.kind == "lex":
        def fn(m, _memo=memo):
            k = _memo.get(m)
            if k is None:
                k = _memo[m] = tuple(m)
            return k
    elif order.kind == "grevlex":
        rng = tuple(range(n - 1, -1, -1))
        def fn(m, _memo=memo, _w=weights, _r=rng):
            k = _memo.get(m)
            if k is None:
                d = 0
                for w, e in zip(_w, m):
                    d += w * e
                k = _memo[m] = (d,) + tuple(-m[i] for i in _r)
            return k
    else:  # elimination: leading block dominates, grevlex inside each block
        kb = order.block
        wh, wt = weights[:kb], weights[kb:]
        rh = tuple(range(kb - 1, -1, -1))
        rt = tuple(range(n - 1, kb - 1, -1))
        def fn(m, _memo=memo):
            k = _memo.get(m)
            if k is None:
                dh = sum(w * e for w, e in zip(wh, m))
                dt = sum(w * e for w, e in zip(wt, m[kb:]))
                k = _memo[m] = ((dh,) + tuple(-m[i] for i in rh)
                                + (dt,) + tuple(-m[i] for i in rt))
            return k
    _KEY_FUNCS[ck] = fn
    return fn


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b; raises if not divisible."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"monomial {a} not divisible by {b}")
    return q


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    """Sparse polynomial over GF(p), canonical and immutable."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, data: Union[Mapping, Iterable]):
        self.ring = ring
        p = ring.field.p
        n = ring.nvars
        acc: dict = {}
        items = data.items() if isinstance(data, Mapping) else data
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"exponent vector {mono} has wrong length for {ring.variables}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = (acc.get(mono, 0) + int(coeff)) % p
            if c:
                acc[mono] = c
            elif mono in acc:
                del acc[mono]
        key = ring.monomial_key()
        self.terms = tuple(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))
        self._hash = None

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def leading_monomial(self) -> Mono:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def weighted_degree(self) -> Optional[int]:
        """Max weighted degree over terms; None for the zero polynomial."""
        if not self.terms:
            return None
        wd = self.ring.weighted_degree
        return max(wd(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        wd = self.ring.weighted_degree
        degs = {wd(m) for m, _ in self.terms}
        return len(degs) == 1

    def coefficient(self, mono: Mono) -> FieldElement:
        mono = tuple(mono)
        for m, c in self.terms:
            if m == mono:
                return FieldElement(c, self.ring.field)
        return self.ring.field.zero

    def as_dict(self) -> dict:
        return dict(self.terms)

    # -- arithmetic -----------------------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        acc = dict(self.terms)
        p = self.ring.field.p
        for m, c in other.terms:
            v = (acc.get(m, 0) + c) % p
            if v:
                acc[m] = v
            elif m in acc:
                del acc[m]
        return Polynomial(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, {m: p - c for m, c in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        p = self.ring.field.p
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(x + y for x, y in zip(m1, m2))
                v = (acc.get(m, 0) + c1 * c2) % p
                if v:
                    acc[m] = v
                elif m in acc:
                    del acc[m]
        return Polynomial(self.ring, acc)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        if isinstance(other, FieldElement):
            if other.field != self.ring.field:
                raise ValueError("field mismatch")
            return self.ring.constant(other.value)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: cc * c % p for m, cc in self.terms})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == 1:
            return self
        return self.scale(self.ring.field.inv(lc))

    def frobenius_power(self, e: int) -> "Polynomial":
        """f ** (p**e), computed termwise: exponents scale by p**e and
        coefficients are fixed by Frobenius on the prime field."""
        if not isinstance(e, int) or e < 0:
            raise ValueError("Frobenius exponent must be a non-negative integer")
        if e == 0 or not self.terms:
            return self
        q = self.ring.field.p ** e
        return Polynomial(self.ring, {tuple(x * q for x in m): c for m, c in self.terms})

    def substitute(self, images: Mapping[str, "Polynomial"], target: RingSpec) -> "Polynomial":
        """Ring map sending each variable to the given image polynomial."""
        missing = [v for v in self.ring.variables if v not in images]
        if missing:
            raise ValueError(f"no image for variables {missing}")
        result = target.zero()
        for mono, coeff in self.terms:
            term = target.constant(coeff)
            for var, e in zip(self.ring.variables, mono):
                if e:
                    term = term * images[var] ** e
            result = result + term
        return result

    # -- comparison / hashing / printing --------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        variables = self.ring.variables
        chunks = []
        for mono, coeff in self.terms:
            parts = []
            if coeff != 1 or not any(mono):
                parts.append(str(coeff))
            for var, e in zip(variables, mono):
                if e == 1:
                    parts.append(var)
                elif e:
                    parts.append(f"{var}^{e}")
            chunks.append("*".join(parts))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"
