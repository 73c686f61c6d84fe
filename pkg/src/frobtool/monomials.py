"""Combinatorial fast path for monomial ideals and fractional monomial modules.

Monomial ideals get gcd/lcm-based colon, intersection and Frobenius powers
(an independent oracle for the Groebner engine).  Fractional monomial
modules over congruence-presented affine semigroups carry the twisted
product on raw integer exponent vectors; membership is pure lattice
arithmetic plus the admissibility predicate, with no denominator clearing.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

from .polyring import (
    Mono,
    RingSpec,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    _key_function,
)


def _antichain(ring: RingSpec, monos: Iterable[Mono]):
    """Prune divisible generators; sorted by (weighted degree, ring order)."""
    key = _key_function(ring, ring.order)
    unique = sorted(set(monos), key=lambda m: (ring.weighted_degree(m), key(m)))
    kept = []
    for m in unique:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as the antichain of its minimal generators."""

    ring: RingSpec
    generators: tuple

    def __init__(self, ring: RingSpec, generators: Iterable[Mono]):
        object.__setattr__(self, "ring", ring)
        n = ring.nvars
        monos = []
        for m in generators:
            m = tuple(m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m}")
            monos.append(m)
        object.__setattr__(self, "generators", _antichain(ring, monos))

    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, mono: Mono) -> bool:
        mono = tuple(mono)
        return any(mono_divides(g, mono) for g in self.generators)

    def polynomials(self):
        """The generators as Polynomial values over the ring."""
        return tuple(self.ring.monomial(m) for m in self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.ring, self.generators + other.generators)

    def _check(self, other: "MonomialIdeal") -> None:
        if not isinstance(other, MonomialIdeal):
            raise TypeError("expected a MonomialIdeal")
        if other.ring != self.ring:
            raise ValueError("ring mismatch")


def mono_intersect(lhs: MonomialIdeal, rhs: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm."""
    lhs._check(rhs)
    gens = [mono_lcm(a, b) for a in lhs.generators for b in rhs.generators]
    return MonomialIdeal(lhs.ring, gens)


def mono_colon(lhs: MonomialIdeal, rhs: MonomialIdeal) -> MonomialIdeal:
    """Colon ideal: intersection over rhs generators of (m_i : n_j) sums,
    with (m : n) = m / gcd(m, n)."""
    lhs._check(rhs)
    if rhs.is_zero():
        raise ValueError("colon by the zero ideal")
    result: Optional[MonomialIdeal] = None
    for n in rhs.generators:
        piece = MonomialIdeal(lhs.ring, [mono_div(m, mono_gcd(m, n)) for m in lhs.generators])
        result = piece if result is None else mono_intersect(result, piece)
    return result


def mono_frobenius_power(ideal: MonomialIdeal, e: int, p: Optional[int] = None) -> MonomialIdeal:
    """Exponent vectors scaled by p^e."""
    if e < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    q = (p or ideal.ring.field.p) ** e
    return MonomialIdeal(ideal.ring, [tuple(x * q for x in m) for m in ideal.generators])


def graded_piece(ring: RingSpec, degree: int):
    """All monomials of total degree n for a standard-weight ring;
    the count is C(n + d - 1, d - 1)."""
    if any(w != 1 for w in ring.weights):
        raise ValueError("graded pieces are defined for standard weights")
    if degree < 0:
        return ()
    d = ring.nvars
    out = []

    def rec(prefix, remaining, i):
        if i == d - 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, i + 1)

    rec((), degree, 0)
    assert len(out) == comb(degree + d - 1, d - 1)
    return tuple(out)


# --------------------------------------------------------------------------
# affine semigroups and fractional monomial modules

@dataclass(frozen=True)
class SemigroupSpec:
    """Lattice points v >= 0 with w.v = 0 mod m for each (w, m) pair.

    A modulus of 0 means the exact equality w.v = 0.  Closure under
    addition is structural for this encoding and re-checked on random pairs
    at construction.
    """

    dim: int
    congruences: tuple = ()

    def __init__(self, dim: int, congruences: Iterable = ()):
        if dim < 1:
            raise ValueError("semigroup dimension must be positive")
        object.__setattr__(self, "dim", dim)
        congs = []
        for weights, modulus in congruences:
            weights = tuple(weights)
            if len(weights) != dim:
                raise ValueError("congruence weight vector has wrong length")
            if modulus < 0:
                raise ValueError("congruence modulus must be >= 0")
            congs.append((weights, int(modulus)))
        object.__setattr__(self, "congruences", tuple(congs))
        rng = random.Random(20)
        for _ in range(32):
            a = tuple(rng.randrange(0, 6) for _ in range(dim))
            b = tuple(rng.randrange(0, 6) for _ in range(dim))
            if self.admissible(a) and self.admissible(b):
                s = tuple(x + y for x, y in zip(a, b))
                if not self.admissible(s):
                    raise ValueError("semigroup data is not closed under addition")

    def admissible(self, v: Sequence[int]) -> bool:
        if len(v) != self.dim:
            raise ValueError("vector has wrong length")
        if any(x < 0 for x in v):
            return False
        for weights, modulus in self.congruences:
            dot = sum(w * x for w, x in zip(weights, v))
            if modulus == 0:
                if dot != 0:
                    return False
            elif dot % modulus != 0:
                return False
        return True


@dataclass(frozen=True)
class FracMonomialModule:
    """Span of inverse-monomial generators over a semigroup ring.

    Generators are raw integer vectors (negative exponents allowed); a
    vector v lies in the module iff v - g is semigroup-admissible for some
    generator g.  The degree records the Frobenius degree e of the
    component the module represents, when meaningful.
    """

    semigroup: SemigroupSpec
    generators: tuple
    degree: Optional[int] = None

    def __init__(self, semigroup: SemigroupSpec, generators: Iterable,
                 degree: Optional[int] = None):
        object.__setattr__(self, "semigroup", semigroup)
        gens = []
        for g in generators:
            g = tuple(int(x) for x in g)
            if len(g) != semigroup.dim:
                raise ValueError("generator vector has wrong length")
            gens.append(g)
        object.__setattr__(self, "generators", tuple(sorted(set(gens))))
        object.__setattr__(self, "degree", degree)

    def contains(self, v: Sequence[int]) -> bool:
        v = tuple(int(x) for x in v)
        adm = self.semigroup.admissible
        return any(adm(tuple(a - b for a, b in zip(v, g))) for g in self.generators)

    def contains_module(self, other: "FracMonomialModule") -> bool:
        if other.semigroup != self.semigroup:
            raise ValueError("semigroup mismatch")
        return all(self.contains(g) for g in other.generators)

    def same_module(self, other: "FracMonomialModule") -> bool:
        return self.contains_module(other) and other.contains_module(self)

    def minimalize(self) -> "FracMonomialModule":
        """Drop generators reachable from another generator."""
        adm = self.semigroup.admissible
        gens = list(self.generators)
        kept = []
        for i, g in enumerate(gens):
            dominated = False
            for j, h in enumerate(gens):
                if i == j:
                    continue
                diff = tuple(a - b for a, b in zip(g, h))
                if adm(diff) and any(diff):
                    dominated = True
                    break
            if not dominated:
                kept.append(g)
        return FracMonomialModule(self.semigroup, kept, self.degree)


def frac_membership(v: Sequence[int], module: FracMonomialModule) -> bool:
    return module.contains(v)


def frac_twisted_product(lhs: FracMonomialModule, rhs: FracMonomialModule,
                         p: int) -> FracMonomialModule:
    """Twisted product on fractional modules: generators g_a + p^{e1} * g_b.

    The pairwise products span the product component as a module over the
    semigroup ring (bilinearity of the twisted multiplication).  Kept as a
    plain generator list, without minimalization.
    """
    if lhs.semigroup != rhs.semigroup:
        raise ValueError("semigroup mismatch")
    if lhs.degree is None or rhs.degree is None:
        raise ValueError("twisted products need the Frobenius degree of both factors")
    q1 = p ** lhs.degree
    gens = [tuple(a + q1 * b for a, b in zip(ga, gb))
            for ga in lhs.generators for gb in rhs.generators]
    return FracMonomialModule(lhs.semigroup, gens, lhs.degree + rhs.degree)


def free_semigroup(d: int) -> SemigroupSpec:
    """The full lattice cone N^d (no congruences)."""
    return SemigroupSpec(d)


def veronese_semigroup(d: int, n: int) -> SemigroupSpec:
    """Exponents of the n-th Veronese subring of a d-variable polynomial ring."""
    if n < 1:
        raise ValueError("Veronese index must be >= 1")
    return SemigroupSpec(d, (((1,) * d, n),))


def veronese_component(d: int, n: int, p: int, e: int) -> FracMonomialModule:
    """Degree-e component of the twisted algebra of the n-th Veronese ring.

    Generators are 1/(x_1^{a_1} ... x_d^{a_d}) with a_k <= p^e - 1 and
    sum a_k = 0 mod n.  The family is unbounded below in each coordinate;
    every member is dominated by one with a_k > p^e - 1 - n, so the finite
    window [q - n, q - 1]^d enumerates a complete set, which is then pruned
    to the minimal generators.
    """
    if n < 1:
        raise ValueError("Veronese index must be >= 1")
    if e < 0:
        raise ValueError("Frobenius degree must be non-negative")
    q = p ** e
    semigroup = veronese_semigroup(d, n)
    if e == 0:
        return FracMonomialModule(semigroup, [(0,) * d], 0)
    window = range(q - n, q)
    gens = [tuple(-a for a in alpha)
            for alpha in itertools.product(window, repeat=d)
            if sum(alpha) % n == 0]
    return FracMonomialModule(semigroup, gens, e).minimalize()


def poly_twisted_component(d: int, p: int, e: int) -> FracMonomialModule:
    """Degree-e component for a standard graded polynomial ring in d
    variables: all monomials of total degree p^e - 1."""
    semigroup = free_semigroup(d)
    if e == 0:
        return FracMonomialModule(semigroup, [(0,) * d], 0)
    q = p ** e
    out = []

    def rec(prefix, remaining, i):
        if i == d - 1:
            out.append(prefix + (remaining,))
            return
        for x in range(remaining, -1, -1):
            rec(prefix + (x,), remaining - x, i + 1)

    rec((), q - 1, 0)
    return FracMonomialModule(semigroup, out, e)


def segre_semigroup_2x3() -> SemigroupSpec:
    """Exponent semigroup of the Segre product of GF(p)[s,t] and GF(p)[x,y,z]:
    vectors (a_s, a_t, a_x, a_y, a_z) >= 0 with a_s + a_t = a_x + a_y + a_z."""
    return SemigroupSpec(5, (((1, 1, -1, -1, -1), 0),))


def segre_component_2x3(p: int, e: int) -> FracMonomialModule:
    """Degree-e component for the 2x3 Segre/determinantal ring: the span of
    1/((st)^{q-1} x^k y^l z^m) with k+l+m = 2q-2 and k,l,m <= q-1."""
    if e < 0:
        raise ValueError("Frobenius degree must be non-negative")
    q = p ** e
    semigroup = segre_semigroup_2x3()
    gens = []
    for k in range(q):
        for l in range(q):
            m = 2 * q - 2 - k - l
            if 0 <= m <= q - 1:
                gens.append((-(q - 1), -(q - 1), -k, -l, -m))
    return FracMonomialModule(semigroup, gens, e)
