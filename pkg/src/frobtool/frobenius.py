"""Graded components of the Frobenius-operator algebra of A/I.

The degree-e component is presented as (I^[q] : I) / I^[q] with q = p^e,
carrying the twisted multiplication a * b^{q1} on colon representatives.
This module builds components, multiplies them, probes finite generation
degree by degree, and reports generator-degree growth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .groebner import (
    GradedMembership,
    Ideal,
    colon,
    frobenius_power,
    minimal_generators_mod,
    _key_function,
)
from .polyring import Polynomial


@dataclass(frozen=True)
class FrobeniusDegree:
    e: int
    q: int

    def __post_init__(self) -> None:
        if self.e < 0:
            raise ValueError("Frobenius degree must be non-negative")


@dataclass(frozen=True)
class FrobeniusComponent:
    """Degree-e component: the colon ideal I^[q]:I, the modulus I^[q], and
    minimal generator representatives in ascending weighted degree."""

    degree: FrobeniusDegree
    colon: Ideal
    modulus: Ideal
    min_gens: tuple

    @property
    def e(self) -> int:
        return self.degree.e

    @property
    def q(self) -> int:
        return self.degree.q

    def max_gen_degree(self) -> int:
        return max((g.weighted_degree() for g in self.min_gens), default=0)


@dataclass(frozen=True)
class DegreeRecord:
    e: int
    q: int
    min_gen_count: int
    new_gen_count: int
    max_gen_degree: int
    generated_from_lower: bool


@dataclass(frozen=True)
class FinGenReport:
    """Per-degree finite-generation evidence.

    Degree 1 is "not generated from lower" by convention (no positive
    splits exist).  A probe is evidence, never proof; the first degree
    needing new generators is recorded, and flags above it are relative to
    full lower components.
    """

    p: int
    emax: int
    rows: tuple

    @property
    def first_new_degree(self) -> Optional[int]:
        for row in self.rows:
            if row.e >= 2 and row.new_gen_count > 0:
                return row.e
        return None

    def row(self, e: int) -> DegreeRecord:
        return self.rows[e - 1]

    def summary_lines(self):
        out = []
        first = self.first_new_degree
        for row in self.rows:
            if row.e == 1:
                out.append(f"e=1: {row.min_gen_count} generator(s), "
                           f"max degree {row.max_gen_degree}")
            elif row.generated_from_lower:
                note = ""
                if first is not None and row.e > first:
                    note = " (relative to full lower components)"
                out.append(f"e={row.e}: generated from lower degrees{note}, "
                           f"{row.min_gen_count} generator(s), "
                           f"max degree {row.max_gen_degree}")
            else:
                note = ""
                if first is not None and row.e > first:
                    note = " (relative to full lower components)"
                out.append(f"e={row.e}: new generators required at e = {row.e}{note}: "
                           f"{row.new_gen_count} of {row.min_gen_count}, "
                           f"max degree {row.max_gen_degree}")
        return out


def component(ideal: Ideal, e: int, degree_guard: Optional[int] = None) -> FrobeniusComponent:
    """The degree-e component of the operator algebra of A/I."""
    ring = ideal.ring
    p = ring.field.p
    if e < 0:
        raise ValueError("Frobenius degree must be non-negative")
    if not ideal.is_homogeneous():
        raise ValueError("component computation needs a homogeneous ideal")
    if not ideal.is_proper(degree_guard):
        raise ValueError("component computation needs a proper ideal")
    q = p ** e
    if e == 0:
        unit = Ideal(ring, (ring.one(),))
        return FrobeniusComponent(FrobeniusDegree(0, 1), unit, ideal, (ring.one(),))
    modulus = frobenius_power(ideal, e)
    col = colon(modulus, ideal, degree_guard)
    raw = minimal_generators_mod(col.groebner_basis(degree_guard=degree_guard), modulus)
    key = _key_function(ring, ring.order)
    min_gens = tuple(sorted((modulus.normal_form(g, degree_guard=degree_guard).monic()
                             for g in raw),
                            key=lambda g: (g.weighted_degree(), key(g.leading_monomial()))))
    return FrobeniusComponent(FrobeniusDegree(e, q), col, modulus, min_gens)


def twisted_mul(a: Polynomial, e1: int, b: Polynomial) -> Polynomial:
    """a * b for a of Frobenius degree e1: the product a * b^{p^{e1}}."""
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    return a * b.frobenius_power(e1)


def twisted_mul_reps(a: Polynomial, e1: int, b: Polynomial, e2: int,
                     ideal: Ideal, check: bool = True) -> Polynomial:
    """Twisted product of colon representatives, asserting that the result
    represents an element of the degree e1+e2 component."""
    result = twisted_mul(a, e1, b)
    if check:
        target = frobenius_power(ideal, e1 + e2)
        membership = GradedMembership(target.generators, ideal.ring)
        for g in ideal.generators:
            if not membership.contains(result * g):
                raise ArithmeticError(
                    "twisted product left the colon ideal of degree "
                    f"{e1 + e2}; inputs were not valid representatives")
    return result


def product_component(comp1: FrobeniusComponent, comp2: FrobeniusComponent,
                      ideal: Ideal, check: bool = False):
    """All pairwise twisted products of the two components' generators."""
    out = []
    for g in comp1.min_gens:
        for h in comp2.min_gens:
            out.append(twisted_mul_reps(g, comp1.e, h, comp2.e, ideal, check))
    return out


@dataclass(frozen=True)
class ProbeResult:
    report: FinGenReport
    components: tuple

    def component(self, e: int) -> FrobeniusComponent:
        return self.components[e - 1]


def fingen_probe(ideal: Ideal, emax: int, degree_guard: Optional[int] = None,
                 check_products: bool = False) -> ProbeResult:
    """Degree-by-degree generation probe.

    For each e >= 2, the ideal generated by all twisted products of full
    lower components plus I^[q] is compared with the colon ideal; a degree
    is generated from lower exactly when no new generators survive.
    """
    if emax < 1:
        raise ValueError("emax must be >= 1")
    p = ideal.ring.field.p
    comps = [component(ideal, e, degree_guard) for e in range(1, emax + 1)]
    rows = []
    c1 = comps[0]
    rows.append(DegreeRecord(1, p, len(c1.min_gens), len(c1.min_gens),
                             c1.max_gen_degree(), False))
    for e in range(2, emax + 1):
        comp_e = comps[e - 1]
        products = []
        for e1 in range(1, e):
            products.extend(product_component(comps[e1 - 1], comps[e - e1 - 1],
                                              ideal, check_products))
        lower = Ideal(ideal.ring, tuple(comp_e.modulus.generators) + tuple(products))
        survivors = minimal_generators_mod(comp_e.min_gens, lower)
        new_count = len(survivors)
        rows.append(DegreeRecord(e, p ** e, len(comp_e.min_gens), new_count,
                                 comp_e.max_gen_degree(), new_count == 0))
    return ProbeResult(FinGenReport(p, emax, tuple(rows)), tuple(comps))


def degree_growth(ideal: Ideal, emax: int, degree_guard: Optional[int] = None,
                  probe: Optional[ProbeResult] = None):
    """Max generator degree per component and its ratio to p^e (the
    empirical growth constant)."""
    if probe is None:
        comps = [component(ideal, e, degree_guard) for e in range(1, emax + 1)]
    else:
        comps = list(probe.components[:emax])
    p = ideal.ring.field.p
    return [(c.e, c.max_gen_degree(), Fraction(c.max_gen_degree(), p ** c.e))
            for c in comps]


def monomial_fingen_probe(ideal, emax: int) -> FinGenReport:
    """Generation probe along the pure monomial path (independent oracle).

    Colons, Frobenius powers and twisted products of monomial data reduce
    to exponent arithmetic, so counts and flags come from divisibility
    alone; results must agree with fingen_probe on the same input.
    """
    from .monomials import MonomialIdeal, mono_colon, mono_frobenius_power

    if not isinstance(ideal, MonomialIdeal):
        raise TypeError("monomial probe needs a MonomialIdeal")
    if emax < 1:
        raise ValueError("emax must be >= 1")
    ring = ideal.ring
    p = ring.field.p
    mingens = {}
    moduli = {}
    for e in range(1, emax + 1):
        iq = mono_frobenius_power(ideal, e)
        col = mono_colon(iq, ideal)
        moduli[e] = iq
        mingens[e] = tuple(g for g in col.generators if not iq.contains(g))
    rows = []
    wd = ring.weighted_degree
    rows.append(DegreeRecord(1, p, len(mingens[1]), len(mingens[1]),
                             max((wd(g) for g in mingens[1]), default=0), False))
    for e in range(2, emax + 1):
        products = []
        for e1 in range(1, e):
            q1 = p ** e1
            for g in mingens[e1]:
                for h in mingens[e - e1]:
                    products.append(tuple(a + q1 * b for a, b in zip(g, h)))
        lower = MonomialIdeal(ring, tuple(products) + moduli[e].generators)
        new = [g for g in mingens[e] if not lower.contains(g)]
        rows.append(DegreeRecord(e, p ** e, len(mingens[e]), len(new),
                                 max((wd(g) for g in mingens[e]), default=0),
                                 not new))
    return FinGenReport(p, emax, tuple(rows))


def qgor_expected_bound(m: int, p: int) -> Optional[int]:
    """Least e0 >= 1 with p^{e0} = 1 mod m, or None when p divides m
    (no generation bound is expected there)."""
    if m < 1:
        raise ValueError("index must be >= 1")
    if m == 1:
        return 1
    if math.gcd(p, m) != 1:
        return None
    e0 = 1
    x = p % m
    while x != 1:
        x = x * p % m
        e0 += 1
    return e0
