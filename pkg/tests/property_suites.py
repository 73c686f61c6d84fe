"""Randomized invariant suites shared by the property tests and the
acceptance module.  Every function raises AssertionError on the first
violation and returns a count of checked instances."""

import random

from frobtool.frobenius import component, twisted_mul
from frobtool.groebner import (
    DegreeGuardExceeded,
    Ideal,
    colon,
    frobenius_power,
    ideal_equal,
    intersect,
)

# random draws occasionally build genuinely explosive inputs; the guard
# abort is their documented outcome and such draws are redrawn rather than
# counted
GUARD = 400
from frobtool.monomials import (
    MonomialIdeal,
    mono_colon,
    mono_frobenius_power,
    mono_intersect,
)
from frobtool.parsing import parse_polynomial
from frobtool.polyring import PrimeField, RingSpec, mono_div, mono_lcm

from conftest import (
    random_binomial_ideal,
    random_monomial,
    random_monomial_ideal,
    random_poly,
)


def _spoly(f, g):
    ring = f.ring
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lmf, lmg)
    return (ring.monomial(mono_div(lcm, lmf)) * f.monic()
            - ring.monomial(mono_div(lcm, lmg)) * g.monic())


def check_reduced_basis(ideal):
    """Exhaustive S-polynomial zero-reduction plus reducedness."""
    basis = ideal.groebner_basis()
    holder = Ideal(ideal.ring, basis)
    pairs = 0
    for i in range(len(basis)):
        assert basis[i].leading_coefficient() == 1
        for j in range(i + 1, len(basis)):
            assert holder.normal_form(_spoly(basis[i], basis[j])).is_zero()
            pairs += 1
    return pairs


def run_basis_spoly_suite(count=25, seed=100):
    rng = random.Random(seed)
    rings = [RingSpec(PrimeField(p), names)
             for p in (2, 3, 5)
             for names in (("x", "y"), ("x", "y", "z"))]
    checked = 0
    for i in range(count):
        ring = rings[i % len(rings)]
        gens = [random_poly(ring, rng, max_terms=3, max_exp=3)
                for _ in range(rng.randint(1, 3))]
        check_reduced_basis(Ideal(ring, gens))
        checked += 1
    return checked


def run_colon_suite(count=50, seed=200):
    """g * J contained in I iff g in I:J, mixed monomial/binomial inputs."""
    rng = random.Random(seed)
    rings = [RingSpec(PrimeField(p), names)
             for p in (2, 3)
             for names in (("x", "y", "z"), ("w", "x", "y", "z"))]
    checked = 0
    while checked < count:
        ring = rings[checked % len(rings)]
        make = random_monomial_ideal if checked % 2 == 0 else random_binomial_ideal
        lhs = make(ring, rng)
        rhs = make(ring, rng)
        if rhs.is_zero():
            continue
        try:
            quotient = colon(lhs, rhs, GUARD)
        except DegreeGuardExceeded:
            continue
        for g in quotient.generators:
            assert all(lhs.contains(g * f) for f in rhs.generators)
        for _ in range(4):
            h = random_poly(ring, rng, max_terms=2, max_exp=2)
            member = quotient.contains(h)
            pushes_in = all(lhs.contains(h * f) for f in rhs.generators)
            assert member == pushes_in
        assert quotient.contains_ideal(lhs)
        checked += 1
    return checked


def run_frobenius_independence_suite(count=20, seed=300):
    rng = random.Random(seed)
    rings = [RingSpec(PrimeField(p), ("x", "y", "z")) for p in (2, 3, 5)]
    checked = 0
    while checked < count:
        ring = rings[checked % len(rings)]
        gens = [random_poly(ring, rng, max_terms=2, max_exp=2)
                for _ in range(rng.randint(1, 2))]
        ideal = Ideal(ring, gens)
        if ideal.is_zero():
            continue
        base = list(ideal.generators)
        redundant = base + [base[0] * random_poly(ring, rng, 2, 1)]
        if len(base) > 1:
            redundant.append(base[0] + base[1] * random_poly(ring, rng, 1, 1))
        e = rng.randint(1, 2)
        try:
            assert ideal_equal(frobenius_power(ideal, e),
                               frobenius_power(Ideal(ring, redundant), e), GUARD)
            colon_ideal = colon(frobenius_power(ideal, 1), ideal, GUARD)
        except DegreeGuardExceeded:
            continue
        assert colon_ideal.contains_ideal(frobenius_power(ideal, 1))
        checked += 1
    return checked


def run_cross_oracle_suite(count=50, seed=400):
    rng = random.Random(seed)
    rings = [RingSpec(PrimeField(p), names)
             for p in (2, 3)
             for names in (("x", "y", "z"), ("w", "x", "y", "z"))]
    checked = 0
    while checked < count:
        ring = rings[checked % len(rings)]
        lhs_m = [random_monomial(rng, ring.nvars, 3) for _ in range(rng.randint(1, 3))]
        rhs_m = [random_monomial(rng, ring.nvars, 2) for _ in range(rng.randint(1, 2))]
        lhs_m = [m for m in lhs_m if any(m)]
        rhs_m = [m for m in rhs_m if any(m)]
        if not lhs_m or not rhs_m:
            continue
        lhs = MonomialIdeal(ring, lhs_m)
        rhs = MonomialIdeal(ring, rhs_m)
        lhs_poly = Ideal(ring, lhs.polynomials())
        rhs_poly = Ideal(ring, rhs.polynomials())
        assert ideal_equal(Ideal(ring, mono_colon(lhs, rhs).polynomials()),
                           colon(lhs_poly, rhs_poly))
        assert ideal_equal(Ideal(ring, mono_intersect(lhs, rhs).polynomials()),
                           intersect(lhs_poly, rhs_poly))
        e = rng.randint(1, 2)
        assert ideal_equal(Ideal(ring, mono_frobenius_power(lhs, e).polynomials()),
                           frobenius_power(lhs_poly, e))
        checked += 1
    return checked


def _component_element(rng, comp, ring):
    acc = ring.zero()
    for g in comp.min_gens:
        if rng.random() < 0.7:
            acc = acc + g * random_poly(ring, rng, max_terms=1, max_exp=1)
    if acc.is_zero():
        acc = comp.min_gens[0]
    if rng.random() < 0.5:
        acc = acc + comp.modulus.generators[0] * random_poly(ring, rng, 1, 1)
    return acc


def run_twisted_mul_suite(count=100, seed=500):
    """Associativity, distributivity and well-definedness of the twisted
    product on randomized colon representatives."""
    ring = RingSpec(PrimeField(2), ("x", "y", "z"))
    katzman = Ideal(ring, (parse_polynomial("x*y", ring),
                           parse_polynomial("y*z", ring)))
    hyper = Ideal(ring, (parse_polynomial("x*y - z^2", ring),))
    rng = random.Random(seed)
    checked = 0
    for ideal in (katzman, hyper):
        comps = {e: component(ideal, e) for e in (1, 2)}
        moduli = {e: frobenius_power(ideal, e) for e in (1, 2, 3, 4)}
        while checked < count // 2 * (1 if ideal is katzman else 2):
            e1 = rng.choice((1, 2))
            e2 = rng.choice((1, 2))
            q1 = 2 ** e1
            a = _component_element(rng, comps[e1], ring)
            b = _component_element(rng, comps[e2], ring)
            c = _component_element(rng, comps[1], ring)
            # associativity is an identity on representatives
            assert twisted_mul(twisted_mul(a, e1, b), e1 + e2, c) == \
                twisted_mul(a, e1, twisted_mul(b, e2, c))
            # distributivity (right uses the Frobenius of a sum)
            assert twisted_mul(a, e1, b + c if e2 == 1 else b) == \
                twisted_mul(a, e1, b) + twisted_mul(a, e1, c if e2 == 1 else ring.zero())
            assert twisted_mul(a + c if e1 == 1 else a, e1, b) == \
                twisted_mul(a, e1, b) + twisted_mul(c if e1 == 1 else ring.zero(), e1, b)
            # well-definedness: perturbing representatives by the moduli
            # leaves the product's class unchanged
            i1 = moduli[e1].generators[0] * random_poly(ring, rng, 1, 1)
            i2 = moduli[e2].generators[-1] * random_poly(ring, rng, 1, 1)
            target = moduli[e1 + e2]
            diff = twisted_mul(a + i1, e1, b + i2) - twisted_mul(a, e1, b)
            assert target.contains(diff)
            checked += 1
    return checked
