import pytest

from frobtool.groebner import Ideal
from frobtool.monomials import MonomialIdeal
from frobtool.parsing import parse_polynomial
from frobtool.polyring import Polynomial, PrimeField, RingSpec


@pytest.fixture
def gf2_xyz():
    return RingSpec(PrimeField(2), ("x", "y", "z"))


@pytest.fixture
def minors():
    ring = RingSpec(PrimeField(2), ("u", "v", "w", "x", "y", "z"))
    gens = tuple(parse_polynomial(src, ring)
                 for src in ("v*z - w*y", "w*x - u*z", "u*y - v*x"))
    return ring, Ideal(ring, gens)


def minors_over(p):
    ring = RingSpec(PrimeField(p), ("u", "v", "w", "x", "y", "z"))
    gens = tuple(parse_polynomial(src, ring)
                 for src in ("v*z - w*y", "w*x - u*z", "u*y - v*x"))
    return ring, Ideal(ring, gens)


def random_monomial(rng, nvars, max_exp=3):
    return tuple(rng.randint(0, max_exp) for _ in range(nvars))


def random_poly(ring, rng, max_terms=3, max_exp=3, homogeneous=None):
    p = ring.field.p
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_monomial(rng, ring.nvars, max_exp)] = rng.randint(1, p - 1) if p > 2 else 1
    poly = Polynomial(ring, terms)
    return poly


def random_monomial_ideal(ring, rng, max_gens=3, max_exp=3):
    gens = [ring.monomial(random_monomial(rng, ring.nvars, max_exp))
            for _ in range(rng.randint(1, max_gens))]
    gens = [g for g in gens if g.weighted_degree() > 0]
    if not gens:
        gens = [ring.variable(ring.variables[0])]
    return Ideal(ring, gens)


def random_binomial_ideal(ring, rng, max_gens=3, max_exp=2):
    p = ring.field.p
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        a = random_monomial(rng, ring.nvars, max_exp)
        b = random_monomial(rng, ring.nvars, max_exp)
        if a == b:
            continue
        c = rng.randint(1, p - 1)
        gens.append(Polynomial(ring, {a: 1, b: -c}))
    if not gens:
        gens = [ring.variable(ring.variables[0])]
    return Ideal(ring, gens)


def as_monomial_ideal(ideal):
    return MonomialIdeal(ideal.ring, [g.leading_monomial() for g in ideal.generators])
