"""Exact Frobenius-operator computations over prime fields."""

from .polyring import (
    FieldElement,
    GREVLEX,
    LEX,
    Order,
    Polynomial,
    PrimeField,
    RingSpec,
    elimination,
    is_prime,
)
from .parsing import ParseError, UnknownVariableError, parse_polynomial
from .groebner import (
    DEFAULT_DEGREE_GUARD,
    DegreeGuardExceeded,
    GradedMembership,
    Ideal,
    LiftVerificationError,
    NoLiftExists,
    colon,
    frobenius_power,
    groebner_basis,
    ideal_equal,
    ideal_power,
    intersect,
    lift_by_nzd,
    minimal_generators_mod,
)
from .monomials import (
    FracMonomialModule,
    MonomialIdeal,
    SemigroupSpec,
    frac_membership,
    frac_twisted_product,
    graded_piece,
    mono_colon,
    mono_frobenius_power,
    mono_intersect,
    poly_twisted_component,
    segre_component_2x3,
    veronese_component,
)
from .frobenius import (
    FinGenReport,
    FrobeniusComponent,
    FrobeniusDegree,
    component,
    degree_growth,
    fingen_probe,
    product_component,
    qgor_expected_bound,
    twisted_mul,
    twisted_mul_reps,
)

__version__ = "0.1.0"
