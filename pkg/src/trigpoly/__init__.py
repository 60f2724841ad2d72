"""Exact algebra for trigonometric polynomials and their power-basis forms."""

__version__ = "0.1.0"

from .numkernel import (
    BiPoly,
    GaussRational,
    UniPoly,
    chebyshev,
    compose,
    format_scalar,
    parity_split,
    to_chebyshev_basis,
)
from .quotient import (
    CanonicalForm,
    Modulus,
    bezout_degree_bound,
    canonical_mul,
    ideal_member,
    param_point,
    reduce,
)
from .trigalg import (
    IdentityResult,
    NaiveRepresentation,
    NaiveTrigPoly,
    Obstruction,
    SampleReport,
    TrigPoly,
    canonical_to_trig,
    decide_naive,
    identity_check,
    naive_to_standard,
    sample_check,
    trig_mul,
    trig_to_canonical,
)
from .oracle import representability_oracle
