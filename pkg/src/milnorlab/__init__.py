"""Exact computation of Milnor numbers of weighted-homogeneous singularities.

Three independent routes are provided: the closed product formula over the
weights, exact division of Hilbert series, and brute-force graded linear
algebra on the Jacobian ideal.  The graded Koszul complex on the partial
derivatives can be built and checked for exactness slice by slice.
"""

from .errors import (
    AmbiguousWeights,
    DegreeUnderflow,
    IndexOutOfRange,
    MilnorError,
    NotHomogeneous,
    NotIsolated,
    NotPolynomial,
    NotWeightedHomogeneous,
    PolySyntaxError,
    SubsetOverflow,
    UnknownVariable,
    VariableMismatch,
    ZeroPolynomial,
)
from .grading import (
    WeightSystem,
    derivative_type,
    enumerate_monomials,
    infer_weight_system,
    is_weighted_homogeneous,
    parse_weight_system,
    weighted_degree,
)
from .koszul import (
    ExactnessReport,
    GradedFreeResolution,
    GradedMatrix,
    differential_matrix,
    euler_series,
    koszul_shifts,
    verify_exactness,
)
from .milnor import (
    MilnorReport,
    full_report,
    milnor_algebra_dims,
    mu_formula,
    mu_oracle,
)
from .poly import (
    Polynomial,
    parse_polynomial,
    partial_derivative,
    poly_add,
    poly_mul,
)
from .series import (
    IntegerPolynomial,
    TruncatedSeries,
    denumerant,
    evaluate_at_one,
    lemma_expansion,
    milnor_poincare_polynomial,
    product_numerator,
    ring_hilbert_series,
    shift_series,
)

__version__ = "0.1.0"
