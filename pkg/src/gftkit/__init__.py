"""Numerical toolkit for the class of k-uniformly starlike functions with
respect to the points z and tz, defined through the multiplier operator
D^eta_{lambda,mu} and restricted to negative coefficients."""

from .conic import ConicSpec, ConicType, classify, contains, lemma1_check, lemma2_check
from .diffop import OperatorParams, apply_closed, apply_recursive, phi
from .errors import (
    ConditionFailed,
    DegenerateDenominator,
    DegenerateWeight,
    DomainError,
    FormError,
    GFTError,
    NumericalDegeneracy,
    ParameterError,
    ZeroDenominator,
)
from .kernel import (
    ClassParams,
    MembershipVerdict,
    Multipliers,
    coefficient_bound,
    coefficient_sum,
    extremal_function,
    is_member,
    multipliers,
    random_member,
)
from .neighborhood import (
    NeighborhoodSpec,
    distance,
    hypothesis_check,
    in_neighborhood,
    inclusion_property_test,
    kernel_coefficient,
)
from .partial_sums import (
    PartialSumBounds,
    delta_n,
    extremal_partial,
    partial_sum,
    theorem_bounds,
    verify_ratio_bounds,
)
from .series import (
    Polynomial,
    SignForm,
    TruncatedSeries,
    derivative,
    evaluate,
    hadamard,
    scale_substitute,
)
from .verifier import (
    GridSpec,
    VerificationReport,
    condition_value,
    grid_min_condition,
    grid_min_ratio,
)

__version__ = "0.1.0"
