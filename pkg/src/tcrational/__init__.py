"""Exact computations around zero-divisor cup length and TC of spaces whose
cohomology is a truncated polynomial algebra K[u]/(u^(k+1))."""

from .algebra import (
    QQ, FieldSpec, TensorElement, TruncatedAlgebra, add, basis_class, coefficient_at,
    make_algebra, multiply, negate, power, scale, serialize,
)
from .charsets import (
    CofinitePrimeSet, CohomologyData, DegreeGroup, FiniteOrder, InfiniteOrder, TorsionPrimary,
    admissible_characteristics, p_set, q_set, select_characteristic,
)
from .cw import (
    CellStructure, HopfData, cellular_cohomology, excluded_characteristics, min_hopf_invariants,
    spine_power_relation, synthesize_cell_structure,
)
from .errors import AlgebraError, InputError, ResourceError, TCRationalError
from .lambdas import factor_lambda, lambda3, lambda3_closed_form, lambda_nk
from .reports import parse_cohomology_input
from .series import (
    NumeratorPolynomial, TCSequence, generating_polynomial, series_expand, tc_sequence_for_condition1,
)
from .zcl import diagonal_kernel_check, exhaustive_zcl, mu, xi, zcl_witness

__version__ = "0.1.0"
