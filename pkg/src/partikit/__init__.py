"""Exact restricted partition functions, quasi-polynomials and Fourier-Dedekind sums."""

__version__ = "0.1.0"

from .cyclotomic import CycField, CycNum, cyc_field, cyc_inv, cyclotomic_poly, rational_part
from .errors import (
    DomainError,
    InternalConsistencyError,
    InvalidWeightsError,
    NotRationalError,
    PartikitError,
    PreconditionError,
)
from .exact import Rat, RationalPoly, binom_count, binom_poly_shifted, lcm_vec, rat_str
from .fdsums import FDSumSpec, decomposition_check, decomposition_table, fd_residue_average, fd_sum
from .partition import (
    QuasiPolynomial,
    WeightSystem,
    box_count,
    constituent,
    dp_count,
    new_weight_system,
    numerator_poly,
    poly_part_closed_r2,
    polynomial_part,
    polynomial_part_via_average,
    quasi_build,
    quasi_eval,
)
