"""Weighted Leja sequences for Freud weights exp(-|x|^alpha): generation,
Lebesgue constants, equilibrium-measure diagnostics and node spacing."""

__version__ = "0.1.0"

from .errors import BoundaryMaximizerError, ConfigurationError, DomainError, NumericalError, WlejaError
from .interp import (
    BasisPrecompute,
    LebesgueReport,
    interpolate,
    interpolation_error_study,
    lebesgue_constant,
    lebesgue_function,
    precompute_basis,
)
from .leja import (
    ContractedNodeSet,
    DiscreteMeasure,
    LejaSequence,
    SolverSettings,
    contract,
    empirical_measure,
    generate_sequence,
    generate_unweighted,
    next_leja_point,
)
from .weights import (
    FreudWeight,
    contraction_factor,
    external_field,
    mrs_number,
    mrs_number_quadrature,
    phi_n,
    phi_n_symmetric,
    weight_value,
)
