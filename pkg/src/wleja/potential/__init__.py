from .equilibrium import (
    EquilibriumMeasure,
    energy,
    equilibrium_density,
    equilibrium_measure,
    log_potential,
    robin_constant,
    density_profile,
    variational_deviation,
)
from .diagnostics import (
    DEFAULT_DELTAS,
    cdf_distance,
    denominator_value,
    discrete_log_polynomial_identity_check,
    fekete_functional,
    numerator_limit,
    split_products,
)
