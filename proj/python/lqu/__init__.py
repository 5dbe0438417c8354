"""Local quantum uncertainty for N-qubit density matrices."""

from ._core import (
    LquError,
    LquReport,
    CorrelationMatrix3,
    analytic,
    families,
    format_density_matrix,
    hermitian_eig,
    kay_state,
    kron,
    local_observable,
    lqu_all,
    lqu_bipartition,
    lqu_variational,
    m_matrix,
    make_state,
    matrix_sqrt_psd,
    mix_white_noise,
    parse_density_matrix,
    pure_state,
    random_pure,
    skew_information,
    sweep_csv,
    trace_product,
    validate,
)

__all__ = [
    "LquError",
    "LquReport",
    "CorrelationMatrix3",
    "analytic",
    "families",
    "format_density_matrix",
    "hermitian_eig",
    "kay_state",
    "kron",
    "local_observable",
    "lqu_all",
    "lqu_bipartition",
    "lqu_variational",
    "m_matrix",
    "make_state",
    "matrix_sqrt_psd",
    "mix_white_noise",
    "parse_density_matrix",
    "pure_state",
    "random_pure",
    "skew_information",
    "sweep_csv",
    "trace_product",
    "validate",
]
