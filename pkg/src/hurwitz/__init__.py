"""Exact arithmetic in rings of Hurwitz series."""

from .calculus import (
    EgfSeries,
    cos_series,
    divided_power,
    divided_powers,
    exp,
    exp_derivative_law,
    exp_inverse_law,
    from_egf,
    sin_series,
    to_egf,
)
from .errors import (
    CapabilityError,
    ConfigError,
    DomainError,
    HurwitzError,
    NotASolutionError,
    NotInvertibleError,
    PrecisionError,
    RingMismatchError,
)
from .interlace import (
    IndexDecomposition,
    InterlaceTuple,
    binom_seq,
    derive_interlaced,
    hadamard_tuple,
    idx_decompose,
    integrate_interlaced,
    intl,
    mul_basis_intl,
    mul_series_intl,
    tau_seq,
    unl,
)
from .ode import (
    LinearODE,
    MatrixPair,
    build_LU,
    check_matrix_equiv,
    general_solution,
    reduction_factor,
    reduction_factor_closed_form,
    residual,
    second_solution,
    solve,
    solve_basis,
)
from .rings import QQ, ZZ, Elem, Ring, integers_mod
from .series import (
    HSeries,
    Order,
    SeriesClass,
    add,
    basis,
    classify,
    derive,
    eps,
    hadamard,
    integrate,
    invert,
    mul,
    ord,
    scalar_mul,
)

__version__ = "0.1.0"
