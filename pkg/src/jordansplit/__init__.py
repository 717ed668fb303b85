"""Hermite interpolation with polynomial-only derivatives, simultaneous
division by a separable polynomial, and the semisimple/nilpotent splitting
of a square matrix, over exact rationals or complex doubles."""

from .errors import (
    ClusterInstability,
    DegreeError,
    DivisionByZeroPoly,
    EmptyProblem,
    ExactModeUnsupported,
    ExactOnly,
    FactorialRange,
    InputError,
    JordanSplitError,
    KindMismatch,
    NodeCollision,
    SeparabilityError,
    ShapeError,
    SingularPi,
    UndefinedGcd,
    VerificationError,
    ZeroScalar,
)
from .hermite import (
    HermiteInterpolant,
    HermiteProblem,
    LambdaMatrix,
    basis_derivative_table,
    hermite_interpolate,
    lagrange_basis,
    lambda_inverse,
    lambda_inverse_neumann,
    lambda_matrix,
)
from .poly import (
    Poly,
    is_separable,
    poly_add,
    poly_derivative,
    poly_divrem,
    poly_eval,
    poly_eval_matrix,
    poly_extended_gcd,
    poly_mul,
    poly_pow,
    rational_roots,
)
from .simdiv import (
    PolyMatrix,
    SimDivResult,
    exp_like_remainder,
    generalized_divide,
    leibniz_pi,
    poly_matrix_adjugate,
    poly_matrix_det,
    simultaneous_divide,
)
from .spectral import (
    Config,
    DecompositionResult,
    SpectrumInfo,
    char_poly,
    eigen_cluster,
    semisimple_part,
    verify_decomposition,
)

__version__ = "0.1.0"
