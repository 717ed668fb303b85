"""Semisimple/nilpotent splitting of a square matrix as a polynomial in it.

With distinct eigenvalues ``lam_j`` and ``m`` at least the nilpotency index
of the nilpotent part, ``S = r(A)`` where ``r`` is the Hermite interpolant
with ``r(lam_j) = lam_j`` and ``r^{(i)}(lam_j) = 0`` for ``0 < i < m``.

``m`` is taken as the largest algebraic multiplicity, which bounds every
Jordan block size, so no Jordan form is computed.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cluster import default_eps_cluster, eigen_cluster, min_separation
from .errors import (
    ClusterInstability,
    ExactModeUnsupported,
    InputError,
    ShapeError,
    VerificationError,
)
from .hermite import HermiteProblem, hermite_interpolate
from .matrix import as_matrix, identity, matrix_kind, matrix_power, max_abs
from .poly import Poly, poly_eval_matrix, rational_roots
from .scalar import DEFAULT_EPS_ZERO, EXACT, FLOAT

__all__ = [
    "Config",
    "DecompositionResult",
    "Residuals",
    "SpectrumInfo",
    "char_poly",
    "eigen_cluster",
    "semisimple_part",
    "spectrum",
    "verify_decomposition",
]


@dataclass(frozen=True)
class Config:
    mode: str = None  # "exact", "float" or None to follow the input
    eps_cluster: float = None
    eps_zero: float = DEFAULT_EPS_ZERO
    tol_verify: float = None
    strict: bool = False


@dataclass(frozen=True)
class SpectrumInfo:
    distinct_eigenvalues: tuple
    multiplicities: tuple
    m: int
    char_poly: Poly
    eps_cluster: float = None


@dataclass(frozen=True)
class Residuals:
    nilpotency: object
    reconstruction: object
    commutation: object

    def as_dict(self):
        return {"nilpotency": self.nilpotency, "reconstruction": self.reconstruction,
                "commutation": self.commutation}


@dataclass(frozen=True)
class DecompositionResult:
    S: np.ndarray
    N: np.ndarray
    r: Poly
    spectrum: SpectrumInfo
    residuals: Residuals
    mode: str
    interpolant: object = field(repr=False, default=None)
    tol_verify: float = 0
    warnings: tuple = ()


def _resolve(A, mode):
    if isinstance(A, np.ndarray) and A.dtype != object:
        raw = A
    else:
        raw = np.array(A, dtype=object)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {raw.shape}")
    if mode is None:
        mode = matrix_kind(raw)
    if mode == EXACT:
        return as_matrix(raw, EXACT), EXACT
    if mode == FLOAT:
        if raw.dtype == object:
            raw = np.array([[complex(v) for v in row] for row in raw], dtype=np.complex128)
        return raw.astype(np.complex128), FLOAT
    raise InputError(f"unknown mode {mode!r}")


def char_poly(A, mode=None):
    """Monic ``det(xI - A)``.

    Exact matrices use the Faddeev-LeVerrier recursion; float matrices are
    expanded from the eigenvalues of a dense eigensolver.
    """
    A, mode = _resolve(A, mode)
    n = A.shape[0]
    if mode == FLOAT:
        return Poly.from_roots(np.linalg.eigvals(A), kind=FLOAT)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    eye = identity(n, EXACT)
    M = eye * Fraction(0)
    for k in range(1, n + 1):
        M = A @ M + eye * coeffs[n - k + 1]
        AM = A @ M
        coeffs[n - k] = -sum(AM[i, i] for i in range(n)) / k
    return Poly(coeffs, kind=EXACT)


def spectrum(A, config=Config()):
    """Distinct eigenvalues, algebraic multiplicities and the characteristic polynomial."""
    A, mode = _resolve(A, config.mode)
    if mode == EXACT:
        p = char_poly(A, EXACT)
        roots, rest = rational_roots(p)
        if rest.degree > 0:
            raise ExactModeUnsupported(
                "characteristic polynomial does not split over the rationals; use float mode")
        values = tuple(r for r, _ in roots)
        mults = tuple(k for _, k in roots)
        return SpectrumInfo(values, mults, max(mults), p)
    eigs = np.linalg.eigvals(A)
    eps = config.eps_cluster
    if eps is None:
        eps = default_eps_cluster(list(eigs) + [max_abs(A)])
    values, mults = eigen_cluster(eigs, eps)
    p = Poly.from_roots(eigs, kind=FLOAT)
    return SpectrumInfo(tuple(values), tuple(mults), max(mults), p, eps)


def verify_decomposition(A, S, N, m):
    """Max-abs-entry norms of ``N**m``, ``A - S - N`` and ``S@N - N@S``."""
    A, S, N = (np.asarray(X) for X in (A, S, N))
    if not (A.shape == S.shape == N.shape) or A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError("A, S and N must be square matrices of the same order")
    return Residuals(
        nilpotency=max_abs(matrix_power(N, m)),
        reconstruction=max_abs(A - S - N),
        commutation=max_abs(S @ N - N @ S),
    )


def semisimple_part(A, config=Config(), m=None):
    """Split ``A = S + N`` with ``S`` semisimple, ``N`` nilpotent, both polynomials in ``A``.

    ``m`` overrides the interpolation multiplicity; any value at least the
    largest Jordan block size gives the same ``S``.
    """
    A, mode = _resolve(A, config.mode)
    info = spectrum(A, Config(mode, config.eps_cluster, config.eps_zero))
    warnings = []
    hermite_eps = info.eps_cluster
    if mode == FLOAT and min_separation(info.distinct_eigenvalues) <= 10 * info.eps_cluster:
        msg = (f"eigenvalue clusters closer than 10*eps_cluster = {10 * info.eps_cluster:g}; "
               "multiplicities may be wrong")
        if config.strict:
            raise ClusterInstability(msg)
        warnings.append("ClusterInstability: " + msg)
        hermite_eps = 0.0
    if m is None:
        m = info.m
    elif m < 1:
        raise InputError("m must be positive")
    info = SpectrumInfo(info.distinct_eigenvalues, info.multiplicities, m,
                        info.char_poly, info.eps_cluster)

    problem = HermiteProblem(
        [(lam, [lam] + [0] * (m - 1)) for lam in info.distinct_eigenvalues],
        kind=mode, eps_cluster=hermite_eps, eps_zero=config.eps_zero)
    interp = hermite_interpolate(problem)
    S = poly_eval_matrix(interp.r, A)
    if mode == FLOAT and not np.any(A.imag):
        # real input: exact S is real, imaginary parts are rounding noise
        S = S.real.astype(np.complex128)
    N = A - S
    res = verify_decomposition(A, S, N, m)

    if mode == EXACT:
        tol = 0
    else:
        tol = config.tol_verify
        if tol is None:
            tol = 1e-8 * max_abs(A) ** m
    if res.nilpotency > tol or res.reconstruction > tol or res.commutation > tol:
        msg = f"verification residuals {res.as_dict()} exceed tol_verify = {tol}"
        if config.strict:
            raise VerificationError(msg)
        warnings.append("VerificationFailed: " + msg)
    return DecompositionResult(S, N, interp.r, info, res, mode, interp, tol, tuple(warnings))

