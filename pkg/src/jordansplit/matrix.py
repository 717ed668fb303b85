"""Dense square matrices over either scalar kind.

Exact matrices are numpy arrays of ``dtype=object`` holding Fractions,
float matrices are ``complex128`` arrays.  numpy's matmul handles both.
"""

from fractions import Fraction

import numpy as np

from .errors import KindMismatch, ShapeError
from .scalar import EXACT, FLOAT, common_kind, coerce


def matrix_kind(A):
    A = np.asarray(A)
    if A.dtype == object:
        return common_kind(A.ravel())
    if np.issubdtype(A.dtype, np.integer):
        return EXACT
    if np.issubdtype(A.dtype, np.number):
        return FLOAT
    raise KindMismatch(f"unsupported matrix dtype {A.dtype}")


def as_matrix(A, kind=None, square=True):
    """Return ``A`` as an array of the requested kind (inferred if None)."""
    if isinstance(A, np.ndarray) and A.dtype != object:
        arr = A
    else:
        arr = np.array(A, dtype=object)
    if arr.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {arr.shape}")
    if square and arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    if kind is None:
        kind = matrix_kind(arr)
    if kind == EXACT:
        if arr.dtype != object:
            if not np.issubdtype(arr.dtype, np.integer):
                raise KindMismatch("floating matrix used where exact expected")
            arr = arr.astype(object)
        out = np.empty(arr.shape, dtype=object)
        for idx, v in np.ndenumerate(arr):
            out[idx] = coerce(v, EXACT)
        return out
    if arr.dtype == object:
        for v in arr.ravel():
            coerce(v, FLOAT)
    return arr.astype(np.complex128)


def identity(n, kind):
    if kind == EXACT:
        out = np.full((n, n), Fraction(0), dtype=object)
        for i in range(n):
            out[i, i] = Fraction(1)
        return out
    return np.eye(n, dtype=np.complex128)


def zeros(n, kind):
    if kind == EXACT:
        return np.full((n, n), Fraction(0), dtype=object)
    return np.zeros((n, n), dtype=np.complex128)


def matrix_power(A, k):
    kind = matrix_kind(A)
    out = identity(A.shape[0], kind)
    for _ in range(k):
        out = out @ A
    return out


def max_abs(M):
    """Max-abs-entry norm; exact for Fraction matrices."""
    M = np.asarray(M)
    if M.size == 0:
        return 0
    if M.dtype == object:
        return max(abs(v) for v in M.ravel())
    return float(np.max(np.abs(M)))


def is_zero_matrix(M):
    M = np.asarray(M)
    return all(v == 0 for v in M.ravel())
