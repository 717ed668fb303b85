"""Scalar kinds.

Two fields are supported: exact rationals (``fractions.Fraction``) and
complex doubles (``complex``).  Plain Python ``int`` values are accepted
everywhere and take on the kind of whatever they are combined with.
"""

from fractions import Fraction
from numbers import Integral, Number

from .errors import KindMismatch

EXACT = "exact"
FLOAT = "float"

DEFAULT_EPS_ZERO = 1e-10


def scalar_kind(x):
    """Return ``EXACT``, ``FLOAT`` or ``None`` (for integers, which fit both)."""
    if isinstance(x, bool):
        raise KindMismatch("booleans are not scalars")
    if isinstance(x, Integral):
        return None
    if isinstance(x, Fraction):
        return EXACT
    if isinstance(x, Number):
        return FLOAT
    raise KindMismatch(f"not a scalar: {x!r}")


def common_kind(values, default=EXACT):
    kind = None
    for v in values:
        k = scalar_kind(v)
        if k is None:
            continue
        if kind is None:
            kind = k
        elif k != kind:
            raise KindMismatch("exact and floating scalars mixed")
    return kind if kind is not None else default


def coerce(x, kind):
    """Convert ``x`` to ``kind``; raises KindMismatch on Fraction<->float."""
    k = scalar_kind(x)
    if k is not None and k != kind:
        raise KindMismatch(f"{k} scalar {x!r} used where {kind} expected")
    if kind == EXACT:
        return Fraction(x)
    return complex(x)


def zero(kind):
    return Fraction(0) if kind == EXACT else 0j


def one(kind):
    return Fraction(1) if kind == EXACT else 1 + 0j


def factorial(i, kind):
    from math import factorial as _fact
    if kind == EXACT:
        return Fraction(_fact(i))
    return complex(float(_fact(i)))


def binomial(n, k, kind):
    from math import comb
    if kind == EXACT:
        return Fraction(comb(n, k))
    return complex(float(comb(n, k)))
