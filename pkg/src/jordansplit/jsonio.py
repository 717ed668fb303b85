"""JSON encoding of scalars, polynomials and matrices.

* exact rationals are strings ``"p/q"`` (or ``"p"`` for integers);
* floats are JSON numbers, complex values two-element arrays ``[re, im]``;
* polynomials are ``{"order": "ascending", "coeffs": [...]}``.

Decimal literals in the input are read as exact rationals (``0.25`` is
``1/4``), so a document made only of integers, decimals and ``"p/q"``
strings decodes in exact mode; a ``[re, im]`` pair in scalar position
raises ComplexInExactMode, telling the caller to decode in float mode.
"""

import json
from fractions import Fraction
from importlib import resources

import numpy as np
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from .errors import InputError
from .poly import Poly
from .scalar import EXACT

SCHEMA_NAMES = ("definitions", "interpolate", "simdiv", "semisimple", "report")


def _reject_constant(name):
    raise InputError(f"non-finite number {name} is not allowed")


def loads(text):
    """Parse JSON keeping decimal literals exact.  Errors carry line/column."""
    try:
        return json.loads(text, parse_float=Fraction, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _load_schema(name):
    return json.loads(resources.files(__package__).joinpath(f"schemas/{name}.json").read_text())


_registry = None


def validator(name):
    global _registry
    if _registry is None:
        _registry = Registry().with_resources(
            (f"{n}.json", Resource.from_contents(_load_schema(n))) for n in SCHEMA_NAMES)
    return Draft202012Validator(_load_schema(name), registry=_registry)


def validate(doc, name):
    errors = sorted(validator(name).iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        err = errors[0]
        where = "/".join(str(p) for p in err.path) or "<root>"
        raise InputError(f"payload does not match the {name} schema at {where}: {err.message}")


# -- decoding ---------------------------------------------------------------

def _is_pair(x):
    return isinstance(x, list) and len(x) == 2 and all(
        isinstance(v, (int, Fraction)) and not isinstance(v, bool) for v in x)


def raw_scalar(x):
    """JSON value -> int, Fraction or complex (kind not yet fixed)."""
    if isinstance(x, bool):
        raise InputError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, str):
        try:
            return Fraction(x.replace(" ", ""))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational {x!r}") from exc
    if _is_pair(x):
        return complex(float(x[0]), float(x[1]))
    raise InputError(f"not a scalar: {x!r}")


class ComplexInExactMode(InputError):
    """A complex scalar was met while decoding in exact mode."""


def scalar(x, mode):
    v = raw_scalar(x)
    if mode == EXACT:
        if isinstance(v, complex):
            raise ComplexInExactMode(f"complex value {x!r} in exact mode")
        return Fraction(v)
    return complex(v)


def scalars(xs, mode):
    return [scalar(x, mode) for x in xs]


def poly(doc, mode, eps_zero=None):
    if isinstance(doc, dict):
        coeffs = scalars(doc["coeffs"], mode)
        if doc["order"] == "descending":
            coeffs.reverse()
    else:
        coeffs = scalars(doc, mode)
    kw = {} if eps_zero is None else {"eps_zero": eps_zero}
    return Poly(coeffs, kind=mode, **kw)


def matrix(doc, mode):
    rows = [scalars(row, mode) for row in doc]
    if any(len(row) != len(rows) for row in rows):
        raise InputError("matrix must be square")
    if mode == EXACT:
        return np.array(rows, dtype=object)
    return np.array(rows, dtype=np.complex128)


# -- encoding ---------------------------------------------------------------

def encode_scalar(x):
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    if isinstance(x, Fraction):
        return str(x)
    z = complex(x)
    if z.imag == 0:
        return z.real
    return [z.real, z.imag]


def encode_poly(p):
    return {"order": "ascending", "coeffs": [encode_scalar(c) for c in p.coeffs]}


def encode_matrix(M):
    return [[encode_scalar(v) for v in row] for row in np.asarray(M)]


def dumps(doc, pretty=False):
    return json.dumps(doc, indent=2 if pretty else None, allow_nan=False)
