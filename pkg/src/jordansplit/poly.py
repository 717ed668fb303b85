"""Dense univariate polynomials over exact rationals or complex doubles.

A polynomial is stored as a tuple of coefficients in ascending degree,
``(a_0, a_1, ..., a_n)``, with no trailing zero.  The zero polynomial is
the empty tuple and has degree ``ZERO_DEGREE`` (negative infinity), so
comparisons such as ``r.degree < g.degree`` work without special cases.

In float mode a trailing coefficient counts as zero when its modulus is at
most ``eps_zero`` times the largest coefficient modulus.
"""

from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

from .errors import (
    DegreeError,
    DivisionByZeroPoly,
    ExactOnly,
    KindMismatch,
    UndefinedGcd,
)
from .matrix import as_matrix, identity
from .scalar import DEFAULT_EPS_ZERO, EXACT, FLOAT, coerce, common_kind, zero

ZERO_DEGREE = float("-inf")


class Poly:
    """Immutable dense polynomial.

    >>> Poly([-1, 0, 1]) // Poly([-1, 1])
    Poly([1, 1])
    """

    __slots__ = ("coeffs", "kind", "eps_zero")

    def __init__(self, coeffs=(), kind=None, eps_zero=DEFAULT_EPS_ZERO):
        coeffs = tuple(coeffs)
        if kind is None:
            kind = common_kind(coeffs)
        coeffs = [coerce(c, kind) for c in coeffs]
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "eps_zero", eps_zero)
        object.__setattr__(self, "coeffs", _normalize(coeffs, kind, eps_zero))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c, kind=None):
        return cls([c], kind=kind)

    @classmethod
    def x(cls, kind=EXACT):
        return cls([0, 1], kind=kind)

    @classmethod
    def from_roots(cls, roots, kind=None):
        """Monic polynomial prod (x - root)."""
        roots = list(roots)
        if kind is None:
            kind = common_kind(roots)
        p = cls([1], kind=kind)
        for a in roots:
            p = p * cls([-coerce(a, kind), 1], kind=kind)
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else zero(self.kind)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else zero(self.kind)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.kind == other.kind and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, float, complex)):
            return self.coeffs == _normalize([other], self.kind, self.eps_zero)
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, self.coeffs))

    def __repr__(self):
        return f"Poly({_fmt_list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.kind != self.kind:
                raise KindMismatch(f"{self.kind} and {other.kind} polynomials mixed")
            return other
        return Poly([other], kind=self.kind, eps_zero=self.eps_zero)

    def _new(self, coeffs):
        return Poly(coeffs, kind=self.kind, eps_zero=self.eps_zero)

    def __add__(self, other):
        return poly_add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        return poly_add(self, -self._lift(other))

    def __rsub__(self, other):
        return poly_add(self._lift(other), -self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, self._lift(other))
        c = coerce(other, self.kind)
        return self._new([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return NotImplemented
        c = coerce(other, self.kind)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return self._new([a / c for a in self.coeffs])

    def __pow__(self, n):
        return poly_pow(self, n)

    def __divmod__(self, other):
        return poly_divrem(self, self._lift(other))

    def __floordiv__(self, other):
        return poly_divrem(self, self._lift(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, self._lift(other))[1]

    def __call__(self, x):
        return poly_eval(self, x)

    def derivative(self, order=1):
        p = self
        for _ in range(order):
            p = poly_derivative(p)
        return p

    def monic(self):
        if not self.coeffs:
            return self
        return self / self.lead

    def with_kind(self, kind):
        """Change scalar kind; exact -> float is lossy, float -> exact is refused."""
        if kind == self.kind:
            return self
        if kind == FLOAT:
            return Poly([complex(float(c)) for c in self.coeffs], kind=FLOAT, eps_zero=self.eps_zero)
        raise KindMismatch("cannot convert floating polynomial to exact")


def _normalize(coeffs, kind, eps_zero):
    coeffs = list(coeffs)
    if kind == EXACT:
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)
    if not coeffs:
        return ()
    scale = max(abs(c) for c in coeffs)
    if scale == 0:
        return ()
    cut = eps_zero * scale
    while coeffs and abs(coeffs[-1]) <= cut:
        coeffs.pop()
    return tuple(coeffs)


def _fmt_list(cs):
    return "[" + ", ".join(str(c) for c in cs) + "]"


def _check(a, b):
    if a.kind != b.kind:
        raise KindMismatch(f"{a.kind} and {b.kind} polynomials mixed")


def poly_add(a, b):
    _check(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return Poly([a[i] + b[i] for i in range(n)], kind=a.kind, eps_zero=a.eps_zero)


def poly_mul(a, b):
    _check(a, b)
    if not a.coeffs or not b.coeffs:
        return Poly((), kind=a.kind, eps_zero=a.eps_zero)
    out = [zero(a.kind)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j, bj in enumerate(b.coeffs):
            out[i + j] += ai * bj
    return Poly(out, kind=a.kind, eps_zero=a.eps_zero)


def poly_pow(p, n):
    if n < 0:
        raise ValueError("negative exponent")
    result = Poly([1], kind=p.kind, eps_zero=p.eps_zero)
    base = p
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def poly_derivative(p):
    return Poly([i * c for i, c in enumerate(p.coeffs)][1:], kind=p.kind, eps_zero=p.eps_zero)


def poly_eval(p, x):
    x = coerce(x, p.kind)
    acc = zero(p.kind)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_eval_matrix(p, A):
    """Evaluate ``p`` at the square matrix ``A`` by Horner's scheme."""
    arr = as_matrix(A, kind=p.kind)
    n = arr.shape[0]
    eye = identity(n, p.kind)
    acc = eye * zero(p.kind)
    for c in reversed(p.coeffs):
        acc = acc @ arr + eye * c
    return acc


def poly_divrem(f, g):
    """Euclidean division: ``f = q*g + r`` with ``deg r < deg g``."""
    _check(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    kind = f.kind
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead = g.coeffs[-1]
    if len(rem) - 1 < dg:
        return Poly((), kind=kind, eps_zero=f.eps_zero), f
    quot = [zero(kind)] * (len(rem) - dg)
    for k in range(len(rem) - 1 - dg, -1, -1):
        c = rem[k + dg] / lead
        quot[k] = c
        if c != 0:
            for j, gj in enumerate(g.coeffs):
                rem[k + j] -= c * gj
        # the cancelled leading term must vanish exactly, even in float mode
        rem[k + dg] = zero(kind)
    return (Poly(quot, kind=kind, eps_zero=f.eps_zero),
            Poly(rem[:dg], kind=kind, eps_zero=f.eps_zero))


def poly_extended_gcd(a, b):
    """Return ``(d, u, v)`` with ``d`` monic, ``d = gcd(a, b)`` and ``u*a + v*b = d``.

    Exact scalars only.
    """
    _check(a, b)
    if a.kind != EXACT:
        raise ExactOnly("extended gcd is only available for exact polynomials")
    if a.is_zero() and b.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    kind = a.kind
    r0, r1 = a, b
    s0, s1 = Poly([1], kind=kind), Poly((), kind=kind)
    t0, t1 = Poly((), kind=kind), Poly([1], kind=kind)
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lead
    return r0 / lc, s0 / lc, t0 / lc


def poly_gcd(a, b):
    return poly_extended_gcd(a, b)[0]


def is_separable(g, eps_cluster=None):
    """True iff ``g`` has no repeated root.

    Exact mode tests ``gcd(g, g')``; float mode clusters the numerical roots.
    """
    if g.degree < 1:
        raise DegreeError("separability is only defined for nonconstant polynomials")
    if g.kind == EXACT:
        return poly_gcd(g, g.derivative()).degree == 0
    from .cluster import eigen_cluster
    _, mult = eigen_cluster(numeric_roots(g), eps_cluster)
    return all(k == 1 for k in mult)


# -- root finding ---------------------------------------------------------

def numeric_roots(p):
    """All complex roots of a float-kind (or exact) polynomial, via numpy."""
    if p.degree < 1:
        return []
    coeffs = [complex(c) for c in reversed(p.coeffs)]
    return [complex(z) for z in np.roots(coeffs)]


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def primitive_integer_coeffs(p):
    """Integer coefficients of a scalar multiple of exact ``p`` with content 1."""
    if p.kind != EXACT:
        raise ExactOnly("integer form requires exact coefficients")
    den = lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1
    ints = [int(c * den) for c in p.coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def rational_roots(p):
    """Rational roots of exact ``p`` with multiplicities, in ascending order.

    Returns ``(roots, cofactor)`` where ``roots`` is a list of
    ``(root, multiplicity)`` and ``cofactor`` is what remains of ``p`` once
    all rational linear factors are divided out (a constant iff ``p``
    splits over the rationals).
    """
    if p.kind != EXACT:
        raise ExactOnly("rational root search requires exact coefficients")
    if p.is_zero():
        raise DegreeError("the zero polynomial has no finite root set")
    found = []
    rest = p
    mult0 = 0
    while rest.degree >= 1 and rest.coeffs[0] == 0:
        rest = Poly(rest.coeffs[1:], kind=EXACT)
        mult0 += 1
    if mult0:
        found.append((Fraction(0), mult0))
    if rest.degree >= 1:
        ints = primitive_integer_coeffs(rest)
        candidates = set()
        for a in _divisors(ints[0]):
            for b in _divisors(ints[-1]):
                candidates.add(Fraction(a, b))
                candidates.add(Fraction(-a, b))
        for c in sorted(candidates):
            if rest.degree < 1:
                break
            k = 0
            lin = Poly([-c, 1], kind=EXACT)
            while rest.degree >= 1 and rest(c) == 0:
                rest = poly_divrem(rest, lin)[0]
                k += 1
            if k:
                found.append((c, k))
    found.sort()
    return found, rest
