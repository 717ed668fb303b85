"""Simultaneous division by a common separable divisor.

Given a separable ``g`` of degree ``n`` and ``f_0..f_{m-1}``, there is a
single ``r`` of degree ``< m*n`` whose successive derivatives are the
remainders: ``f_i = r^{(i)} + g*q_i``.  ``r`` is the Hermite interpolant on
the roots of ``g`` with uniform multiplicity ``m`` and data ``f_i(root)``.

The matrix generalisation replaces the vector of derivatives by
``P @ [r, r', ..., r^{(m-1)}]`` and the right-hand side by ``E*f`` where
``E = gcd(g, det P)``.
"""

from dataclasses import dataclass
from functools import lru_cache

from .cluster import eigen_cluster
from .errors import (
    DegreeError,
    EmptyProblem,
    ExactModeUnsupported,
    ExactOnly,
    InputError,
    KindMismatch,
    SeparabilityError,
    ShapeError,
    SingularPi,
    ZeroScalar,
)
from .hermite import HermiteProblem, hermite_interpolate
from .poly import Poly, is_separable, numeric_roots, poly_divrem, poly_extended_gcd, rational_roots
from .scalar import EXACT, binomial, coerce

MAX_PI_SIZE = 8


@dataclass(frozen=True)
class SimDivResult:
    r: Poly
    quotients: tuple
    g: Poly
    m: int
    roots: tuple
    residual: float = 0  # largest leftover remainder coefficient (0 in exact mode)


def divisor_roots(g, eps_cluster=None):
    """Distinct roots of a separable ``g``.

    Raises SeparabilityError on a repeated root and, in exact mode,
    ExactModeUnsupported when ``g`` does not split over the rationals.
    """
    if g.degree < 1:
        raise DegreeError("the divisor must be nonconstant")
    if not is_separable(g, eps_cluster):
        raise SeparabilityError(
            "divisor has a repeated root; simultaneous division needs a separable divisor")
    if g.kind == EXACT:
        roots, rest = rational_roots(g)
        if rest.degree > 0:
            raise ExactModeUnsupported(
                "divisor does not split over the rationals; use float mode")
        return tuple(r for r, _ in roots)
    values, _ = eigen_cluster(numeric_roots(g), eps_cluster)
    return tuple(values)


def simultaneous_divide(g, fs, roots=None, eps_cluster=None):
    """Return r, q_0..q_{m-1} with ``f_i = r^{(i)} + g*q_i`` and ``deg r < m*deg g``.

    ``roots`` may be passed when the roots of ``g`` are already known; they
    must be exactly the (distinct) roots of ``g``.
    """
    fs = list(fs)
    if not fs:
        raise EmptyProblem("need at least one dividend")
    for f in fs:
        if f.kind != g.kind:
            raise KindMismatch("dividends and divisor must share a scalar kind")
    if roots is None:
        roots = divisor_roots(g, eps_cluster)
    else:
        roots = tuple(coerce(x, g.kind) for x in roots)
        if g.kind == EXACT and len(set(roots)) != len(roots):
            raise SeparabilityError("divisor has a repeated root")
        if g.kind != EXACT and max(eigen_cluster(roots, eps_cluster)[1]) > 1:
            raise SeparabilityError("divisor has a repeated root")
        if len(roots) != g.degree:
            raise InputError("root list does not match the divisor degree")
    nodes = [(lam, [f(lam) for f in fs]) for lam in roots]
    problem = HermiteProblem(nodes, kind=g.kind, eps_cluster=eps_cluster, eps_zero=g.eps_zero)
    r = hermite_interpolate(problem).r

    quotients = []
    residual = 0
    deriv = r
    for f in fs:
        q, rem = poly_divrem(f - deriv, g)
        if not rem.is_zero():
            if g.kind == EXACT:
                raise ArithmeticError("nonzero remainder in exact simultaneous division")
            residual = max(residual, max(abs(c) for c in rem.coeffs))
        quotients.append(q)
        deriv = deriv.derivative()
    return SimDivResult(r, tuple(quotients), g, len(fs), roots, residual)


def exp_like_divide(f, g, c, m, eps_cluster=None):
    """Simultaneous division of ``f, c*f, ..., c^{m-1}*f`` by ``g``."""
    c = coerce(c, g.kind)
    if c == 0:
        raise ZeroScalar("c must be nonzero")
    if m < 2:
        raise InputError("m must be at least 2")
    return simultaneous_divide(g, [f * c ** i for i in range(m)], eps_cluster=eps_cluster)


def exp_like_remainder(f, g, c, m, eps_cluster=None):
    """The ``r`` of degree ``< m*deg g`` with ``r = f mod g`` and ``g^{m-1} | r' - c*r``."""
    return exp_like_divide(f, g, c, m, eps_cluster).r


# -- matrices over k[x] ---------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ShapeError("polynomial matrix must be square and nonempty")
        kinds = {p.kind for row in rows for p in row}
        if len(kinds) > 1:
            raise KindMismatch("polynomial matrix mixes scalar kinds")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_coeffs(cls, rows, kind=None):
        return cls(tuple(tuple(Poly(c, kind=kind) for c in row) for row in rows))

    @classmethod
    def identity(cls, m, kind=EXACT):
        one, nil = Poly([1], kind=kind), Poly((), kind=kind)
        return cls(tuple(tuple(one if i == j else nil for j in range(m)) for i in range(m)))

    @classmethod
    def diagonal(cls, gs):
        gs = list(gs)
        nil = Poly((), kind=gs[0].kind)
        return cls(tuple(tuple(gs[i] if i == j else nil for j in range(len(gs)))
                         for i in range(len(gs))))

    @property
    def size(self):
        return len(self.entries)

    @property
    def kind(self):
        return self.entries[0][0].kind

    def apply(self, vec):
        """Matrix-vector product with a list of polynomials."""
        vec = list(vec)
        if len(vec) != self.size:
            raise ShapeError("vector length does not match matrix size")
        out = []
        for row in self.entries:
            acc = Poly((), kind=self.kind)
            for p, v in zip(row, vec):
                acc = acc + p * v
            out.append(acc)
        return out

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = Poly((), kind=self.kind)
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return PolyMatrix(tuple(rows))


def _det(entries):
    m = len(entries)
    if m > MAX_PI_SIZE:
        raise ShapeError(f"cofactor expansion is limited to {MAX_PI_SIZE}x{MAX_PI_SIZE}")
    kind = entries[0][0].kind if m else EXACT

    # Laplace expansion along successive rows, memoised on the set of free columns
    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == m:
            return Poly([1], kind=kind)
        acc = Poly((), kind=kind)
        for pos, col in enumerate(cols):
            a = entries[row][col]
            if a.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(0, tuple(range(m)))


def poly_matrix_det(P):
    return _det(P.entries)


def poly_matrix_adjugate(P):
    """Transposed cofactor matrix; ``P @ adj(P) == det(P) * I``."""
    m = P.size
    if m == 1:
        return PolyMatrix(((Poly([1], kind=P.kind),),))
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            # entry (i, j) is the cofactor of (j, i)
            sub = tuple(tuple(P.entries[r][c] for c in range(m) if c != i)
                        for r in range(m) if r != j)
            d = _det(sub)
            row.append(-d if (i + j) % 2 else d)
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))


def generalized_divide(P, g, fs, eps_cluster=None):
    """Return ``(r, E)`` with ``P @ [r, r', ...] == E * f (mod g)`` componentwise.

    ``E = gcd(g, det P)`` (monic).  Exact mode only.
    """
    fs = list(fs)
    if P.kind != EXACT or g.kind != EXACT or any(f.kind != EXACT for f in fs):
        raise ExactOnly("the matrix-weighted division needs exact polynomials")
    if len(fs) != P.size:
        raise ShapeError("number of dividends must equal the matrix size")
    roots = divisor_roots(g, eps_cluster)
    det = poly_matrix_det(P)
    if det.is_zero():
        raise SingularPi("det(P) is the zero polynomial")
    E, H, _G = poly_extended_gcd(det, g)
    adj = poly_matrix_adjugate(P)
    hs = [(H * h) % g for h in adj.apply(fs)]
    r = simultaneous_divide(g, hs, roots=roots).r
    return r, E


def generalized_quotients(P, g, fs, r, E):
    """Quotients ``q_i`` with ``(P @ [r, ..., r^{(m-1)}])_i - E*f_i = g*q_i``.

    Raises ArithmeticError if some component is not divisible by ``g``.
    """
    derivs = [r.derivative(i) for i in range(P.size)]
    out = []
    for lhs, f in zip(P.apply(derivs), fs):
        q, rem = poly_divrem(lhs - E * f, g)
        if not rem.is_zero():
            raise ArithmeticError("component not divisible by g")
        out.append(q)
    return tuple(out)


def leibniz_pi(gs):
    """Lower-triangular matrix with entry ``(i, j) = C(i, j) * g_i^{(i-j)}``.

    Applied to ``[r, r', ...]`` its i-th component is ``(g_i * r)^{(i)}``.
    """
    gs = list(gs)
    if not gs:
        raise EmptyProblem("need at least one polynomial")
    kind = gs[0].kind
    m = len(gs)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            if j <= i:
                row.append(gs[i].derivative(i - j) * binomial(i, j, kind))
            else:
                row.append(Poly((), kind=kind))
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows))
