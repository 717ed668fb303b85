"""Brute-force reference computations used only by the tests.

They go through sympy so that no code path is shared with the package.
"""

from fractions import Fraction
from math import factorial

import sympy as sp

X = sp.Symbol("x")


def to_fraction(v):
    v = sp.Rational(v)
    return Fraction(int(v.p), int(v.q))


def sympy_poly(coeffs):
    return sum((sp.Rational(c.numerator, c.denominator) * X ** k for k, c in enumerate(coeffs)),
               sp.Integer(0))


def coeffs_of(expr):
    """Ascending Fraction coefficients of a sympy polynomial expression."""
    expr = sp.expand(expr)
    if expr == 0:
        return []
    poly = sp.Poly(expr, X)
    out = [to_fraction(c) for c in reversed(poly.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return out


def confluent_vandermonde(nodes):
    """Solve for the coefficients of the Hermite interpolant.

    ``nodes`` is ``[(lam, [a_0, a_1, ...]), ...]``; the unknowns are the
    ``M = sum m_j`` monomial coefficients and row ``(i, j)`` states
    ``r^{(i)}(lam_j) = a_ij``.
    """
    M = sum(len(vals) for _, vals in nodes)
    rows, rhs = [], []
    for lam, vals in nodes:
        lam = sp.Rational(lam.numerator, lam.denominator)
        for i, a in enumerate(vals):
            row = [sp.Integer(0) if k < i else
                   sp.Integer(factorial(k) // factorial(k - i)) * lam ** (k - i)
                   for k in range(M)]
            rows.append(row)
            rhs.append(sp.Rational(a.numerator, a.denominator))
    sol = sp.Matrix(rows).LUsolve(sp.Matrix(rhs))
    out = [to_fraction(v) for v in sol]
    while out and out[-1] == 0:
        out.pop()
    return out


def lagrange_interpolant(points):
    """Classical Lagrange polynomial through ``[(x, y), ...]``."""
    expr = sp.Integer(0)
    for k, (xk, yk) in enumerate(points):
        term = sp.Rational(yk.numerator, yk.denominator)
        for i, (xi, _) in enumerate(points):
            if i != k:
                xi_ = sp.Rational(xi.numerator, xi.denominator)
                xk_ = sp.Rational(xk.numerator, xk.denominator)
                term *= (X - xi_) / (xk_ - xi_)
        expr += term
    return coeffs_of(expr)


def charpoly_sympy(A):
    """Ascending coefficients of det(xI - A) via sympy's Berkowitz method."""
    M = sp.Matrix([[sp.Rational(v.numerator, v.denominator) for v in row] for row in A])
    return coeffs_of(M.charpoly(X).as_expr())


def cofactor_det(A):
    """Determinant by recursive cofactor expansion (plain Fractions)."""
    n = len(A)
    if n == 1:
        return Fraction(A[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        total += (-1) ** j * Fraction(A[0][j]) * cofactor_det(minor)
    return total


def finite_difference_derivative(f, x, h=1e-5):
    """Central difference, for float-mode sanity checks."""
    return (f(x + h) - f(x - h)) / (2 * h)


def derivative_at(expr, order, x0):
    """``expr^{(order)}(x0)`` for a polynomial expression, as a Fraction."""
    p = sp.Poly(sp.expand(expr), X)
    for _ in range(order):
        p = p.diff(X)
    return to_fraction(p.eval(sp.Rational(x0.numerator, x0.denominator)))
