from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import exact_polys, small_fractions
from jordansplit import (
    DegreeError,
    DivisionByZeroPoly,
    ExactOnly,
    KindMismatch,
    Poly,
    ShapeError,
    UndefinedGcd,
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
from jordansplit.poly import ZERO_DEGREE
from oracles import charpoly_sympy

x = Poly([0, 1])


def P(*cs):
    return Poly(cs)


class TestConstruction:
    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)

    def test_zero_polynomial(self):
        z = Poly([0, 0])
        assert z.coeffs == ()
        assert z.degree == ZERO_DEGREE
        assert z.degree < 0 and not isinstance(z.degree, int)

    def test_kinds(self):
        assert P(1, 2).kind == "exact"
        assert Poly([1.0, 2]).kind == "float"
        assert isinstance(P(1, 2)[0], F)
        with pytest.raises(KindMismatch):
            Poly([F(1, 2), 0.5])

    def test_float_normalization_is_relative(self):
        p = Poly([1.0, 2.0, 1e-12])
        assert p.degree == 1
        # a small polynomial keeps its small leading coefficient
        q = Poly([1e-14, 1e-13])
        assert q.degree == 1

    def test_immutable(self):
        with pytest.raises(AttributeError):
            P(1).coeffs = ()

    @given(exact_polys())
    def test_renormalization_idempotent(self, p):
        assert Poly(p.coeffs, kind=p.kind) == p

    @given(st.lists(st.floats(-1e6, 1e6), max_size=6))
    def test_float_renormalization_idempotent(self, cs):
        p = Poly(cs, kind="float")
        assert Poly(p.coeffs, kind="float").coeffs == p.coeffs


class TestArithmetic:
    def test_add_cancellation(self):
        assert poly_add(P(1, 1), P(0, -1)) == P(1)

    def test_add_identity(self):
        p = P(3, 0, 2)
        assert poly_add(Poly(), p) == p

    def test_add(self):
        assert poly_add(P(0, 0, 1), P(0, 1)) == P(0, 1, 1)

    def test_mixed_kinds_rejected(self):
        with pytest.raises(KindMismatch):
            poly_add(P(1), Poly([1.0]))
        with pytest.raises(KindMismatch):
            poly_mul(P(1), Poly([1.0]))
        with pytest.raises(KindMismatch):
            poly_eval(P(1, 1), 0.5)

    def test_mul(self):
        assert poly_mul(P(-1, 1), P(1, 1)) == P(-1, 0, 1)
        assert poly_mul(P(1, 2, 3), Poly()) == Poly()

    def test_mul_scaled_square(self):
        p = poly_mul(P(-11, 1), P(-11, 1)) / 100
        assert p == P(F(121, 100), F(-11, 50), F(1, 100))

    def test_pow(self):
        assert poly_pow(P(-1, 1), 2) == P(1, -2, 1)
        p = P(2, 3)
        assert poly_pow(p, 0) == P(1)
        assert poly_pow(p, 1) == p

    def test_derivative(self):
        assert poly_derivative(P(0, 0, 0, 1)) == P(0, 0, 3)
        assert poly_derivative(P(5)) == Poly()
        assert poly_derivative(Poly()) == Poly()

    def test_derivative_of_scaled_square_at_one(self):
        L0 = (x - 11) ** 2 / 100
        assert poly_eval(poly_derivative(L0), 1) == F(-1, 5)

    def test_eval(self):
        assert poly_eval(P(-1, 0, 1), 1) == 0
        assert poly_eval(Poly(), 7) == 0
        assert poly_eval((x - 11) ** 2 / 100, 1) == 1

    @given(exact_polys(), exact_polys())
    def test_leibniz(self, a, b):
        lhs = poly_derivative(poly_mul(a, b))
        rhs = poly_add(poly_mul(poly_derivative(a), b), poly_mul(a, poly_derivative(b)))
        assert lhs == rhs


class TestMatrixEvaluation:
    A = [[3, 4, 3], [2, 7, 4], [-4, 8, 3]]

    def test_identity_polynomial(self):
        out = poly_eval_matrix(x, self.A)
        assert out.tolist() == self.A

    def test_constant(self):
        out = poly_eval_matrix(P(1), self.A)
        assert out.tolist() == np.eye(3, dtype=int).tolist()

    def test_cayley_hamilton_example(self):
        # characteristic polynomial from the independent oracle
        cp = Poly(charpoly_sympy(self.A))
        assert cp == P(-11, 23, -13, 1)
        assert all(v == 0 for v in poly_eval_matrix(cp, self.A).ravel())

    def test_non_square(self):
        with pytest.raises(ShapeError):
            poly_eval_matrix(x, [[1, 2, 3], [4, 5, 6]])

    def test_kind_mismatch(self):
        with pytest.raises(KindMismatch):
            poly_eval_matrix(P(1, 1), np.eye(2))

    def test_float(self):
        A = np.array([[1.0, 2.0], [0.0, 3.0]])
        out = poly_eval_matrix(Poly([1.0, 0, 1.0]), A)
        assert np.allclose(out, A @ A + np.eye(2))

    @given(exact_polys(max_degree=4),
           st.lists(st.lists(small_fractions, min_size=3, max_size=3), min_size=3, max_size=3))
    def test_commutes_with_argument(self, p, rows):
        A = np.array(rows, dtype=object)
        pA = poly_eval_matrix(p, A)
        assert (pA @ A == A @ pA).all()


class TestDivision:
    def test_examples(self):
        assert poly_divrem(P(1, 0, 1), P(-1, 1)) == (P(1, 1), P(2))
        g = P(3, 1, 4)
        assert poly_divrem(g, g) == (P(1), Poly())
        assert poly_divrem(P(0, 0, 0, 1), P(-1, 0, 1)) == (P(0, 1), P(0, 1))

    def test_by_zero(self):
        with pytest.raises(DivisionByZeroPoly):
            poly_divrem(P(1, 1), Poly())
        with pytest.raises(ZeroDivisionError):
            P(1) // Poly()

    @given(exact_polys(max_degree=7), exact_polys(max_degree=4, nonzero=True))
    def test_division_identity(self, f, g):
        q, r = poly_divrem(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    def test_float_division(self):
        f = Poly([1.0, 0, 1.0])
        q, r = poly_divrem(f, Poly([-1.0, 1.0]))
        assert np.allclose(q.coeffs, [1, 1]) and np.allclose(r.coeffs, [2])


class TestGcd:
    def test_common_factor(self):
        d, u, v = poly_extended_gcd(P(-1, 0, 1), P(-1, 1))
        assert (d, u, v) == (P(-1, 1), Poly(), P(1))

    def test_coprime(self):
        a, b = P(0, 1), P(-1, 1)
        d, u, v = poly_extended_gcd(a, b)
        # 1*x + (-1)*(x - 1) = 1, checked by expansion
        assert d == P(1)
        assert u * a + v * b == d
        assert (u, v) == (P(1), P(-1))

    def test_equal_arguments(self):
        a = P(2, 4)
        d, u, v = poly_extended_gcd(a, a)
        assert d == P(F(1, 2), 1)
        assert u * a + v * a == d

    def test_errors(self):
        with pytest.raises(ExactOnly):
            poly_extended_gcd(Poly([1.0, 1.0]), Poly([1.0]))
        with pytest.raises(UndefinedGcd):
            poly_extended_gcd(Poly(), Poly())

    @given(exact_polys(), exact_polys())
    def test_bezout(self, a, b):
        if a.is_zero() and b.is_zero():
            return
        d, u, v = poly_extended_gcd(a, b)
        assert d.lead == 1
        assert u * a + v * b == d
        assert (a % d).is_zero() and (b % d).is_zero()


class TestSeparability:
    def test_examples(self):
        assert is_separable(P(-1, 0, 1))
        assert not is_separable(P(0, 0, 1))
        assert is_separable(P(-1, 1) * P(-11, 1))

    def test_constant(self):
        with pytest.raises(DegreeError):
            is_separable(P(3))

    def test_float(self):
        assert is_separable(Poly([-1.0, 0, 1.0]))
        assert not is_separable(Poly([1.0, -2.0, 1.0]))

    def test_irrational_roots_still_separable(self):
        assert is_separable(P(-2, 0, 1))


class TestRationalRoots:
    def test_split(self):
        p = Poly.from_roots([1, 1, 11])
        assert rational_roots(p) == ([(1, 2), (11, 1)], P(1))

    def test_fractional_and_zero_roots(self):
        p = Poly.from_roots([F(-2, 3), 0, 0, F(5, 2)]) * 6
        roots, rest = rational_roots(p)
        assert roots == [(F(-2, 3), 1), (0, 2), (F(5, 2), 1)]
        assert rest.degree == 0

    def test_unsplit_cofactor(self):
        roots, rest = rational_roots(P(-2, 0, 1) * P(-3, 1))
        assert roots == [(3, 1)]
        assert rest == P(-2, 0, 1)

    @given(st.lists(small_fractions, min_size=1, max_size=5))
    def test_roundtrip(self, roots):
        roots_found, rest = rational_roots(Poly.from_roots(roots))
        expanded = [r for r, k in roots_found for _ in range(k)]
        assert expanded == sorted(roots)
        assert rest == P(1)
