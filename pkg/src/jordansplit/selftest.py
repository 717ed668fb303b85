"""Reference examples reproduced by ``jordansplit selftest``."""

import random
from fractions import Fraction

import numpy as np

from .matrix import is_zero_matrix, matrix_power
from .randomgen import exact_inverse, random_similarity_matrix
from .spectral import Config, semisimple_part

Q = Fraction(1, 4)

EXAMPLE_1 = [[3, 4, 3], [2, 7, 4], [-4, 8, 3]]
EXAMPLE_1_S = [[1, Fraction(28, 5), Fraction(14, 5)],
               [0, Fraction(43, 5), Fraction(19, 5)],
               [0, Fraction(24, 5), Fraction(17, 5)]]

EXAMPLE_2 = [
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 0, 0, 0],
    [Q, 0, -1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, -1, 0, 0, 0, 0],
    [0, 0, Q, 0, -1, 2, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 3, -1, 0, 0],
    [0, 0, 0, 0, Q, 0, -1, 3, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 4, -1],
    [0, 0, 0, 0, 0, 0, Q, 0, -1, 4],
]
# four-decimal printout of S; (8,4), (9,3), (9,4) carry sign slips
EXAMPLE_2_S_PRINTED = [
    [0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, -1, 0, 0, 0, 0, 0, 0],
    [0.25, 0, -1, 1, 0, 0, 0, 0, 0, 0],
    [-0.0156, 0.0156, 0, 0, 2, -1, 0, 0, 0, 0],
    [-0.0156, 0.0156, 0.25, 0, -1, 2, 0, 0, 0, 0],
    [0.0039, -0.0026, -0.0156, 0.0156, 0, 0, 3, -1, 0, 0],
    [0.0052, -0.0039, -0.0156, 0.0156, 0.25, 0, -1, 3, 0, 0],
    [-0.0004, 0.0002, 0.0039, -0.0026, 0.0156, 0.0156, 0, 0, 4, -1],
    [-0.0007, 0.0004, 0.0052, 0.0039, 0.0156, 0.0156, 0.25, 0, -1, 4],
]
EXAMPLE_2_SIGN_SLIPS = {(8, 4), (9, 3), (9, 4)}
EXAMPLE_2_C = [[-1, 0, 1, 2, 3, 4, 5],
               [-4.9, 0, 1.1667, 0, -3.5, -10.2667, -24.5]]


def _example_1():
    res = semisimple_part(EXAMPLE_1)
    lam = [L.entries for L in res.interpolant.lambda_matrices]
    ok = (res.S.tolist() == EXAMPLE_1_S
          and lam == [((1, 0), (Fraction(-1, 5), 1)), ((1, 0), (Fraction(1, 5), 1))]
          and [list(c) for c in res.interpolant.c] == [[1, Fraction(1, 5)], [11, Fraction(-11, 5)]]
          and is_zero_matrix(matrix_power(res.N, 2)))
    return ok, f"S = {[[str(v) for v in row] for row in res.S]}"


def _example_2():
    A = np.array(EXAMPLE_2, dtype=float)
    res = semisimple_part(A, Config(mode="float"))
    info = res.spectrum
    eig_ok = (np.allclose([complex(v) for v in info.distinct_eigenvalues], [-1, 0, 1, 2, 3, 4, 5],
                          atol=1e-6) and info.multiplicities == (1, 1, 2, 2, 2, 1, 1))
    c = np.array([[complex(v) for v in col] for col in res.interpolant.c]).T
    c_ok = np.max(np.abs(c - np.array(EXAMPLE_2_C))) <= 1e-3
    nil = res.residuals.nilpotency
    S = res.S.real
    worst = max(abs(S[i, j] - EXAMPLE_2_S_PRINTED[i][j])
                for i in range(10) for j in range(10) if (i, j) not in EXAMPLE_2_SIGN_SLIPS)
    ok = eig_ok and c_ok and nil <= 1e-8 and worst <= 5e-3
    return ok, f"|(A-S)^2| = {nil:.2e}, max |S - printed| = {worst:.2e}"


def _random(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        A, P, D, _N0 = random_similarity_matrix(rng, rng.randint(1, 6))
        res = semisimple_part(A)
        expected = P @ D @ np.array(exact_inverse(P.tolist()), dtype=object)
        if not (is_zero_matrix(res.S - expected)
                and is_zero_matrix(matrix_power(res.N, res.spectrum.m))
                and is_zero_matrix(res.S @ A - A @ res.S)):
            return False, "random matrix failed the splitting contract"
    return True, f"{count} random exact matrices split with S = P D P^-1 and N^m = 0"


def run_selftest(seed=0, n_random=20):
    """Yield ``(name, passed, detail)`` per check."""
    checks = [("example-1 (3x3, exact)", _example_1),
              ("example-2 (10x10, float)", _example_2),
              (f"random similarity matrices (seed {seed})", lambda: _random(seed, n_random))]
    for name, fn in checks:
        passed, detail = fn()
        yield name, bool(passed), detail
