"""Random exact test matrices with a known Jordan-Chevalley splitting."""

from fractions import Fraction

import numpy as np


def exact_inverse(M):
    """Gauss-Jordan inverse of a Fraction matrix; raises ZeroDivisionError if singular."""
    n = len(M)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def random_rational(rng, span=5, dens=(1, 1, 1, 2, 3)):
    return Fraction(rng.randint(-span, span), rng.choice(dens))


def random_jordan_data(rng, n, max_distinct=4):
    """Diagonal ``D`` and strictly upper ``N0`` (superdiagonal ones inside blocks)."""
    k = rng.randint(1, min(n, max_distinct))
    eigs = set()
    while len(eigs) < k:
        eigs.add(random_rational(rng))
    eigs = list(eigs)
    sizes = []
    remaining = n
    while remaining:
        s = rng.randint(1, remaining)
        sizes.append(s)
        remaining -= s
    D = [[Fraction(0)] * n for _ in range(n)]
    N0 = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for idx, s in enumerate(sizes):
        lam = eigs[idx % k]
        for i in range(pos, pos + s):
            D[i][i] = lam
            if i + 1 < pos + s:
                N0[i][i + 1] = Fraction(1)
        pos += s
    return D, N0


def random_invertible(rng, n, span=2):
    while True:
        P = [[Fraction(rng.randint(-span, span)) for _ in range(n)] for _ in range(n)]
        try:
            return P, exact_inverse(P)
        except ZeroDivisionError:
            continue


def random_similarity_matrix(rng, n):
    """``(A, P, D, N0)`` with ``A = P (D + N0) P^{-1}``; the semisimple part is ``P D P^{-1}``."""
    D, N0 = random_jordan_data(rng, n)
    P, Pinv = random_invertible(rng, n)
    P_, Pinv_ = np.array(P, dtype=object), np.array(Pinv, dtype=object)
    J = np.array(D, dtype=object) + np.array(N0, dtype=object)
    A = P_ @ J @ Pinv_
    return A, P_, np.array(D, dtype=object), np.array(N0, dtype=object)
