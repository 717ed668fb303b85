"""Closed-form Hermite interpolation through products of shifted Lagrange factors.

For distinct nodes ``lam_0..lam_{n-1}`` with multiplicities ``m_j`` put

    L_k(x) = prod_{i != k} ((x - lam_i) / (lam_k - lam_i)) ** m_i

and let ``Lambda_k`` be the unit lower-triangular ``m_k x m_k`` matrix with
entry ``(i, j) = C(i, j) * L_k^{(i-j)}(lam_k)``.  The interpolant is

    r(x) = sum_j sum_i c_ij * (x - lam_j)**i / i! * L_j(x),   c_j = Lambda_j^{-1} a_j

so only polynomial derivatives of ``L_k`` at its own node are needed.
"""

from dataclasses import dataclass, field
from functools import cached_property

from .cluster import default_eps_cluster
from .errors import EmptyProblem, FactorialRange, InputError, NodeCollision
from .poly import Poly
from .scalar import DEFAULT_EPS_ZERO, EXACT, binomial, coerce, common_kind, factorial, one, zero

# float mode keeps i! exact in a double only this far
MAX_FLOAT_MULTIPLICITY = 20


class HermiteProblem:
    """Nodes ``lam_j`` with prescribed values ``r^{(i)}(lam_j) = a_ij``, ``i < m_j``.

    ``nodes`` is a sequence of ``(lam_j, [a_0j, ..., a_{m_j-1,j}])`` pairs.
    """

    def __init__(self, nodes, kind=None, eps_cluster=None, eps_zero=DEFAULT_EPS_ZERO):
        nodes = [(x, list(vals)) for x, vals in nodes]
        if not nodes:
            raise EmptyProblem("a Hermite problem needs at least one node")
        for x, vals in nodes:
            if not vals:
                raise InputError(f"node {x!r} has no prescribed values")
        if kind is None:
            kind = common_kind([x for x, _ in nodes] + [a for _, vs in nodes for a in vs])
        self.kind = kind
        self.eps_zero = eps_zero
        self.lambdas = tuple(coerce(x, kind) for x, _ in nodes)
        self.values = tuple(tuple(coerce(a, kind) for a in vals) for _, vals in nodes)
        self.multiplicities = tuple(len(v) for v in self.values)
        if kind == EXACT:
            if len(set(self.lambdas)) != len(self.lambdas):
                raise NodeCollision("interpolation nodes must be pairwise distinct")
            self.eps_cluster = None
        else:
            if max(self.multiplicities) > MAX_FLOAT_MULTIPLICITY:
                raise FactorialRange(
                    f"float mode supports multiplicities up to {MAX_FLOAT_MULTIPLICITY}")
            eps = default_eps_cluster(self.lambdas) if eps_cluster is None else eps_cluster
            self.eps_cluster = eps
            for a in range(len(self.lambdas)):
                for b in range(a + 1, len(self.lambdas)):
                    gap = abs(self.lambdas[a] - self.lambdas[b])
                    if gap <= 10 * eps or gap == 0:
                        raise NodeCollision(
                            f"nodes {self.lambdas[a]} and {self.lambdas[b]} are closer "
                            f"than 10*eps_cluster = {10 * eps:g}")

    @classmethod
    def uniform(cls, lambdas, columns, **kw):
        """All nodes share multiplicity ``len(columns[j])``; ``columns[j]`` are node j's values."""
        return cls(list(zip(lambdas, columns)), **kw)

    @property
    def n(self):
        return len(self.lambdas)

    @property
    def total_degree(self):
        return sum(self.multiplicities)

    def _poly(self, coeffs):
        return Poly(coeffs, kind=self.kind, eps_zero=self.eps_zero)

    @cached_property
    def bases(self):
        return tuple(_lagrange_basis(self, k) for k in range(self.n))

    def __repr__(self):
        return f"HermiteProblem(lambdas={self.lambdas}, multiplicities={self.multiplicities})"


def _check_index(problem, k):
    if not 0 <= k < problem.n:
        raise IndexError(f"node index {k} out of range for {problem.n} nodes")


def _lagrange_basis(problem, k):
    lam_k = problem.lambdas[k]
    L = problem._poly([1])
    for i, (lam_i, m_i) in enumerate(zip(problem.lambdas, problem.multiplicities)):
        if i == k:
            continue
        denom = lam_k - lam_i
        if denom == 0:
            raise NodeCollision("interpolation nodes must be pairwise distinct")
        L = L * problem._poly([-lam_i / denom, one(problem.kind) / denom]) ** m_i
    return L


def lagrange_basis(problem, k):
    """``L_k``; the constant 1 when there is a single node."""
    _check_index(problem, k)
    return problem.bases[k]


def basis_term(problem, t, s):
    """The polynomial ``(x - lam_t)**s / s! * L_t(x)``."""
    _check_index(problem, t)
    shift = problem._poly([-problem.lambdas[t], 1]) ** s
    return shift * problem.bases[t] / factorial(s, problem.kind)


def _self_derivatives(problem, k, count):
    """``[L_k(lam_k), L_k'(lam_k), ..., L_k^{(count-1)}(lam_k)]``."""
    p = problem.bases[k]
    out = []
    for _ in range(count):
        out.append(p(problem.lambdas[k]))
        p = p.derivative()
    return out


@dataclass(frozen=True)
class LambdaMatrix:
    """Unit lower-triangular matrix attached to node ``k``."""

    entries: tuple
    k: int

    @property
    def size(self):
        return len(self.entries)

    def subdiagonal(self):
        return [self.entries[i + 1][i] for i in range(self.size - 1)]


def lambda_matrix(problem, k):
    _check_index(problem, k)
    m = problem.multiplicities[k]
    kind = problem.kind
    d = _self_derivatives(problem, k, m)
    rows = []
    for i in range(m):
        rows.append(tuple(binomial(i, j, kind) * d[i - j] if j <= i else zero(kind)
                          for j in range(m)))
    return LambdaMatrix(tuple(rows), k)


def _kind_of(entries):
    return common_kind([v for row in entries for v in row])


def _identity(m, kind):
    return tuple(tuple(one(kind) if i == j else zero(kind) for j in range(m)) for i in range(m))


def _matmul(a, b):
    n, p = len(a), len(b[0]) if b else 0
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), zero(_kind_of(a)))
                       for j in range(p)) for i in range(n))


def lambda_inverse(L):
    """Inverse of the unit lower-triangular ``L`` by forward substitution."""
    rows = L.entries
    m = len(rows)
    kind = _kind_of(rows)
    inv = [[zero(kind)] * m for _ in range(m)]
    for j in range(m):
        inv[j][j] = one(kind)
        for i in range(j + 1, m):
            acc = zero(kind)
            for k in range(j, i):
                acc += rows[i][k] * inv[k][j]
            inv[i][j] = -acc
    return tuple(tuple(r) for r in inv)


def lambda_inverse_neumann(L):
    """Inverse as ``sum_{i < m} (I - L)**i``, valid since ``I - L`` is nilpotent."""
    m = L.size
    kind = _kind_of(L.entries)
    eye = _identity(m, kind)
    nil = tuple(tuple(eye[i][j] - L.entries[i][j] for j in range(m)) for i in range(m))
    total = eye
    power = eye
    for _ in range(1, m):
        power = _matmul(power, nil)
        total = tuple(tuple(total[i][j] + power[i][j] for j in range(m)) for i in range(m))
    return total


@dataclass(frozen=True)
class HermiteInterpolant:
    r: Poly
    c: tuple  # c[j] is the coefficient column of node j
    bases: tuple
    lambda_matrices: tuple
    problem: HermiteProblem = field(repr=False)

    @property
    def degree(self):
        return self.r.degree


def hermite_interpolate(problem, inverse="substitution"):
    """Unique polynomial of degree ``< sum m_j`` meeting every derivative condition.

    ``inverse`` selects how ``Lambda_j^{-1}`` is formed: ``"substitution"``
    (forward substitution) or ``"neumann"`` (nilpotent power series).  The
    two give identical results in exact mode.
    """
    invert = {"substitution": lambda_inverse, "neumann": lambda_inverse_neumann}[inverse]
    kind = problem.kind
    r = problem._poly(())
    cs, lams = [], []
    for j in range(problem.n):
        Lam = lambda_matrix(problem, j)
        inv = invert(Lam)
        a = problem.values[j]
        c = tuple(sum((inv[i][k] * a[k] for k in range(len(a))), zero(kind))
                  for i in range(len(a)))
        for i, cij in enumerate(c):
            if cij != 0:
                r = r + basis_term(problem, j, i) * cij
        cs.append(c)
        lams.append(Lam)
    return HermiteInterpolant(r, tuple(cs), problem.bases, tuple(lams), problem)


def interpolation_residual(problem, r):
    """Largest ``|r^{(i)}(lam_j) - a_ij|`` over all conditions (exact in exact mode)."""
    worst = 0
    for lam, vals in zip(problem.lambdas, problem.values):
        p = r
        for a in vals:
            worst = max(worst, abs(p(lam) - a))
            p = p.derivative()
    return worst


class DerivativeTable:
    """Values of ``((x - lam_t)**s / s! * L_t)^{(i)}`` at ``lam_j``.

    Indexed by ``(s, t, i, j)`` with ``s < m_t`` and ``i < m_j``; entries are
    zero off the diagonal block ``t == j`` and for ``i < s``, and otherwise
    ``C(i, s) * L_j^{(i-s)}(lam_j)``.
    """

    def __init__(self, problem):
        self.problem = problem
        self._derivs = [_self_derivatives(problem, k, problem.multiplicities[k])
                        for k in range(problem.n)]

    def __getitem__(self, key):
        s, t, i, j = key
        p = self.problem
        if not (0 <= t < p.n and 0 <= j < p.n):
            raise IndexError(f"node index out of range in {key}")
        if not (0 <= s < p.multiplicities[t] and 0 <= i < p.multiplicities[j]):
            raise IndexError(f"derivative order out of range in {key}")
        if t != j or i < s:
            return zero(p.kind)
        return binomial(i, s, p.kind) * self._derivs[j][i - s]

    def keys(self):
        p = self.problem
        for t in range(p.n):
            for j in range(p.n):
                for s in range(p.multiplicities[t]):
                    for i in range(p.multiplicities[j]):
                        yield (s, t, i, j)


def basis_derivative_table(problem):
    return DerivativeTable(problem)
