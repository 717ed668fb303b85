"""Grouping of computed eigenvalues into distinct values with multiplicities."""

from fractions import Fraction

from .scalar import EXACT, common_kind

DEFAULT_CLUSTER_REL = 1e-6


def default_eps_cluster(values):
    """``1e-6 * max |value|``, the default float-mode cluster radius."""
    scale = max((abs(complex(v)) for v in values), default=0.0)
    return DEFAULT_CLUSTER_REL * scale


def _sort_key(z):
    if isinstance(z, Fraction):
        return (z, 0)
    z = complex(z)
    return (z.real, z.imag)


def eigen_cluster(roots, eps_cluster=None):
    """Partition ``roots`` into clusters and return ``(values, multiplicities)``.

    Float roots are joined transitively: two roots share a cluster when a
    chain of roots links them with every step at most ``eps_cluster``.  The
    representative of a cluster is its mean.  Exact roots are grouped by
    equality and ``eps_cluster`` is ignored.  Output is sorted ascending by
    (real, imaginary) part.
    """
    roots = list(roots)
    if not roots:
        raise ValueError("eigen_cluster needs at least one root")
    kind = common_kind(roots)
    if kind == EXACT:
        counts = {}
        for r in roots:
            r = Fraction(r)
            counts[r] = counts.get(r, 0) + 1
        values = sorted(counts)
        return values, [counts[v] for v in values]

    zs = [complex(r) for r in roots]
    eps = default_eps_cluster(zs) if eps_cluster is None else eps_cluster
    parent = list(range(len(zs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if abs(zs[i] - zs[j]) <= eps:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    groups = {}
    for i, z in enumerate(zs):
        groups.setdefault(find(i), []).append(z)
    reps = [(sum(g) / len(g), len(g)) for g in groups.values()]
    reps.sort(key=lambda t: _sort_key(t[0]))
    return [v for v, _ in reps], [k for _, k in reps]


def min_separation(values):
    """Smallest pairwise distance between cluster representatives (inf if < 2)."""
    zs = [complex(v) for v in values]
    best = float("inf")
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            best = min(best, abs(zs[i] - zs[j]))
    return best
