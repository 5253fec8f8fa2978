"""Shared test helpers: random inputs and small independent oracles."""

from itertools import combinations

from doldpuppe.chain import random_complex
from doldpuppe.gamma import degeneracy_matrix, face_matrix, gamma_rank
from doldpuppe.linalg import identity, matmul


def fixed_length_complex(rng, length, max_rank=2, bound=3):
    """Random complex of exactly the given length (retries until it fits)."""
    while True:
        C = random_complex(rng, max_length=length, max_rank=max_rank, bound=bound)
        if C.length == length:
            return C


def simplicial_identity_failures(C, n_max):
    """List every violated simplicial identity on Gamma(C.) up to level n_max."""
    d, s = {}, {}
    for n in range(1, n_max + 1):
        for i in range(n + 1):
            d[n, i] = face_matrix(C, n, i)
        for i in range(n):
            s[n, i] = degeneracy_matrix(C, n, i)

    def g(n):
        return gamma_rank(C, n)

    bad = []
    for n in range(2, n_max + 1):
        for i, j in combinations(range(n + 1), 2):
            if matmul(d[n - 1, i], d[n, j], g(n - 1), g(n)) != matmul(d[n - 1, j - 1], d[n, i], g(n - 1), g(n)):
                bad.append(("dd", n, i, j))
    for n in range(1, n_max + 1):
        for j in range(n):
            for i in range(n + 1):
                lhs = matmul(d[n, i], s[n, j], g(n), g(n - 1))
                if i < j:
                    rhs = matmul(s[n - 1, j - 1], d[n - 1, i], g(n - 2), g(n - 1))
                elif i in (j, j + 1):
                    rhs = identity(g(n - 1))
                else:
                    rhs = matmul(s[n - 1, j], d[n - 1, i - 1], g(n - 2), g(n - 1))
                if lhs != rhs:
                    bad.append(("ds", n, i, j))
    for n in range(2, n_max + 1):
        for j in range(n - 1):
            for i in range(j + 1):
                if matmul(s[n, i], s[n - 1, j], g(n - 1), g(n - 2)) != matmul(s[n, j + 1], s[n - 1, i], g(n - 1), g(n - 2)):
                    bad.append(("ss", n, i, j))
    return bad


def is_irredundant(family):
    """No set is covered by the union of the others (checked directly)."""
    for r, x in enumerate(family):
        rest = set()
        for t, y in enumerate(family):
            if t != r:
                rest.update(y)
        if set(x) <= rest:
            return False
    return True
