"""Exact reflection representation used as an oracle for infinite groups.

Generators s_i act on R^n by v -> v - 2 B(e_i, v) e_i with the symmetric
form B(e_i, e_j) = -cos(pi / m_ij) (and -1 for an infinite label).  An
edge generator r_ij maps to the matrix of s_i s_j; telescoping makes every
path relator land on (s_i s_j)^{m_ij} = 1.
"""

import sympy as sp

from altcox.coxeter import INFINITY


class MatrixElement:
    """Wrapper giving sympy matrices the oracle element interface."""

    def __init__(self, m):
        self.m = sp.simplify(m)

    def __mul__(self, other):
        return MatrixElement(self.m * other.m)

    def inverse(self):
        return MatrixElement(self.m.inv())

    def is_identity(self):
        n = self.m.shape[0]
        return sp.simplify(self.m - sp.eye(n)) == sp.zeros(n, n)

    def __eq__(self, other):
        return sp.simplify(self.m - other.m) == sp.zeros(*self.m.shape)

    def is_unipotent(self):
        lam = sp.symbols("lam")
        n = self.m.shape[0]
        return sp.factor(self.m.charpoly(lam).as_expr()) == (lam - 1) ** n


def simple_reflections(matrix):
    n = matrix.n
    B = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            e = matrix.entry(i, j)
            B[i, j] = sp.Integer(-1) if e == INFINITY else -sp.cos(sp.pi / e)
    refs = []
    for i in range(n):
        # e_j -> e_j - 2 B(i, j) e_i, so only row i differs from the identity
        S = sp.eye(n)
        for j in range(n):
            S[i, j] = (1 if i == j else 0) - 2 * B[i, j]
        refs.append(MatrixElement(S))
    return refs


def edge_images(matrix, emap):
    """Map each edge generator r_ij to the matrix of s_i s_j."""
    refs = simple_reflections(matrix)
    return [refs[i] * refs[j] for i, j in emap.edges]
