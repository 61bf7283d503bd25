"""Small exact linear algebra over Q (lists of Fractions)."""
from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in A]


def vec_mat(v, A):
    """Row vector times matrix."""
    n = len(A[0]) if A else 0
    out = [Fraction(0)] * n
    for c, row in zip(v, A):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return out


def solve(A, b):
    """Solve A x = b for square invertible A; raises ValueError if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def inverse(A):
    n = len(A)
    cols = [solve(A, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return [list(r) for r in zip(*cols)]


def determinant(A) -> Fraction:
    from .polyarith.resultant import determinant as det

    return det(A)


class Echelon:
    """Incremental row echelon form that remembers how each row was built,
    so that the first linear dependency among inserted vectors is recovered."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, list[Fraction], dict[int, Fraction]]] = []
        self.count = 0

    def insert(self, v) -> dict[int, Fraction] | None:
        """Insert v (the count-th vector).  Returns None if independent, else
        coefficients {k: c} with sum c * v_k = 0 (c for the new vector is 1)."""
        v = [Fraction(x) for x in v]
        combo = {self.count: Fraction(1)}
        for piv, row, rcombo in self.rows:
            if v[piv]:
                f = v[piv] / row[piv]
                v = [x - f * y for x, y in zip(v, row)]
                for k, c in rcombo.items():
                    combo[k] = combo.get(k, Fraction(0)) - f * c
        self.count += 1
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return {k: c for k, c in combo.items() if c}
        self.rows.append((piv, v, combo))
        return None
