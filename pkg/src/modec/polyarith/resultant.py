"""Resultants via the subresultant PRS, with a Sylvester-matrix oracle."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .. import literals
from . import dense
from .poly import IntPoly, as_intpoly


def _int_exquo(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} not divisible by {b}")
    return q


def _poly_exquo(a: IntPoly, b) -> IntPoly:
    return a.exquo(b)


def subresultant(A: list, B: list, exquo: Callable, one=1):
    """Resultant of two nonzero coefficient lists over an integral domain.

    Collins/Brown subresultant PRS; every division is exact in the domain.
    """
    A, B = dense.trim(list(A)), dense.trim(list(B))
    if not A or not B:
        raise ValueError("zero polynomial")
    dA, dB = len(A) - 1, len(B) - 1
    s = 1
    if dA < dB:
        A, B = B, A
        dA, dB = dB, dA
        if dA % 2 and dB % 2:
            s = -1
    if dB == 0:
        return s * B[0] ** dA if dA else s * one
    g = one
    h = one
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = dense.prem(A, B)
        A = B
        if not R:
            return 0 * one
        divisor = g * h ** delta
        B = [exquo(c, divisor) for c in R]
        g = A[-1]
        if delta:
            h = exquo(g ** delta, h ** (delta - 1))
        if len(B) == 1:
            dA = len(A) - 1
            h = exquo(B[0] ** dA, h ** (dA - 1)) if dA else h
            return s * h


def resultant(f, g) -> int:
    """Resultant of two nonzero integer polynomials in one variable."""
    f, g = as_intpoly(f), as_intpoly(g)
    if not f or not g:
        raise ValueError("zero polynomial")
    return subresultant(list(f.coeffs), list(g.coeffs), _int_exquo)


def sylvester_matrix(f, g) -> list[list[int]]:
    f, g = list(as_intpoly(f).coeffs), list(as_intpoly(g).coeffs)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def determinant(M) -> Fraction:
    """Gaussian elimination over Q."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        p = A[col][col]
        det *= p
        for r in range(col + 1, n):
            if A[r][col]:
                factor = A[r][col] / p
                for c in range(col, n):
                    A[r][c] -= factor * A[col][c]
    return det


def sylvester_resultant(f, g) -> int:
    f, g = as_intpoly(f), as_intpoly(g)
    if not f or not g:
        raise ValueError("zero polynomial")
    if f.degree == 0 and g.degree == 0:
        return 1
    return int(determinant(sylvester_matrix(f, g)))


# bivariate polynomials: dict {(x_power, y_power): int}

def parse_bivariate(text: str) -> dict:
    def sym(name):
        if name == "x":
            return {(1, 0): 1}
        if name == "y":
            return {(0, 1): 1}
        raise literals.ParseError(f"unknown variable {name!r}")

    class _B(dict):
        def __add__(self, o):
            r = _B(self)
            for k, v in _b(o).items():
                r[k] = r.get(k, 0) + v
            return _B({k: v for k, v in r.items() if v})

        __radd__ = __add__

        def __neg__(self):
            return _B({k: -v for k, v in self.items()})

        def __sub__(self, o):
            return self + (-_b(o))

        def __rsub__(self, o):
            return _b(o) + (-self)

        def __mul__(self, o):
            r: dict = {}
            for (i, j), a in self.items():
                for (k, l), b in _b(o).items():
                    r[(i + k, j + l)] = r.get((i + k, j + l), 0) + a * b
            return _B({k: v for k, v in r.items() if v})

        __rmul__ = __mul__

        def __pow__(self, n):
            r = _B({(0, 0): 1})
            for _ in range(n):
                r = r * self
            return r

        def __truediv__(self, o):
            raise literals.ParseError("division is not supported in bivariate polynomials")

    def _b(o):
        if isinstance(o, _B):
            return o
        if isinstance(o, dict):
            return _B(o)
        q = Fraction(o)
        if q.denominator != 1:
            raise literals.ParseError("bivariate polynomials need integer coefficients")
        return _B({(0, 0): int(q)} if q else {})

    node = literals.parse_expression(text)
    value = literals.evaluate(node, num=lambda q: _b(q), sym=lambda s: _b(sym(s)))
    return dict(_b(value))


def _as_bivariate(f) -> dict:
    if isinstance(f, str):
        return parse_bivariate(f)
    if isinstance(f, IntPoly):
        return {(i, 0): c for i, c in enumerate(f.coeffs) if c}
    return {k: v for k, v in dict(f).items() if v}


def _coeffs_in(f: dict, var: str) -> list[IntPoly]:
    """Coefficient list in ``var`` with polynomial coefficients in the other variable."""
    idx = 1 if var == "y" else 0
    top = max((k[idx] for k in f), default=-1)
    out = []
    for e in range(top + 1):
        other = {}
        for k, v in f.items():
            if k[idx] == e:
                other[k[1 - idx]] = v
        size = max(other, default=-1) + 1
        out.append(IntPoly([other.get(i, 0) for i in range(size)]))
    return out


def bivariate_resultant(f, g, eliminate: str = "y") -> IntPoly:
    """Resultant of f and g with respect to ``eliminate``, as a polynomial in the other variable."""
    if eliminate not in ("x", "y"):
        raise ValueError("eliminate must be 'x' or 'y'")
    F, G = _coeffs_in(_as_bivariate(f), eliminate), _coeffs_in(_as_bivariate(g), eliminate)
    dense.trim(F)
    dense.trim(G)
    if not F or not G:
        raise ValueError("zero polynomial")
    if len(F) < 2 or len(G) < 2:
        raise ValueError(f"input is constant in {eliminate}")
    r = subresultant(F, G, _poly_exquo, one=IntPoly((1,)))
    return r if isinstance(r, IntPoly) else IntPoly((r,))


def sum_resultant(f, g) -> IntPoly:
    """Res_y(f(y), g(x - y)): vanishes at every alpha + beta."""
    f, g = as_intpoly(f), as_intpoly(g)
    F = {(0, j): c for j, c in enumerate(f.coeffs) if c}
    G: dict = {}
    # g(x - y) = sum c_k (x - y)^k
    for k, c in enumerate(g.coeffs):
        if not c:
            continue
        from math import comb
        for i in range(k + 1):
            key = (i, k - i)
            G[key] = G.get(key, 0) + c * comb(k, i) * (-1) ** (k - i)
    return bivariate_resultant(F, G, "y")


def product_resultant(f, g) -> IntPoly:
    """Res_y(y^m f(x/y), g(y)) with m = deg f: vanishes at every alpha * beta."""
    f, g = as_intpoly(f), as_intpoly(g)
    m = f.degree
    F = {(i, m - i): c for i, c in enumerate(f.coeffs) if c}
    G = {(0, j): c for j, c in enumerate(g.coeffs) if c}
    return bivariate_resultant(F, G, "y")


def ratio_resultant(f, g) -> IntPoly:
    """Res_y(f(x y), g(y)): vanishes at every alpha / beta (beta != 0)."""
    f, g = as_intpoly(f), as_intpoly(g)
    F = {(i, i): c for i, c in enumerate(f.coeffs) if c}
    G = {(0, j): c for j, c in enumerate(g.coeffs) if c}
    return bivariate_resultant(F, G, "y")
