"""Maximal orders of number fields at desk scale."""
from __future__ import annotations

import functools
from fractions import Fraction
from math import lcm

from sympy import factorint

from .. import linalg
from ..algnum.field import NumberField, number_field
from ..polyarith.resultant import resultant
from .hnf import hnf, solve_in_lattice


class CapExceeded(RuntimeError):
    """A desk-scale enumeration cap was hit."""


def poly_discriminant(f) -> int:
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) // f.lc


def _table_of(K: NumberField, basis, inv):
    """Integer multiplication table of the lattice spanned by basis."""
    n = len(basis)
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            v = linalg.vec_mat(list(K.mul(tuple(basis[i]), tuple(basis[j]))), inv)
            if any(x.denominator != 1 for x in v):
                raise ArithmeticError("element is not in the order")
            row.append([int(x) for x in v])
        table.append(row)
    return table


def _table_mul(table, u, v, p=None):
    n = len(u)
    out = [0] * n
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    for k, c in enumerate(table[i][j]):
                        out[k] += a * b * c
    return [x % p for x in out] if p else out


def _kernel_mod_p(M, p) -> list[list[int]]:
    """Basis of {c : c * M = 0 mod p} for an integer matrix M (rows x cols)."""
    rows, cols = len(M), len(M[0])
    # reduce the transpose: unknowns are the row coefficients
    A = [[M[i][j] % p for i in range(rows)] for j in range(cols)]
    pivots, r = [], 0
    for c in range(rows):
        k = next((i for i in range(r, cols) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(cols):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(rows) if c not in pivots):
        v = [0] * rows
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = -A[i][free] % p
        basis.append(v)
    return basis


def _enlarge_at(table, n: int, p: int):
    """One Round Two step at p in order coordinates: the ring of multipliers of
    the p-radical as rational rows, or None when the order is p-maximal."""
    q = p
    while q < n:
        q *= p
    # p-radical: kernel of x -> x^q on O/pO (additive mod p)
    frob = []
    for i in range(n):
        e = [int(k == i) for k in range(n)]
        acc, base, k = None, e, q
        while k:
            if k & 1:
                acc = base if acc is None else _table_mul(table, acc, base, p)
            k >>= 1
            if k:
                base = _table_mul(table, base, base, p)
        frob.append(acc)
    rad = _kernel_mod_p(frob, p)
    if not rad:
        return None
    I = hnf(rad + [[p * int(k == i) for k in range(n)] for i in range(n)])
    # y in U iff y * gamma lies in p*I for every generator gamma of I
    M = []
    for i in range(n):
        e = [int(k == i) for k in range(n)]
        row = []
        for g in I:
            row += solve_in_lattice(I, _table_mul(table, e, g))
        M.append(row)
    U = _kernel_mod_p(M, p)
    if not U:
        return None
    return [[Fraction(x, p) for x in u] for u in U] + [[Fraction(int(k == i)) for k in range(n)] for i in range(n)]


def _maximal_order_basis(K: NumberField, disc: int) -> list[list[Fraction]]:
    """Z-basis of O_K over the power basis by Round Two from Z[theta]."""
    n = K.degree
    basis = [[Fraction(int(k == i)) for k in range(n)] for i in range(n)]
    for p, e in sorted(factorint(abs(disc)).items()):
        if e < 2:
            continue
        while True:
            inv = linalg.inverse(basis)
            step = _enlarge_at(_table_of(K, basis, inv), n, p)
            if step is None:
                break
            basis = _lattice_basis([linalg.vec_mat(r, basis) for r in step])
    return basis


class RingOfIntegers:
    """O_K with a Z-basis given by rows of rationals over the power basis."""

    def __init__(self, field: NumberField):
        self.field = field
        self.degree = field.degree
        self.poly_disc = poly_discriminant(field.poly)
        self.basis = _maximal_order_basis(field, self.poly_disc)
        self._basis_inv = linalg.inverse(self.basis)
        self.table = _table_of(field, self.basis, self._basis_inv)
        self.discriminant = int(linalg.determinant(self.trace_matrix()))
        self.index = _isqrt_exact(self.poly_disc // self.discriminant)

    def trace_matrix(self):
        K = self.field
        return [[K.trace(K.mul(tuple(a), tuple(b))) for b in self.basis] for a in self.basis]

    # conversions between power-basis coordinates and integral-basis vectors

    def to_basis(self, coords, check: bool = False):
        v = linalg.vec_mat(list(coords), self._basis_inv)
        if any(x.denominator != 1 for x in v):
            if check:
                raise ArithmeticError("element is not in the order")
            return None
        return [int(x) for x in v]

    def from_basis(self, vec) -> tuple:
        return self.field.element(linalg.vec_mat([Fraction(x) for x in vec], self.basis))

    def mul(self, u, v) -> list[int]:
        n = self.degree
        out = [0] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    ab = a * b
                    for k, c in enumerate(self.table[i][j]):
                        out[k] += ab * c
        return out

    def one(self) -> list[int]:
        return self.to_basis(self.field.one(), check=True)

    def norm(self, u) -> Fraction:
        return linalg.determinant(self.field.mult_matrix(self.from_basis(u)))

    def __repr__(self):
        return f"RingOfIntegers({self.field.poly}, disc={self.discriminant})"


def _isqrt_exact(n: int) -> int:
    from math import isqrt

    r = isqrt(n)
    if r * r != n:
        raise ArithmeticError("discriminant ratio is not a square")
    return r


def _lattice_basis(vectors) -> list[list[Fraction]]:
    """Z-basis (as rational rows) of the lattice spanned by rational vectors."""
    den = 1
    for v in vectors:
        for x in v:
            den = lcm(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in v] for v in vectors]
    H = hnf(ints)
    return [[Fraction(x, den) for x in row] for row in H]


@functools.lru_cache(maxsize=None)
def _order_cached(coeffs: tuple) -> RingOfIntegers:
    from ..polyarith.poly import IntPoly

    return RingOfIntegers(number_field(IntPoly(coeffs)))


def ring_of_integers(field: NumberField) -> RingOfIntegers:
    return _order_cached(field.poly.coeffs)


__all__ = ["RingOfIntegers", "ring_of_integers", "CapExceeded", "poly_discriminant", "solve_in_lattice"]
