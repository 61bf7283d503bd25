from __future__ import annotations

import functools
from fractions import Fraction

from ..polyarith import dense
from ..polyarith.factor import is_irreducible
from ..polyarith.poly import IntPoly, as_intpoly
from .roots import RootIsolator, isolator


class NumberField:
    """Q(theta) for theta a root of a monic irreducible integer polynomial.

    Elements are coordinate tuples (Fractions) in the power basis.  Instances
    are interned per defining polynomial, use ``number_field``.
    """

    def __init__(self, poly: IntPoly):
        if not poly.is_monic():
            raise ValueError(f"defining polynomial {poly} is not monic")
        if not is_irreducible(poly):
            raise ValueError(f"defining polynomial {poly} is not irreducible")
        self.poly = poly
        self.degree = poly.degree
        self._mod = list(poly.coeffs)

    def __repr__(self):
        return f"NumberField({str(self.poly)!r})"

    @property
    def roots(self) -> RootIsolator:
        return isolator(self.poly)

    def is_rational(self) -> bool:
        return self.degree == 1

    # element arithmetic on coordinate tuples

    def element(self, coeffs) -> tuple[Fraction, ...]:
        c = [Fraction(x) for x in coeffs]
        n = self.degree
        if len(c) > n:
            c = self._reduce(c)
        return tuple(c + [Fraction(0)] * (n - len(c)))

    def _reduce(self, c: list) -> list:
        f = self._mod
        n = self.degree
        c = list(c)
        for k in range(len(c) - 1, n - 1, -1):
            q = c[k]
            if q:
                for i in range(n):
                    c[k - n + i] -= q * f[i]
            c[k] = Fraction(0)
        return c[:n]

    def zero(self):
        return self.element([])

    def one(self):
        return self.element([1])

    def generator(self):
        if self.degree == 1:
            return self.element([-self._mod[0]])
        return self.element([0, 1])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        return self.element(dense.mul(list(a), list(b)) or [])

    def scale(self, a, q):
        q = Fraction(q)
        return tuple(q * x for x in a)

    def inverse(self, a):
        """Inverse modulo the defining polynomial via the extended Euclidean algorithm."""
        r0, r1 = [Fraction(x) for x in self._mod], dense.trim([Fraction(x) for x in a])
        if not r1:
            raise ZeroDivisionError("division by zero")
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = dense.divmod_field(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, dense.sub(s0, dense.mul(q, s1))
        # r1 is a nonzero constant since the modulus is irreducible
        return self.element([c / r1[0] for c in s1])

    def power(self, a, e: int):
        if e < 0:
            a, e = self.inverse(a), -e
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def evaluate(self, poly_coeffs, a):
        """Value of a polynomial (rational coefficients) at the element a."""
        acc = self.zero()
        for c in reversed(list(poly_coeffs)):
            acc = self.add(self.mul(acc, a), self.element([c]))
        return acc

    def mult_matrix(self, a) -> list[list[Fraction]]:
        """Rows are the coordinates of a * theta^i."""
        rows = []
        cur = tuple(a)
        x = self.element([0, 1]) if self.degree > 1 else None
        for _ in range(self.degree):
            rows.append(list(cur))
            if x is not None:
                cur = self.mul(cur, x)
        return rows

    def trace(self, a) -> Fraction:
        M = self.mult_matrix(a)
        return sum((M[i][i] for i in range(self.degree)), Fraction(0))


@functools.lru_cache(maxsize=None)
def _field_cached(coeffs: tuple) -> NumberField:
    return NumberField(IntPoly(coeffs))


def number_field(poly) -> NumberField:
    return _field_cached(tuple(as_intpoly(poly).coeffs))


def rationals() -> NumberField:
    return number_field(IntPoly((0, 1)))
