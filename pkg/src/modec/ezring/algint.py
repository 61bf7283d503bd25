"""The ring of algebraic integers as an effectively given Bezout domain.

gcd(a, b): with K = Q(a, b) and I = aO_K + bO_K, find the least n with I^n
principal, say I^n = (c); then d = c^(1/n) generates a*B + b*B in O_L for
L = K(d), so d is a gcd in the algebraic integers.  Bezout coefficients are
read off an extended Hermite normal form over O_L.
"""
from __future__ import annotations

from itertools import count, product

from .. import literals
from ..algnum.number import AlgebraicNumber, _simplify, common_field, parse_algebraic
from ..idealarith import (CapExceeded, IntegralIdeal, UnsupportedPrime, factor_ideal,
                          hnf_with_transform, nth_root, principal_generator, ring_of_integers,
                          solve_in_lattice)
from ..idealarith.ideal import CLASS_ORDER_CAP, PRINCIPAL_SLACK
from .base import EffectiveRing, GcdCertificate, NotDivisible


def _unit_vectors(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


class AlgIntRing(EffectiveRing):
    name = "algint"
    hypotheses_ok = True

    def __init__(self, class_order_cap: int = CLASS_ORDER_CAP, principal_slack: float = PRINCIPAL_SLACK):
        self.class_order_cap = class_order_cap
        self.principal_slack = principal_slack

    # -- literals and basics ------------------------------------------------------

    def parse(self, text: str) -> AlgebraicNumber:
        a = parse_algebraic(text)
        if not a.is_algebraic_integer():
            raise literals.ParseError(f"{text!r} is not an algebraic integer (minimal polynomial {a.minimal_poly()})")
        return a

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return AlgebraicNumber.coerce(x)

    def format(self, x) -> str:
        return str(x)

    def zero(self):
        return AlgebraicNumber.rational(0)

    def one(self):
        return AlgebraicNumber.rational(1)

    def eq(self, a, b) -> bool:
        return self.coerce(a) == self.coerce(b)

    def is_zero(self, a) -> bool:
        return self.coerce(a).is_zero()

    def quotient(self, b, a):
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero():
            if b.is_zero():
                return b
            raise NotDivisible("division by zero")
        q = b / a
        if not q.is_algebraic_integer():
            raise NotDivisible(f"{a} does not divide {b}")
        return q

    def is_unit(self, a) -> bool:
        a = self.coerce(a)
        if a.is_zero():
            return False
        m = a.minimal_poly()
        return m.is_integral() and abs(m.num.coeffs[0]) == 1

    # -- O_K plumbing ------------------------------------------------------------

    def _host(self, *elements):
        K, idx, coords = common_field(*elements)
        O = ring_of_integers(K)
        return O, idx, [O.to_basis(c, check=True) for c in coords]

    def _element(self, O, idx, vec) -> AlgebraicNumber:
        return _simplify(AlgebraicNumber(O.field, O.from_basis(vec), idx))

    def coprime(self, a, b) -> bool:
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero():
            return self.is_unit(b)
        if b.is_zero():
            return self.is_unit(a)
        O, _, (va, vb) = self._host(a, b)
        return IntegralIdeal.from_generators(O, [va, vb]).is_unit()

    # -- gcd -------------------------------------------------------------------------

    def gcd_bezout(self, a, b) -> GcdCertificate:
        a, b = self.coerce(a), self.coerce(b)
        zero, one = self.zero(), self.one()
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd of two zeros")
        if a.is_zero():
            return GcdCertificate(b, zero, one, zero, one)
        if b.is_zero():
            return GcdCertificate(a, one, zero, one, zero)
        if self.divides(a, b):
            return GcdCertificate(a, one, zero, one, self.quotient(b, a))
        if self.divides(b, a):
            return GcdCertificate(b, zero, one, self.quotient(a, b), one)
        O, idx, (va, vb) = self._host(a, b)
        I = IntegralIdeal.from_generators(O, [va, vb])
        power = I
        for n in range(1, self.class_order_cap + 1):
            res = principal_generator(power, self.principal_slack)
            if res.principal:
                c = self._element(O, idx, res.generator)
                d = nth_root(c, n)
                g, h = self.quotient(a, d), self.quotient(b, d)
                u, v, note = self._bezout_coefficients(a, b, d)
                return GcdCertificate(d, u, v, g, h, note or f"ideal (a, b) has order {n}: d = c^(1/{n})")
            power = power * I
        raise CapExceeded(f"no principal power of (a, b) up to exponent {self.class_order_cap}")

    def _bezout_coefficients(self, a, b, d):
        """Solve a*u + b*v = d over O_L, L = Q(a, b, d), by an extended HNF."""
        try:
            O, idx, (va, vb, vd) = self._host(a, b, d)
        except CapExceeded as exc:
            return None, None, f"u, v not found (budget): {exc}"
        n = O.degree
        rows = [O.mul(va, e) for e in _unit_vectors(n)] + [O.mul(vb, e) for e in _unit_vectors(n)]
        H, U = hnf_with_transform(rows)
        x = solve_in_lattice(H, vd)
        if x is None:
            return None, None, "u, v not found: d is not in aO + bO"
        w = [sum(x[i] * U[i][j] for i in range(len(H))) for j in range(2 * n)]
        u = self._element(O, idx, w[:n])
        v = self._element(O, idx, w[n:])
        if a * u + b * v != d:
            return None, None, "u, v failed re-verification"
        return u, v, ""

    def lcm_of(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero() or b.is_zero():
            raise ValueError("lcm of zero")
        return self.gcd_bezout(a, b).g * b

    # -- radical relation ------------------------------------------------------------

    def radical_member(self, a, b) -> bool:
        """a in rad(b): every prime of O_K above (b) contains a (K = Q(a, b))."""
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero():
            return True
        if b.is_zero():
            return False
        if self.is_unit(b):
            return True
        O, _, (va, vb) = self._host(a, b)
        try:
            primes = factor_ideal(IntegralIdeal.principal(O, vb))
        except UnsupportedPrime:
            return self.radical_by_powers(a, b)
        return all(P.ideal.contains(va) for P, _ in primes)

    def radical_by_powers(self, a, b) -> bool:
        """a^k in bB with k >= every exponent in the factorization of (b)."""
        a, b = self.coerce(a), self.coerce(b)
        O, _, (_, vb) = self._host(a, b)
        k = max(1, abs(int(O.norm(vb))).bit_length())
        return self.divides(b, a ** k)

    def enumerate_elements(self, *context):
        """Elements of O_K for K = Q(context), by growing coefficient boxes."""
        if context:
            O, idx, _ = self._host(*[self.coerce(x) for x in context])
        else:
            O, idx = ring_of_integers(self.one().field), 0
        n = O.degree
        yield self.zero()
        for r in count(1):
            for vec in product(range(-r, r + 1), repeat=n):
                if max(map(abs, vec)) == r:
                    yield self._element(O, idx, list(vec))
