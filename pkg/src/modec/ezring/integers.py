from __future__ import annotations

from itertools import count

from sympy import factorint

from .. import literals
from .base import EffectiveRing, GcdCertificate, NotDivisible


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with a*u + b*v = g = gcd(a, b) >= 0."""
    r0, r1, s0, s1, t0, t1 = a, b, 1, 0, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


class IntRing(EffectiveRing):
    """Z, for unit-testing the ring plumbing.  Residue fields are finite, so the
    sentence decider refuses it."""

    name = "int"
    hypotheses_ok = False

    def parse(self, text: str) -> int:
        node = literals.parse_expression(text)
        q = literals.constant_value(node)
        if q.denominator != 1:
            raise literals.ParseError(f"{text!r} is not an integer")
        return int(q)

    def coerce(self, x):
        return self.parse(x) if isinstance(x, str) else int(x)

    def zero(self):
        return 0

    def one(self):
        return 1

    def quotient(self, b, a):
        if a == 0:
            if b == 0:
                return 0
            raise NotDivisible(f"{a} does not divide {b}")
        q, r = divmod(b, a)
        if r:
            raise NotDivisible(f"{a} does not divide {b}")
        return q

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def gcd_bezout(self, a, b) -> GcdCertificate:
        if a == 0 and b == 0:
            raise ValueError("gcd of two zeros")
        c, u, v = ext_gcd(a, b)
        return GcdCertificate(c, u, v, a // c, b // c)

    def coprime(self, a, b) -> bool:
        return ext_gcd(a, b)[0] == 1

    def radical_member(self, a, b) -> bool:
        if b == 0:
            return a == 0
        if a == 0:
            return True
        return all(a % p == 0 for p in factorint(abs(b)))

    def enumerate_elements(self, *context):
        yield 0
        for n in count(1):
            yield n
            yield -n
