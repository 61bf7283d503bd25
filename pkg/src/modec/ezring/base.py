"""The effectively-given Bezout domain interface."""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator


class NotDivisible(ArithmeticError):
    pass


@dataclass(frozen=True)
class GcdCertificate:
    """a*u + b*v = c, c*g = a, c*h = b.  u and v are None when the
    coefficient search ran out of budget (c, g, h are still exact)."""

    c: Any
    u: Any
    v: Any
    g: Any
    h: Any
    note: str = ""

    @property
    def complete(self) -> bool:
        return self.u is not None and self.v is not None

    def verify(self, ring: EffectiveRing, a, b) -> bool:
        ok = ring.eq(ring.mul(self.c, self.g), a) and ring.eq(ring.mul(self.c, self.h), b)
        if self.complete:
            ok = ok and ring.eq(ring.add(ring.mul(a, self.u), ring.mul(b, self.v)), self.c)
        return ok


@dataclass(frozen=True)
class PrimeConstraint:
    """There is a nonzero prime P with must_contain in P and must_avoid not in P."""

    must_contain: Any
    must_avoid: Any


class EffectiveRing(ABC):
    name = "ring"
    hypotheses_ok = False

    # -- literals --------------------------------------------------------------
    @abstractmethod
    def parse(self, text: str): ...

    def format(self, x) -> str:
        return str(x)

    def coerce(self, x):
        return self.parse(x) if isinstance(x, str) else x

    # -- ring operations ------------------------------------------------------
    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        return a * b

    def power(self, a, n: int):
        r = self.one()
        for _ in range(n):
            r = self.mul(r, a)
        return r

    # -- divisibility ------------------------------------------------------------
    @abstractmethod
    def quotient(self, b, a):
        """b / a when a divides b, else raise NotDivisible."""

    def divides(self, a, b) -> bool:
        try:
            self.quotient(b, a)
            return True
        except (NotDivisible, ZeroDivisionError):
            return False

    def is_unit(self, a) -> bool:
        return self.divides(a, self.one())

    def inverse(self, a):
        return self.quotient(self.one(), a)

    def associates(self, a, b) -> bool:
        return self.divides(a, b) and self.divides(b, a)

    # -- gcd family ----------------------------------------------------------------
    @abstractmethod
    def gcd_bezout(self, a, b) -> GcdCertificate: ...

    def gcd(self, a, b):
        return self.gcd_bezout(a, b).c

    def coprime(self, a, b) -> bool:
        return self.is_unit(self.gcd(a, b))

    def lcm_of(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            raise ValueError("lcm of zero")
        cert = self.gcd_bezout(a, b)
        return self.mul(cert.g, b)

    def colon_generator(self, a, b):
        """Generator of (a : b) = {r : b r in aB}, namely lcm(a, b) / b."""
        if self.is_zero(a) or self.is_zero(b):
            raise ValueError("colon of zero")
        d = self.quotient(self.lcm_of(a, b), b)
        assert self.divides(a, self.mul(b, d))
        return d

    @abstractmethod
    def radical_member(self, a, b) -> bool:
        """a in rad(b)."""

    def enumerate_elements(self, *context) -> Iterator:
        """A fixed enumeration of ring elements (for the generic radical test).
        Rings may restrict it to a subring determined by the context elements."""
        raise NotImplementedError


def gcd_many(ring: EffectiveRing, xs):
    xs = list(xs)
    g = xs[0]
    for x in xs[1:]:
        g = ring.gcd(g, x)
    return g


def lcm_many(ring: EffectiveRing, xs):
    xs = list(xs)
    m = xs[0]
    for x in xs[1:]:
        m = ring.lcm_of(m, x)
    return m
