"""Basic pp-pairs (a|x & xb=0) / (c|x + xd=0), their alignment and emptiness."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..ezring.base import EffectiveRing

ROLES = ("a", "b", "c", "d")


class ZeroElementError(ValueError):
    pass


@dataclass(frozen=True)
class BasicPair:
    """phi = (a | x and x b = 0), psi = (c | x + x d = 0); all elements nonzero."""

    a: Any
    b: Any
    c: Any
    d: Any

    def elements(self):
        return self.a, self.b, self.c, self.d

    def text(self, ring: EffectiveRing) -> str:
        a, b, c, d = (ring.format(x) for x in self.elements())
        return f"Inv({a},{b}; {c},{d})"


@dataclass(frozen=True)
class AlignedPair(BasicPair):
    """A basic pair with c = g a and b = d h."""

    g: Any = None
    h: Any = None

    def check(self, ring: EffectiveRing) -> bool:
        return ring.eq(ring.mul(self.g, self.a), self.c) and ring.eq(ring.mul(self.d, self.h), self.b)

    def left(self, ring: EffectiveRing):
        """ad: the projected interval is (v(ad), v(bc)] at every prime containing g and h."""
        return ring.mul(self.a, self.d)

    def right(self, ring: EffectiveRing):
        return ring.mul(self.b, self.c)


def make_pair(ring: EffectiveRing, a, b, c, d) -> BasicPair:
    elems = [ring.coerce(x) for x in (a, b, c, d)]
    for role, x in zip(ROLES, elems):
        if ring.is_zero(x):
            kind = "annihilator" if role in "bd" else "divisibility"
            raise ZeroElementError(f"zero {kind} element ({role} = 0)")
    return BasicPair(*elems)


def normalize_pair(ring: EffectiveRing, p: BasicPair) -> AlignedPair:
    """Replace phi by phi + psi: a' = gcd(a, c), b' = lcm(b, d), c = g a', b' = d h."""
    a2 = ring.gcd(p.a, p.c)
    b2 = ring.lcm_of(p.b, p.d)
    g = ring.quotient(p.c, a2)
    h = ring.quotient(b2, p.d)
    out = AlignedPair(a2, b2, p.c, p.d, g, h)
    assert out.check(ring)
    return out


def pair_is_empty(ring: EffectiveRing, p: AlignedPair) -> bool:
    """The open set (phi/psi) is empty iff g and h are coprime."""
    return ring.coprime(p.g, p.h)
