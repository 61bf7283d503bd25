"""The two interleaved searches deciding a in rad(b) in a Bezout domain whose
nonzero primes are maximal: powers a^n tested for membership in bB, and
elements x tested for gcd(a, x) = 1 with gcd(b, x) != 1.

a^n lies in bB iff gcd(a^n, b) is an associate of b, and gcd(a^n, b) =
gcd(a gcd(a^(n-1), b), b), so the power search carries that gcd instead of
the growing power itself."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..ezring.base import EffectiveRing

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class RadicalResult:
    answer: bool | None  # None when the budget ran out
    steps: int
    power: int | None = None  # n with a^n in bB
    witness: Any = None  # x with gcd(a, x) = 1, gcd(b, x) != 1

    @property
    def exhausted(self) -> bool:
        return self.answer is None

    def describe(self, ring: EffectiveRing) -> str:
        if self.answer is True:
            return f"true: a^{self.power} lies in bB"
        if self.answer is False:
            return f"false: x = {ring.format(self.witness)} is coprime to a but not to b"
        return f"exhausted after {self.steps} steps"


def radical_member_generic(ring: EffectiveRing, a, b, budget: int = DEFAULT_BUDGET) -> RadicalResult:
    a, b = ring.coerce(a), ring.coerce(b)
    elements = ring.enumerate_elements(a, b)
    part = ring.one()  # gcd(a^(n-1), b)
    for n in range(1, budget + 1):
        part = ring.gcd(ring.mul(a, part), b)
        if ring.associates(part, b):
            return RadicalResult(True, n, power=n)
        x = next(elements)
        if ring.coprime(a, x) and not ring.coprime(b, x):
            return RadicalResult(False, n, witness=x)
    return RadicalResult(None, budget)
