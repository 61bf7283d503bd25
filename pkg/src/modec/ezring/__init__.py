from .algint import AlgIntRing
from .base import EffectiveRing, GcdCertificate, NotDivisible, PrimeConstraint, gcd_many, lcm_many
from .integers import IntRing
from .toyval import ToyVal, ToyValRing, parse_toyval

__all__ = [
    "EffectiveRing", "GcdCertificate", "NotDivisible", "PrimeConstraint", "gcd_many", "lcm_many",
    "IntRing", "ToyVal", "ToyValRing", "parse_toyval", "AlgIntRing", "make_ring",
]

RINGS = ("algint", "toyval", "int")


def make_ring(name: str, **options) -> EffectiveRing:
    if name == "int":
        return IntRing()
    if name == "toyval":
        return ToyValRing()
    if name == "algint":
        return AlgIntRing(**options)
    raise ValueError(f"unknown ring {name!r} (choose algint, toyval or int)")
