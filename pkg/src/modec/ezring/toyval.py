"""A valuation domain with value group Q and residue field Q.

Elements are quotients p/q of finite sums of c*t^e (c rational, e >= 0
rational) where q has a nonzero constant term.  The value of an element is
the least exponent occurring in its numerator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .. import literals
from .base import EffectiveRing, GcdCertificate, NotDivisible

INF = float("inf")


def _clean(terms: dict) -> dict:
    return {Fraction(e): Fraction(c) for e, c in terms.items() if c}


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return _clean(out)


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return _clean(out)


def _shift(a: dict, s: Fraction) -> dict:
    return {e + s: c for e, c in a.items()}


def _format_sum(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            mono = "t" if e == 1 else (f"t^{e}" if e.denominator == 1 else f"t^({e})")
            body = mono if c == 1 else (f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}")
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True, eq=False)
class ToyVal:
    num: tuple  # sorted ((exponent, coeff), ...)
    den: tuple = ((Fraction(0), Fraction(1)),)

    def __post_init__(self):
        num = _clean(dict(self.num))
        den = _clean(dict(self.den))
        if den.get(Fraction(0), 0) == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if not num:
            den = {Fraction(0): Fraction(1)}
        else:
            # make the denominator's constant term 1
            k = den[Fraction(0)]
            if k != 1:
                num = {e: c / k for e, c in num.items()}
                den = {e: c / k for e, c in den.items()}
        object.__setattr__(self, "num", tuple(sorted(num.items())))
        object.__setattr__(self, "den", tuple(sorted(den.items())))

    @classmethod
    def const(cls, c) -> ToyVal:
        return cls(((Fraction(0), Fraction(c)),))

    @classmethod
    def monomial(cls, e, c=1) -> ToyVal:
        e = Fraction(e)
        if e < 0:
            raise ValueError("negative exponent")
        return cls(((e, Fraction(c)),))

    @property
    def value(self):
        return self.num[0][0] if self.num else INF

    def is_zero(self) -> bool:
        return not self.num

    def lead(self) -> Fraction:
        """Residue of self / t^value (nonzero unless self is zero)."""
        return self.num[0][1] if self.num else Fraction(0)

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        n = _add(_mul(dict(self.num), dict(other.den)), _mul(dict(other.num), dict(self.den)))
        return ToyVal(tuple(n.items()), tuple(_mul(dict(self.den), dict(other.den)).items()))

    __radd__ = __add__

    def __neg__(self):
        return ToyVal(tuple((e, -c) for e, c in self.num), self.den)

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return ToyVal(tuple(_mul(dict(self.num), dict(other.num)).items()),
                      tuple(_mul(dict(self.den), dict(other.den)).items()))

    __rmul__ = __mul__

    def divide(self, other: ToyVal) -> ToyVal:
        """Exact quotient self / other inside the ring."""
        other = _lift(other)
        if other.is_zero():
            if self.is_zero():
                return self
            raise NotDivisible("division by zero")
        if self.is_zero():
            return self
        if self.value < other.value:
            raise NotDivisible(f"{other} does not divide {self}")
        # other.num = t^v * unit_part with unit_part having a nonzero constant term
        unit_part = _shift(dict(other.num), -other.value)
        num = _shift(_mul(dict(self.num), dict(other.den)), -other.value)
        den = _mul(dict(self.den), unit_part)
        return ToyVal(tuple(num.items()), tuple(den.items()))

    def __truediv__(self, other):
        return self.divide(other)

    def __rtruediv__(self, other):
        return _lift(other).divide(self)

    def __pow__(self, n: int):
        if n < 0:
            return ToyVal.const(1).divide(self ** (-n))
        r = ToyVal.const(1)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return _mul(dict(self.num), dict(other.den)) == _mul(dict(other.num), dict(self.den))

    def __hash__(self):
        # value and residue of the leading term are invariants of the element
        return hash((self.value, self.lead()))

    def __str__(self):
        n = _format_sum(dict(self.num))
        if self.den == ((Fraction(0), Fraction(1)),):
            return n
        return f"({n})/({_format_sum(dict(self.den))})"

    def __repr__(self):
        return f"ToyVal({str(self)!r})"


_ONE_DEN = ((Fraction(0), Fraction(1)),)


def _lift(x):
    if isinstance(x, ToyVal):
        return x
    if isinstance(x, (int, Fraction)):
        return ToyVal.const(x)
    return None


def parse_toyval(text: str) -> ToyVal:
    node = literals.parse_expression(text)

    def sym(name):
        if name != "t":
            raise literals.ParseError(f"unknown symbol {name!r} (ToyVal uses t)")
        return ToyVal.monomial(1)

    def power(base, exp_node):
        e = literals.constant_value(exp_node)
        if e.denominator == 1:
            return base ** int(e)
        if len(base.num) == 1 and base.num[0][1] == 1 and base.den == _ONE_DEN:
            if e < 0:
                raise literals.ParseError("negative exponent of t")
            return ToyVal.monomial(base.num[0][0] * e)
        raise literals.ParseError("fractional powers apply to powers of t only")

    return _lift(literals.evaluate(node, num=ToyVal.const, sym=sym, power=power))


class ToyValRing(EffectiveRing):
    name = "toyval"
    hypotheses_ok = True

    def parse(self, text: str) -> ToyVal:
        return parse_toyval(text)

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return _lift(x)

    def zero(self):
        return ToyVal.const(0)

    def one(self):
        return ToyVal.const(1)

    def value_of(self, a):
        return self.coerce(a).value

    def quotient(self, b, a):
        return self.coerce(b).divide(self.coerce(a))

    def divides(self, a, b) -> bool:
        a, b = self.coerce(a), self.coerce(b)
        return a.value <= b.value if not a.is_zero() else b.is_zero()

    def is_unit(self, a) -> bool:
        return self.coerce(a).value == 0

    def gcd_bezout(self, a, b) -> GcdCertificate:
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd of two zeros")
        if b.is_zero() or (not a.is_zero() and a.value <= b.value):
            c = ToyVal.monomial(a.value)
            u, v = c.divide(a), self.zero()
        else:
            c = ToyVal.monomial(b.value)
            u, v = self.zero(), c.divide(b)
        return GcdCertificate(c, u, v, a.divide(c), b.divide(c))

    def lcm_of(self, a, b):
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero() or b.is_zero():
            raise ValueError("lcm of zero")
        return ToyVal.monomial(max(a.value, b.value))

    def radical_member(self, a, b) -> bool:
        a, b = self.coerce(a), self.coerce(b)
        if a.is_zero():
            return True
        if b.is_zero():
            return False
        if b.value == 0:
            return True
        # the only nonzero prime is the maximal ideal
        return a.value > 0

    def enumerate_elements(self, *context):
        yield self.zero()
        yield self.one()
        for q in _positive_rationals():
            yield ToyVal.monomial(q)
            yield ToyVal.monomial(0) + ToyVal.monomial(q)


def _positive_rationals():
    """Calkin-Wilf enumeration of the positive rationals."""
    q = Fraction(1)
    for _ in count():
        yield q
        q = 1 / (2 * Fraction(q.numerator // q.denominator) + 1 - q)
