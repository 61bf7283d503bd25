from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .. import literals
from . import dense


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        dense.trim(c)
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def parse(cls, text: str, var: str = "x") -> IntPoly:
        p = RatPoly.parse(text, var)
        if p.den != 1:
            raise literals.ParseError(f"polynomial {text!r} has non-integer coefficients")
        return p.num

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    @staticmethod
    def _lift(other) -> list:
        if isinstance(other, IntPoly):
            return list(other.coeffs)
        if isinstance(other, int):
            return [other] if other else []
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntPoly(dense.add(list(self.coeffs), o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntPoly(dense.sub(list(self.coeffs), o))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntPoly(dense.sub(o, list(self.coeffs)))

    def __neg__(self):
        return IntPoly(dense.neg(self.coeffs))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return IntPoly(dense.mul(list(self.coeffs), o))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        return IntPoly(dense.power(list(self.coeffs), n))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def exquo(self, other) -> IntPoly:
        o = self._lift(other)
        return IntPoly(dense.exquo_int(list(self.coeffs), o))

    def __call__(self, x):
        return dense.evaluate(self.coeffs, x)

    def derivative(self) -> IntPoly:
        return IntPoly(dense.derivative(self.coeffs))

    def compose(self, other: IntPoly) -> IntPoly:
        return IntPoly(dense.compose(list(self.coeffs), list(other.coeffs)))

    def content(self) -> int:
        return abs(dense.content(self.coeffs))

    def primitive(self) -> IntPoly:
        return IntPoly(dense.primitive(list(self.coeffs)))

    def to_rat(self) -> RatPoly:
        return RatPoly(self, 1)

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self.coeffs)!r})"


@dataclass(frozen=True)
class RatPoly:
    """Polynomial over Q stored as ``num / den`` with den >= 1 coprime to content(num)."""

    num: IntPoly
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = gcd(num.content(), den) if num else den
        if g > 1:
            num = IntPoly([c // g for c in num.coeffs])
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> RatPoly:
        ints, d = dense.clear_denominators(list(coeffs))
        return cls(IntPoly(ints), d)

    @classmethod
    def parse(cls, text: str, var: str = "x") -> RatPoly:
        node = literals.parse_expression(text)

        def sym(name):
            if name != var:
                raise literals.ParseError(f"unknown variable {name!r} (expected {var!r})")
            return RatPoly(IntPoly((0, 1)))

        def num(q):
            return RatPoly.from_coeffs([q])

        def power(base, exp_node):
            return base ** literals.int_exponent(exp_node)

        value = literals.evaluate(node, num=num, sym=sym, power=power)
        return value

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num.coeffs)

    @property
    def degree(self) -> int:
        return self.num.degree

    def is_zero(self) -> bool:
        return not self.num

    def is_integral(self) -> bool:
        return self.den == 1

    def monic(self) -> RatPoly:
        if not self.num:
            return self
        return RatPoly.from_coeffs(dense.monic(self.coeffs))

    def __bool__(self):
        return bool(self.num)

    @staticmethod
    def _lift(other) -> RatPoly | None:
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, IntPoly):
            return RatPoly(other)
        if isinstance(other, (int, Fraction)):
            return RatPoly.from_coeffs([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatPoly(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatPoly(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return RatPoly(self.num * other.denominator, self.den * other.numerator)
        o = self._lift(other)
        if o is not None and o.degree == 0:
            return self / o.coeffs[0]
        raise TypeError("polynomial division by a non-constant polynomial")

    def __pow__(self, n: int):
        return RatPoly(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return dense.evaluate(self.coeffs, x)

    def derivative(self) -> RatPoly:
        return RatPoly(self.num.derivative(), self.den)

    def __str__(self):
        return format_poly(self.coeffs)

    def __repr__(self):
        return f"RatPoly({format_poly(self.coeffs)!r})"


def format_poly(coeffs, var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}*{mono}"
            else:
                body = f"({a})*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def as_intpoly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, str):
        return IntPoly.parse(p)
    if isinstance(p, RatPoly):
        if p.den != 1:
            raise ValueError(f"{p} is not an integer polynomial")
        return p.num
    return IntPoly(tuple(p))


def as_ratpoly(p) -> RatPoly:
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, IntPoly):
        return RatPoly(p)
    if isinstance(p, str):
        return RatPoly.parse(p)
    return RatPoly.from_coeffs(p)
