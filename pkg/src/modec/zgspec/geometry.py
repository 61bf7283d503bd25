"""Cuts, spectrum points, rectangles and half-open intervals for a valuation
domain with value group (Q, +, <=).

A cut is either exact(s) (upper part {q : s <= q}), plus(q) (upper part
(q, inf]) or infinite (the zero ideal).  Positions are compared as s < q+ for
s <= q, with q+ standing for q + epsilon.  A pair of cuts (J, I) is drawn at
(x, y) = (J, I); sliding along x + y = const by rational offsets gives the
spectrum points, so a point is determined by its typed class-sum.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from typing import Any

from ..algnum import AlgebraicNumber, compare_real

INF = math.inf

ORDINARY, PLUS, DOUBLE_R, DOUBLE_U = "ordinary", "plus", "double_right", "double_upper"
INF_R, INF_U, INF_PT = "inf_r", "inf_u", "inf"
INFINITE_KINDS = (INF_R, INF_U, INF_PT)
POINT_KINDS = (ORDINARY, PLUS, DOUBLE_R, DOUBLE_U) + INFINITE_KINDS


def is_inf(x) -> bool:
    return isinstance(x, float) and math.isinf(x)


def as_value(x) -> Any:
    """Fraction for rationals, a real AlgebraicNumber otherwise, INF kept."""
    if is_inf(x):
        return INF
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, AlgebraicNumber):
        if x.is_rational():
            return x.as_fraction()
        if not x.is_real():
            raise ValueError(f"{x} is not real")
        return x
    raise TypeError(f"not a value: {x!r}")


def cmp_values(x, y) -> int:
    if is_inf(x) or is_inf(y):
        return 0 if is_inf(x) and is_inf(y) else (1 if is_inf(x) else -1)
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return (x > y) - (x < y)
    return compare_real(x, y)


def add_values(x, y):
    if is_inf(x) or is_inf(y):
        return INF
    return as_value(x + y)


def fmt_value(x) -> str:
    return "inf" if is_inf(x) else str(x)


# -- cuts ------------------------------------------------------------------------

@total_ordering
@dataclass(frozen=True)
class Cut:
    kind: str  # "exact" | "plus" | "infinite"
    value: Any = None

    def __post_init__(self):
        if self.kind == "infinite":
            object.__setattr__(self, "value", INF)
            return
        if self.kind not in ("exact", "plus"):
            raise ValueError(f"unknown cut kind {self.kind!r}")
        v = as_value(self.value)
        if is_inf(v):
            raise ValueError("use Cut.infinite() for the zero ideal")
        if cmp_values(v, Fraction(0)) < 0:
            raise ValueError("cuts live on the nonnegative cone")
        if self.kind == "plus" and not isinstance(v, Fraction):
            raise ValueError("plus cuts carry rationals only")
        object.__setattr__(self, "value", v)

    @classmethod
    def exact(cls, v) -> Cut:
        return cls("exact", v)

    @classmethod
    def plus(cls, q) -> Cut:
        return cls("plus", q)

    @classmethod
    def infinite(cls) -> Cut:
        return cls("infinite")

    @property
    def eps(self) -> int:
        return int(self.kind == "plus")

    def _key_cmp(self, other: Cut) -> int:
        c = cmp_values(self.value, other.value)
        return c if c else (self.eps > other.eps) - (self.eps < other.eps)

    def __lt__(self, other: Cut):
        return self._key_cmp(other) < 0

    def __str__(self):
        if self.kind == "infinite":
            return "inf"
        return f"{self.value}+" if self.kind == "plus" else str(self.value)


# -- points --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpecPoint:
    kind: str
    value: Any = None

    def __post_init__(self):
        if self.kind not in POINT_KINDS:
            raise ValueError(f"unknown point kind {self.kind!r}")
        if self.kind in INFINITE_KINDS:
            object.__setattr__(self, "value", None)
            return
        v = as_value(self.value)
        zero = cmp_values(v, Fraction(0))
        if self.kind == ORDINARY and zero <= 0:
            raise ValueError("ordinary points have positive value")
        if self.kind != ORDINARY and (not isinstance(v, Fraction) or v < 0):
            raise ValueError(f"{self.kind} points carry nonnegative rationals")
        if self.kind in (DOUBLE_R, DOUBLE_U) and v == 0:
            raise ValueError("double points sit at positive rationals")
        object.__setattr__(self, "value", v)

    @property
    def finite(self) -> bool:
        return self.kind not in INFINITE_KINDS

    @property
    def eps(self) -> int:
        """Infinitesimal offset of the class-sum: q, q_r/q_u, q_+ are q + 0, 1, 2 eps."""
        return {ORDINARY: 0, DOUBLE_R: 1, DOUBLE_U: 1, PLUS: 2}[self.kind]

    def representative(self) -> tuple[Cut, Cut]:
        """A pair of cuts (J, I) in this point's class."""
        if not self.finite:
            fin = Cut.exact(1)
            return {INF_R: (Cut.infinite(), fin), INF_U: (fin, Cut.infinite()),
                    INF_PT: (Cut.infinite(), Cut.infinite())}[self.kind]
        h = self.value / 2
        if self.kind == ORDINARY:
            return Cut.exact(h), Cut.exact(h)
        if self.kind == PLUS:
            return Cut.plus(h), Cut.plus(h)
        if self.kind == DOUBLE_R:
            return Cut.plus(h), Cut.exact(h)
        return Cut.exact(h), Cut.plus(h)

    def __str__(self):
        if not self.finite:
            return self.kind
        suffix = {ORDINARY: "", PLUS: "+", DOUBLE_R: "_r", DOUBLE_U: "_u"}[self.kind]
        return f"{self.value}{suffix}"


def point_cmp(p: SpecPoint, q: SpecPoint) -> int:
    """The natural order: q < q_r, q_u < q_+, finite < inf_r, inf_u < inf.
    Returns 0 for a point and its topological twin."""
    def key(pt):
        if pt.finite:
            return 0, pt.value, pt.eps
        return 1, Fraction(int(pt.kind == INF_PT)), 0
    (ka, va, ea), (kb, vb, eb) = key(p), key(q)
    if ka != kb:
        return -1 if ka < kb else 1
    c = cmp_values(va, vb)
    return c if c else (ea > eb) - (ea < eb)


def classify_pair(J: Cut, I: Cut) -> SpecPoint:
    """The canonical point of the class of (J, I); J is the horizontal cut."""
    if J.kind == "infinite" or I.kind == "infinite":
        if J.kind == I.kind:
            return SpecPoint(INF_PT)
        return SpecPoint(INF_R if J.kind == "infinite" else INF_U)
    for c in (J, I):
        if c.kind == "exact" and cmp_values(c.value, Fraction(0)) == 0:
            raise ValueError("the cut 0 is the unit ideal, not a point coordinate")
    s = add_values(J.value, I.value)
    if J.eps + I.eps == 2:
        return SpecPoint(PLUS, s)
    if J.eps + I.eps == 0 or not isinstance(s, Fraction):
        # an irrational sum with one plus coordinate behaves as the exact cut
        return SpecPoint(ORDINARY, s)
    return SpecPoint(DOUBLE_R if J.eps else DOUBLE_U, s)


# -- rectangles and intervals ------------------------------------------------------

def _check_range(low, high, what):
    if not isinstance(low, Fraction) or low < 0:
        raise ValueError(f"{what}: low end must be a nonnegative rational")
    if high != INF and not isinstance(high, Fraction):
        raise ValueError(f"{what}: high end must be rational or inf")
    if not low < high:
        raise ValueError(f"{what}: empty range ({low}, {fmt_value(high)}]")


@dataclass(frozen=True)
class Rectangle:
    """(x_low, x_high] x (y_low, y_high]."""

    x_low: Any
    x_high: Any
    y_low: Any
    y_high: Any

    def __post_init__(self):
        for name in ("x_low", "x_high", "y_low", "y_high"):
            object.__setattr__(self, name, as_value(getattr(self, name)))
        _check_range(self.x_low, self.x_high, "x side")
        _check_range(self.y_low, self.y_high, "y side")

    def __str__(self):
        return (f"({self.x_low},{fmt_value(self.x_high)}]x"
                f"({self.y_low},{fmt_value(self.y_high)}]")


@dataclass(frozen=True)
class HalfOpenInterval:
    """(low, high] on the diagonal; content [low_+, high] in the point order.
    When high is inf, infinite_points says which infinite points belong."""

    low: Any
    high: Any
    infinite_points: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "low", as_value(self.low))
        object.__setattr__(self, "high", as_value(self.high))
        flags = frozenset(self.infinite_points)
        object.__setattr__(self, "infinite_points", flags)
        _check_range(self.low, self.high, "interval")
        if not flags <= set(INFINITE_KINDS):
            raise ValueError(f"unknown infinite points {sorted(flags - set(INFINITE_KINDS))}")
        if self.high == INF and not flags:
            raise ValueError("an unbounded interval must contain an infinite point")
        if self.high != INF and flags:
            raise ValueError("a bounded interval contains no infinite points")

    @property
    def bounded(self) -> bool:
        return self.high != INF

    def __str__(self):
        if self.bounded:
            return f"({self.low}, {self.high}]"
        flags = self.infinite_points
        if flags == set(INFINITE_KINDS):
            return f"({self.low}, inf]"
        if len(flags) == 1 and INF_PT not in flags:
            return f"({self.low}, {next(iter(flags))})"
        return f"({self.low}, inf]{{{', '.join(k for k in INFINITE_KINDS if k in flags)}}}"


def interval_contains(iv: HalfOpenInterval, p: SpecPoint) -> bool:
    if not p.finite:
        return p.kind in iv.infinite_points
    lo = cmp_values(p.value, iv.low)
    hi = cmp_values(p.value, iv.high)
    if p.kind == ORDINARY:
        return lo > 0 and hi <= 0
    if p.kind == PLUS:
        return lo >= 0 and hi < 0
    return lo > 0 and hi < 0


def point_in_rectangle(p: SpecPoint, r: Rectangle) -> bool:
    """Can some pair of p's class be slid into r along x + y = const?"""
    if not p.finite:
        if p.kind == INF_R:
            return r.x_high == INF
        if p.kind == INF_U:
            return r.y_high == INF
        return r.x_high == INF or r.y_high == INF
    J, I = p.representative()
    s = add_values(J.value, I.value)
    # constraints on the slid x-coordinate x' (same cut kind as J); y' = s - x'
    lower, upper = [], []

    def coord(low, high, kind, flip):
        # exact cut c lies in (low, high]  <=>  low < c <= high
        # plus cut c+ lies in (low, high]  <=>  low <= c < high
        strict_lo, strict_hi = (True, False) if kind == "exact" else (False, True)
        if not flip:
            lower.append((low, strict_lo))
            if high != INF:
                upper.append((high, strict_hi))
        else:
            # low < s - x' <= high  <=>  s - high <= x' < s - low
            upper.append((add_values(s, -low), strict_lo))
            if high != INF:
                lower.append((add_values(s, -high), strict_hi))

    coord(r.x_low, r.x_high, J.kind, False)
    coord(r.y_low, r.y_high, I.kind, True)
    lo = _tightest(lower, lower_side=True)
    hi = _tightest(upper, lower_side=False)
    if hi is None:
        return True
    c = cmp_values(lo[0], hi[0])
    return c < 0 or (c == 0 and not lo[1] and not hi[1])


def _tightest(bounds, lower_side: bool):
    best = None
    for v, strict in bounds:
        if best is None:
            best = (v, strict)
            continue
        c = cmp_values(v, best[0])
        if (c > 0 if lower_side else c < 0) or (c == 0 and strict):
            best = (v, strict)
    return best


def project_rectangle(r: Rectangle) -> HalfOpenInterval:
    low = add_values(r.x_low, r.y_low)
    high = add_values(r.x_high, r.y_high)
    flags = set()
    if r.x_high == INF:
        flags |= {INF_R, INF_PT}
    if r.y_high == INF:
        flags |= {INF_U, INF_PT}
    return HalfOpenInterval(low, high, frozenset(flags))


class NonCompactIntersection(ValueError):
    pass


def intersect_intervals(u: HalfOpenInterval, v: HalfOpenInterval) -> HalfOpenInterval | None:
    low = max(u.low, v.low)
    high = min(u.high, v.high)
    if not low < high:
        return None
    flags = u.infinite_points & v.infinite_points if high == INF else frozenset()
    if high == INF and not flags:
        raise NonCompactIntersection(f"{u} and {v} meet in a set that is no finite union of intervals")
    return HalfOpenInterval(low, high, flags)


def rectangle_for(iv: HalfOpenInterval) -> Rectangle:
    """A rectangle projecting onto iv (iv must arise from some rectangle)."""
    s = iv.low
    if iv.bounded:
        half = (iv.high - s) / 2
        return Rectangle(s, s + half, 0, half)
    flags = iv.infinite_points
    if flags == set(INFINITE_KINDS):
        return Rectangle(s, INF, 0, INF)
    if flags == {INF_R, INF_PT}:
        return Rectangle(s, INF, 0, 1)
    if flags == {INF_U, INF_PT}:
        return Rectangle(s, s + 1, 0, INF)
    raise NonCompactIntersection(f"no rectangle projects onto {iv}")


def intersect_rectangles(u: Rectangle, v: Rectangle) -> list[Rectangle]:
    """Rectangles whose member points are exactly the common members of u and v."""
    iv = intersect_intervals(project_rectangle(u), project_rectangle(v))
    if iv is None:
        return []
    for r in (u, v):
        if project_rectangle(r) == iv:
            return [r]
    return [rectangle_for(iv)]
