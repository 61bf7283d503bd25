"""Text forms: intervals `(3, 6]`, `(1, inf]`, `(1, inf_u)`, `(1, inf]{inf_u, inf}`;
rectangles `(2,4]x(1,2]`; cuts `3`, `1+`, `inf`; points `5`, `2+`, `1_r`, `1_u`,
`inf_r`, `inf_u`, `inf`.  Values may be algebraic, e.g. `root(x^2-2, 1) + 1`."""
from __future__ import annotations

import re
from fractions import Fraction

from .. import literals
from ..algnum import parse_algebraic
from .geometry import (DOUBLE_R, DOUBLE_U, INF, INF_PT, INF_R, INF_U, INFINITE_KINDS, ORDINARY,
                       PLUS, Cut, HalfOpenInterval, Rectangle, SpecPoint, as_value)

_INTERVAL = re.compile(r"^\s*\(\s*(?P<low>[^,]+?)\s*,\s*(?P<high>[^\]\)]+?)\s*(?P<close>[\]\)])"
                       r"\s*(?:\{(?P<flags>[^}]*)\})?\s*$")
_RECTANGLE = re.compile(r"^\s*(\([^\]]*\])\s*[x×]\s*(\([^\]]*\])\s*$")


def parse_rational(text: str) -> Fraction:
    return literals.constant_value(literals.parse_expression(text))


def parse_value(text: str):
    text = text.strip()
    if text in ("inf", "oo", "∞"):
        return INF
    return as_value(parse_algebraic(text))


def parse_interval(text: str) -> HalfOpenInterval:
    m = _INTERVAL.match(text)
    if not m:
        raise literals.ParseError(f"bad interval {text!r}; expected like (3, 6] or (1, inf]")
    low = parse_rational(m["low"])
    high_text, close = m["high"].strip(), m["close"]
    if m["flags"] is not None:
        flags = {f.strip() for f in m["flags"].split(",") if f.strip()}
        if high_text != "inf":
            raise literals.ParseError("infinite point flags need an infinite right end")
        return HalfOpenInterval(low, INF, frozenset(flags))
    if high_text in ("inf", "oo", "∞"):
        return HalfOpenInterval(low, INF, frozenset(INFINITE_KINDS))
    if high_text in (INF_R, INF_U):
        return HalfOpenInterval(low, INF, frozenset({high_text}))
    if close != "]":
        raise literals.ParseError(f"bounded intervals are half-open: {text!r}")
    return HalfOpenInterval(low, parse_rational(high_text))


def _side(text: str):
    m = re.match(r"^\s*\(\s*([^,]+?)\s*,\s*([^\]]+?)\s*\]\s*$", text)
    if not m:
        raise literals.ParseError(f"bad rectangle side {text!r}")
    high = m[2].strip()
    return parse_rational(m[1]), INF if high in ("inf", "oo", "∞") else parse_rational(high)


def parse_rectangle(text: str) -> Rectangle:
    m = _RECTANGLE.match(text)
    if not m:
        raise literals.ParseError(f"bad rectangle {text!r}; expected like (2,4]x(1,2]")
    (a, b), (c, d) = _side(m[1]), _side(m[2])
    return Rectangle(a, b, c, d)


def parse_cut(text: str) -> Cut:
    text = text.strip()
    if text in ("inf", "oo", "∞"):
        return Cut.infinite()
    if text.endswith("+") and not text.endswith("++"):
        return Cut.plus(parse_rational(text[:-1].rstrip("_")))
    return Cut.exact(parse_value(text))


def parse_point(text: str) -> SpecPoint:
    text = text.strip()
    if text in (INF_R, INF_U, INF_PT):
        return SpecPoint(text)
    for suffix, kind in (("_r", DOUBLE_R), ("_u", DOUBLE_U), ("_+", PLUS), ("+", PLUS)):
        if text.endswith(suffix):
            return SpecPoint(kind, parse_rational(text[: -len(suffix)]))
    return SpecPoint(ORDINARY, parse_value(text))
