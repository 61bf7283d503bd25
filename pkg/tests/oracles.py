"""Independent oracles used by the test suite.

Nothing here calls the code under test except to convert its values.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

import sympy

X = sympy.Symbol("x")
INF = math.inf


# -- polynomials -------------------------------------------------------------------

def to_sympy(p, var=X):
    """IntPoly/RatPoly -> sympy Poly over QQ."""
    expr = sum(sympy.Rational(c.numerator, c.denominator) * var ** i
               for i, c in enumerate(rat_coeffs(p)))
    return sympy.Poly(expr, var, domain="QQ")


def rat_coeffs(p) -> tuple:
    """Coefficients (constant first) as Fractions for IntPoly, RatPoly or sympy Poly."""
    if isinstance(p, sympy.Poly):
        return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs()))
    if hasattr(p, "den"):
        return tuple(Fraction(c, p.den) for c in p.num.coeffs)
    return tuple(Fraction(c) for c in p.coeffs)


def sympy_minpoly(expr) -> tuple:
    """Monic minimal polynomial over Q, constant term first."""
    m = sympy.Poly(sympy.minimal_polynomial(expr, X), X)
    m = m.monic()
    return rat_coeffs(m)


# -- class numbers -------------------------------------------------------------------

def reduced_forms_count(D: int) -> int:
    """Number of reduced primitive positive definite forms ax^2+bxy+cy^2 of discriminant D < 0."""
    assert D < 0 and D % 4 in (0, 1)
    count = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == c):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            count += 1
        a += 1
    return count


# -- spectrum points ----------------------------------------------------------------
# A finite point is (kind, value) with kind in "o" (ordinary), "r", "u" (doubles), "p" (plus).
# Its position in the point order is value + eps with eps 0, 1, 1, 2 infinitesimals.

EPS = {"o": 0, "r": 1, "u": 1, "p": 2}


def point_key(kind: str, v: Fraction) -> tuple:
    return (v, EPS[kind])


def in_interval(kind, v, low, high, flags) -> bool:
    """Membership of a point in (low, high]: its content runs from low_+ to high."""
    if kind in ("inf_r", "inf_u", "inf"):
        return high == INF and kind in flags
    k = point_key(kind, v)
    if k < (low, 2):
        return False
    return high == INF or k <= (high, 0)


def candidate_points(endpoints) -> list:
    """Every endpoint with its doubles and plus, midpoints, a point above all, 0_+."""
    es = sorted({e for e in endpoints if e != INF} | {Fraction(0)})
    pts = [("p", Fraction(0))]
    for e in es:
        if e > 0:
            pts += [("o", e), ("r", e), ("u", e)]
        pts.append(("p", e))
    for x, y in zip(es, es[1:]):
        pts.append(("o", (x + y) / 2))
    pts.append(("o", es[-1] + 1))
    pts += [("inf_r", None), ("inf_u", None), ("inf", None)]
    return pts


def covers_by_points(target, cover, points) -> bool:
    """target, cover: (low, high, flags) triples."""
    for kind, v in points:
        if in_interval(kind, v, *target) and not any(in_interval(kind, v, *c) for c in cover):
            return False
    return True


# -- rectangles via slide search ------------------------------------------------------

def _cut_in(kind: str, c: Fraction, low, high) -> bool:
    """exact cut c in (low, high]: low < c <= high; plus cut c_+: low <= c < high."""
    if kind == "exact":
        return c > 0 and low < c and (high == INF or c <= high)
    return c >= 0 and low <= c and (high == INF or c < high)


SLIDE_KINDS = {"o": ("exact", "exact"), "p": ("plus", "plus"), "r": ("plus", "exact"),
               "u": ("exact", "plus")}


def slide_member(kind, v, rect) -> bool:
    """Is some pair (x', v - x') of the point's cut types inside the rectangle?
    Searches x' over the endpoint differences and the midpoints between them."""
    xl, xh, yl, yh = rect
    if kind == "inf_r":
        return xh == INF
    if kind == "inf_u":
        return yh == INF
    if kind == "inf":
        # the infinite point lies in every rectangle with an unbounded side
        return xh == INF or yh == INF
    jk, ik = SLIDE_KINDS[kind]
    marks = {Fraction(0), v, xl, v - yl}
    if xh != INF:
        marks.add(xh)
    if yh != INF:
        marks.add(v - yh)
    marks = sorted(m for m in marks if 0 <= m <= v)
    tries = set(marks) | {(a + b) / 2 for a, b in zip(marks, marks[1:])}
    for x in tries:
        if _cut_in(jk, x, xl, xh) and _cut_in(ik, v - x, yl, yh):
            return True
    return False


# -- Z-module evaluation ------------------------------------------------------------

def zn_phi_psi(n: int, a: int, b: int, c: int, d: int) -> tuple[set, set]:
    """phi = a|x and xb = 0, psi = c|x + xd = 0 evaluated in Z/n."""
    a_mult = {(a * y) % n for y in range(n)}
    phi = {x for x in a_mult if (x * b) % n == 0}
    c_mult = {(c * y) % n for y in range(n)}
    ann_d = {x for x in range(n) if (x * d) % n == 0}
    psi = {(u + w) % n for u in c_mult for w in ann_d}
    return phi, psi


def z_pair_open_somewhere(a, b, c, d, bound: int = 64) -> bool:
    """Does phi(M) escape psi(M) for M = Z/p^k (p^k <= bound) or M = Z?
    In Z itself phi(Z) = 0 because b != 0, so Z never contributes."""
    for p in sympy.primerange(2, bound + 1):
        q = p
        while q <= bound:
            phi, psi = zn_phi_psi(q, a, b, c, d)
            if not phi <= psi:
                return True
            q *= p
    return False


# -- cyclic modules over the toy valuation domain ------------------------------------

def cyclic_levels(q: Fraction, va, vb, vc, vd) -> tuple[Fraction, Fraction]:
    """In M = V / t^q V every submodule is {x : v(x) >= r} for a level r in [0, q]
    (level q is the zero submodule).  Returns the levels of phi(M) and psi(M)."""
    def clip(r):
        return min(max(r, Fraction(0)), q)
    phi = max(clip(va), clip(q - vb))  # aM meets ann(b)
    psi = min(clip(vc), clip(q - vd))  # cM plus ann(d)
    return phi, psi


def cyclic_open(q, va, vb, vc, vd) -> bool:
    phi, psi = cyclic_levels(q, va, vb, vc, vd)
    return phi < q and phi < psi


def grid(den: int, top: int) -> list[Fraction]:
    return [Fraction(k, den) for k in range(0, top * den + 1)]


def all_pairs(xs):
    return [(x, y) for x, y in product(xs, xs)]
