"""Dense univariate polynomial helpers on plain lists, constant term first.

Coefficients may be ``int``, ``Fraction`` or any ring element supporting
the usual operators (the bivariate resultant runs these routines with
``IntPoly`` coefficients).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1 if p else -1


def lc(p):
    return p[-1]


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] = r[i] + c
    return trim(r)


def sub(p, q):
    r = list(p) + [0] * max(0, len(q) - len(p))
    for i, c in enumerate(q):
        r[i] = r[i] - c
    return trim(r)


def neg(p):
    return [-c for c in p]


def scale(p, c):
    if not c:
        return []
    return trim([c * a for a in p])


def mul(p, q):
    if not p or not q:
        return []
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            r[i + j] = r[i + j] + a * b
    return trim(r)


def power(p, n: int):
    result = [1]
    base = list(p)
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def shift(p, k: int):
    """Multiply by x**k."""
    return [0] * k + list(p) if p else []


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose(p, q):
    """p(q(x))."""
    acc: list = []
    for c in reversed(p):
        acc = add(mul(acc, q), [c] if c else [])
    return acc


def divmod_field(p, q):
    """Quotient and remainder over a field (Fraction coefficients)."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    dq = len(q) - 1
    inv = Fraction(1) / Fraction(q[-1])
    quot = [Fraction(0)] * max(0, len(r) - dq)
    while len(r) - 1 >= dq and r:
        c = r[-1] * inv
        k = len(r) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        r.pop()
        trim(r)
    return trim(quot), r


def exquo_int(p, q):
    """Exact division in Z[x]; raises ArithmeticError when not exact."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [0] * max(0, len(r) - dq)
    while r and len(r) - 1 >= dq:
        c, rem = divmod(r[-1], lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        k = len(r) - 1 - dq
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return trim(quot)


def prem(a, b):
    """Pseudo-remainder: lc(b)**(deg a - deg b + 1) * a = q*b + r."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [lead * x for x in r]
        for i, y in enumerate(b):
            r[i + k] = r[i + k] - c * y
        r.pop()
        trim(r)
        e -= 1
    if e > 0:
        f = lead ** e
        r = [f * x for x in r]
    return trim(r)


def content(p) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    if p and p[-1] < 0:
        g = -g
    return g


def primitive(p):
    """Primitive part with positive leading coefficient."""
    if not p:
        return []
    c = content(p)
    return [x // c for x in p]


def clear_denominators(p):
    """Return (integer list, d) with p = list / d."""
    d = 1
    for c in p:
        c = Fraction(c)
        d = d * c.denominator // gcd(d, c.denominator)
    return [int(Fraction(c) * d) for c in p], d


def monic(p):
    if not p:
        return []
    inv = Fraction(1) / Fraction(p[-1])
    return [Fraction(c) * inv for c in p]


def gcd_int(p, q):
    """Primitive gcd in Z[x] (positive leading coefficient)."""
    a, b = primitive(trim(list(p))), primitive(trim(list(q)))
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def gcd_rat(p, q):
    """Monic gcd in Q[x]."""
    a, _ = clear_denominators(p)
    b, _ = clear_denominators(q)
    g = gcd_int(a, b)
    return monic(g)


def squarefree_part_int(p):
    """Primitive squarefree part of an integer polynomial."""
    p = primitive(p)
    if len(p) <= 2:
        return p
    g = gcd_int(p, derivative(p))
    return primitive(exquo_int(p, g))


def yun_int(p):
    """Squarefree decomposition of a primitive integer polynomial.

    Returns [(factor, multiplicity)], factors primitive with positive lc.
    """
    p = primitive(p)
    if len(p) <= 1:
        return []
    out = []
    dp = derivative(p)
    a = gcd_int(p, dp)
    b = primitive(exquo_int(p, a))
    c = exquo_int(dp, a) if a else dp
    # work over Q to avoid content bookkeeping
    bq, cq = [Fraction(x) for x in b], [Fraction(x) for x in c]
    i = 1
    while len(bq) > 1:
        d = sub(cq, derivative(bq))
        g = gcd_rat(bq, d) if d else monic(bq)
        if len(g) > 1:
            out.append((primitive(clear_denominators(g)[0]), i))
        bq_new = divmod_field(bq, g)[0]
        cq = divmod_field(d, g)[0] if d else []
        bq = bq_new
        i += 1
    return out
