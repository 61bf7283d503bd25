"""Polynomials over F_p (lists of residues, constant term first)."""
from __future__ import annotations

import itertools

from .poly import IntPoly, as_intpoly


def is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


def reduce(f, p: int) -> list[int]:
    r = [c % p for c in f]
    while r and not r[-1]:
        r.pop()
    return r


def add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    r = list(f)
    for i, c in enumerate(g):
        r[i] = (r[i] + c) % p
    while r and not r[-1]:
        r.pop()
    return r


def sub(f, g, p):
    return add(f, [(-c) % p for c in g], p)


def mul(f, g, p):
    if not f or not g:
        return []
    r = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                r[i + j] += a * b
    return reduce(r, p)


def scale(f, c, p):
    return reduce([a * c for a in f], p)


def divmod_p(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    q = [0] * max(0, len(r) - dg)
    while r and len(r) - 1 >= dg:
        c = r[-1] * inv % p
        k = len(r) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            r[i + k] = (r[i + k] - c * b) % p
        while r and not r[-1]:
            r.pop()
    return reduce(q, p), r


def rem(f, g, p):
    return divmod_p(f, g, p)[1]


def monic(f, p):
    if not f:
        return []
    return scale(f, pow(f[-1], -1, p), p)


def gcd(f, g, p):
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def ext_gcd(f, g, p):
    """Return (d, s, t) with s*f + t*g = d monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(base, e: int, mod, p):
    result = [1]
    base = rem(base, mod, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), mod, p)
    return result


def derivative(f, p):
    return reduce([i * c for i, c in enumerate(f)][1:], p)


def _pth_root(f, p):
    # f(x) = g(x^p) with coefficients in the prime field, so g's coefficients are f's
    return [f[i] for i in range(0, len(f), p)]


def squarefree_decomposition(f, p) -> list[tuple[list[int], int]]:
    """Monic squarefree factors with multiplicities over F_p."""
    f = monic(reduce(f, p), p)
    out: dict[tuple, int] = {}

    def rec(f, mult):
        if len(f) <= 1:
            return
        df = derivative(f, p)
        if not df:
            rec(_pth_root(f, p), mult * p)
            return
        c = gcd(f, df, p)
        w = divmod_p(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = gcd(w, c, p)
            z = divmod_p(w, y, p)[0]
            if len(z) > 1:
                key = tuple(monic(z, p))
                out[key] = out.get(key, 0) + i * mult
            i += 1
            w = y
            c = divmod_p(c, y, p)[0]
        if len(c) > 1:
            rec(_pth_root(c, p), mult * p)

    rec(f, 1)
    return [(list(k), m) for k, m in out.items()]


def distinct_degree(f, p) -> list[tuple[list[int], int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_p(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _trial_polys(p, limit_degree):
    for deg in range(1, limit_degree + 1):
        for low in itertools.product(range(p), repeat=deg):
            yield list(low) + [1]


def equal_degree(f, d, p) -> list[list[int]]:
    """Split monic squarefree f whose irreducible factors all have degree d.

    Test polynomials are enumerated deterministically.
    """
    n = len(f) - 1
    if n == d:
        return [f]
    trials = _trial_polys(p, n - 1)
    while True:
        a = next(trials)
        g = gcd(f, a, p)
        if 0 < len(g) - 1 < n:
            break
        if p == 2:
            t = rem(a, f, p)
            acc = list(t)
            for _ in range(d - 1):
                t = rem(mul(t, t, p), f, p)
                acc = add(acc, t, p)
            g = gcd(f, acc, p)
        else:
            e = (p ** d - 1) // 2
            g = gcd(f, sub(powmod(a, e, f, p), [1], p), p)
        if 0 < len(g) - 1 < n:
            break
    return equal_degree(g, d, p) + equal_degree(divmod_p(f, g, p)[0], d, p)


def factor_mod_p_multiplicities(f, p: int) -> tuple[int, list[tuple[list[int], int]]]:
    """(leading coefficient, [(monic irreducible, multiplicity)]) of f over F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    f = reduce(list(as_intpoly(f).coeffs) if not isinstance(f, list) else f, p)
    if not f:
        raise ValueError("polynomial vanishes mod p")
    lead = f[-1]
    out = []
    for part, mult in squarefree_decomposition(f, p):
        for block, d in distinct_degree(part, p):
            for irr in equal_degree(block, d, p):
                out.append((irr, mult))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1]))
    return lead, out


def factor_mod_p(f, p: int) -> list[IntPoly]:
    """Multiset (sorted list with repeats) of monic irreducible factors of f over F_p."""
    _, facs = factor_mod_p_multiplicities(f, p)
    out = []
    for irr, m in facs:
        out.extend([IntPoly(irr)] * m)
    return out
