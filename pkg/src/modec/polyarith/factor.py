"""Factorization in Q[x]: Zassenhaus (Hensel lifting plus factor recombination),
with Kronecker's interpolation method for small degrees."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, isqrt

from . import dense, modp
from .poly import IntPoly, RatPoly, as_intpoly

_CANDIDATE_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                     79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157]
_PRIMES_TO_COMPARE = 5


def _symmetric(f, m):
    half = m // 2
    return dense.trim([(c % m) - m if (c % m) > half else c % m for c in f])


def _mod(f, m):
    return dense.trim([c % m for c in f])


def _hensel_pair(f, g, h, p, k):
    """Lift monic f = g*h (mod p) to mod p**k; g, h monic."""
    _, s, t = modp.ext_gcd(g, h, p)
    g, h = list(g), list(h)
    pj = p
    for _ in range(1, k):
        e = dense.sub(f, dense.mul(g, h))
        e = modp.reduce([c // pj for c in e], p)
        if e:
            q, r = modp.divmod_p(modp.mul(t, e, p), modp.reduce(g, p), p)
            upd_h = modp.add(modp.mul(s, e, p), modp.mul(q, modp.reduce(h, p), p), p)
            g = dense.add(g, [pj * c for c in r])
            h = dense.add(h, [pj * c for c in upd_h])
        pj *= p
        g, h = _mod(g, pj), _mod(h, pj)
    return g, h


def hensel_lift(f_monic, factors, p, k):
    """Lift monic modular factors of ``f_monic`` to mod p**k."""
    pk = p ** k
    if len(factors) == 1:
        return [_mod(f_monic, pk)]
    mid = len(factors) // 2
    left, right = factors[:mid], factors[mid:]
    g = [1]
    for a in left:
        g = modp.mul(g, a, p)
    h = [1]
    for a in right:
        h = modp.mul(h, a, p)
    G, H = _hensel_pair(_mod(f_monic, pk), g, h, p, k)
    return hensel_lift(G, left, p, k) + hensel_lift(H, right, p, k)


def _factor_bound(f) -> int:
    """Bound on |coefficient| of any integer factor (Mignotte)."""
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return comb(n, n // 2) * norm2 * abs(f[-1])


def _divides(g, f):
    try:
        return dense.exquo_int(f, g)
    except ArithmeticError:
        return None


def zassenhaus(f) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree f in Z[x] with deg >= 1."""
    f = dense.primitive(list(f))
    n = len(f) - 1
    if n <= 1:
        return [f]
    lead = f[-1]
    best = None
    tried = 0
    for p in _CANDIDATE_PRIMES:
        if lead % p == 0:
            continue
        fp = modp.reduce(f, p)
        if len(modp.gcd(fp, modp.derivative(fp, p), p)) > 1:
            continue
        _, facs = modp.factor_mod_p_multiplicities(fp, p)
        mods = [a for a, _ in facs]
        if best is None or len(mods) < len(best[1]):
            best = (p, mods)
        tried += 1
        if len(mods) == 1 or tried >= _PRIMES_TO_COMPARE:
            break
    if best is None:
        return kronecker(f)
    p, mods = best
    if len(mods) == 1:
        return [f]
    bound = 2 * _factor_bound(f) + 1
    k = 1
    while p ** k <= bound:
        k += 1
    pk = p ** k
    inv_lead = pow(lead, -1, pk)
    f_monic = _mod([c * inv_lead for c in f], pk)
    lifted = hensel_lift(f_monic, mods, p, k)

    result = []
    cur = f
    size = 1
    while 2 * size <= len(lifted):
        found = False
        for subset in itertools.combinations(range(len(lifted)), size):
            lc_cur = cur[-1]
            g = [lc_cur]
            for i in subset:
                g = _mod(dense.mul(g, lifted[i]), pk)
            g = dense.primitive(_symmetric(g, pk))
            if not g or len(g) < 2:
                continue
            quotient = _divides(g, cur)
            if quotient is None:
                continue
            result.append(g)
            cur = dense.primitive(quotient)
            lifted = [a for i, a in enumerate(lifted) if i not in subset]
            found = True
            break
        if not found:
            size += 1
    if len(cur) > 1:
        result.append(cur)
    return result


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    ds = set(small) | {n // d for d in small}
    return sorted(ds | {-d for d in ds})


def _interpolate(xs, ys):
    """Lagrange interpolation over Q."""
    poly: list = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = [Fraction(yi)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                term = dense.mul(term, [-xj, 1])
                denom *= xi - xj
        poly = dense.add(poly, [c / denom for c in term])
    return poly


def kronecker(f) -> list[list[int]]:
    """Irreducible factors by Kronecker's method (practical for degree <= 4 or so)."""
    f = dense.primitive(list(f))
    n = len(f) - 1
    if n <= 1:
        return [f]
    for x0 in range(-n, n + 1):
        if dense.evaluate(f, x0) == 0:
            q = dense.exquo_int(f, [-x0, 1])
            return [[-x0, 1]] + kronecker(q)
    for d in range(1, n // 2 + 1):
        xs = list(range(-(d // 2), d - d // 2 + 1))[: d + 1]
        values = [dense.evaluate(f, x) for x in xs]
        for ys in itertools.product(*[_divisors(v) for v in values]):
            if ys[0] < 0:
                continue
            g = _interpolate(xs, ys)
            if len(g) - 1 != d or any(Fraction(c).denominator != 1 for c in g):
                continue
            g = dense.primitive([int(c) for c in g])
            q = _divides(g, f)
            if q is not None:
                return kronecker(g) + kronecker(q)
    return [f]


def factor_with_multiplicity(f) -> tuple[Fraction, list[tuple[IntPoly, int]]]:
    """Return (unit, [(irreducible primitive factor, multiplicity)]) with
    f = unit * prod(factor**m); factors have positive leading coefficient."""
    if isinstance(f, RatPoly):
        unit0 = Fraction(1, f.den)
        f = f.num
    else:
        unit0 = Fraction(1)
        f = as_intpoly(f)
    if not f:
        raise ValueError("zero polynomial")
    coeffs = list(f.coeffs)
    prim = dense.primitive(coeffs)
    out: dict[tuple, int] = {}
    zeros = 0
    while prim and prim[0] == 0:
        prim = prim[1:]
        zeros += 1
    if zeros:
        out[(0, 1)] = zeros
    for part, mult in dense.yun_int(prim):
        pieces = kronecker(part) if len(part) - 1 <= 2 else zassenhaus(part)
        for g in pieces:
            key = tuple(dense.primitive(g))
            out[key] = out.get(key, 0) + mult
    prod = [1]
    for key, m in out.items():
        prod = dense.mul(prod, dense.power(list(key), m))
    unit = unit0 * Fraction(coeffs[-1], prod[-1])
    facs = sorted(((IntPoly(k), m) for k, m in out.items()), key=lambda t: (t[0].degree, t[0].coeffs))
    return unit, facs


def factor_over_Q(f) -> list[IntPoly]:
    """Irreducible factors over Q as a multiset (sorted list with repeats)."""
    _, facs = factor_with_multiplicity(f)
    out = []
    for g, m in facs:
        out.extend([g] * m)
    return out


def is_irreducible(f) -> bool:
    f = as_intpoly(f)
    if f.degree < 1:
        return False
    facs = factor_over_Q(f)
    return len(facs) == 1 and facs[0].degree == f.degree


def squarefree_part(f) -> IntPoly:
    return IntPoly(dense.squarefree_part_int(list(as_intpoly(f).coeffs)))


def poly_gcd(f, g) -> RatPoly:
    """Monic gcd in Q[x]."""
    from .poly import as_ratpoly

    f, g = as_ratpoly(f), as_ratpoly(g)
    if not f and not g:
        raise ValueError("gcd of two zero polynomials")
    return RatPoly.from_coeffs(dense.gcd_rat(list(f.coeffs), list(g.coeffs)))
