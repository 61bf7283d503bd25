from __future__ import annotations

from fractions import Fraction

import mpmath

from ..algnum.field import number_field
from ..algnum.number import AlgebraicNumber, _integer_model
from ..algnum.roots import _to_fraction, isolator
from ..polyarith.factor import factor_over_Q
from ..polyarith.poly import IntPoly


def _principal_root_approx(c: AlgebraicNumber, n: int, bits: int):
    """Approximation of the principal n-th root, argument in (-pi/n, pi/n]."""
    while True:
        e = c.enclosure(bits)
        if c.is_real() or e.re > e.radius or abs(e.im) > e.radius:
            break
        # nonreal c whose enclosure still touches the negative real axis
        bits *= 2
    with mpmath.workprec(bits + 20):
        re = mpmath.mpf(e.re.numerator) / e.re.denominator
        if c.is_real():
            if re < 0:
                return mpmath.root(-re, n) * mpmath.expjpi(mpmath.mpf(1) / n)
            return mpmath.root(re, n)
        im = mpmath.mpf(e.im.numerator) / e.im.denominator
        return mpmath.root(mpmath.mpc(re, im), n)


def _from_factor(phi: IntPoly, k: int) -> AlgebraicNumber:
    """Root number k of the irreducible phi as an AlgebraicNumber."""
    if phi.lc < 0:
        phi = -phi
    c = phi.lc
    if phi.degree == 1:
        return AlgebraicNumber.rational(Fraction(-phi.coeffs[0], c))
    n = phi.degree
    # y = c*x makes phi monic; scaling by c > 0 keeps the canonical order
    monic = IntPoly([phi.coeffs[i] * c ** (n - 1 - i) for i in range(n)] + [1])
    K = number_field(monic)
    return AlgebraicNumber(K, K.scale(K.generator(), Fraction(1, c)), k)


def nth_root(c, n: int) -> AlgebraicNumber:
    """The principal n-th root d of c; d**n == c is re-verified exactly."""
    c = AlgebraicNumber.coerce(c)
    if n < 1:
        raise ValueError("n must be positive")
    if c.is_zero():
        raise ValueError("nth_root of zero")
    if n == 1:
        return c
    D, P = _integer_model(c.minimal_poly())
    # d^n = c  <=>  P(D * d^n) = 0
    coeffs = [0] * (P.degree * n + 1)
    for k, p in enumerate(P.coeffs):
        coeffs[k * n] = p * D ** k
    factors = sorted(set(factor_over_Q(IntPoly(coeffs))), key=lambda g: (g.degree, g.coeffs))
    bits = 24
    while bits <= 1 << 14:
        z = _principal_root_approx(c, n, bits)
        probe = (_to_fraction(mpmath.re(z), bits), _to_fraction(mpmath.im(z), bits),
                 Fraction(1, 1 << (bits // 2)))
        hits = [(phi, k) for phi in factors for k in isolator(phi).locate(*probe)]
        if len(hits) == 1:
            d = _from_factor(*hits[0])
            if d ** n != c:
                raise ArithmeticError("nth_root failed re-verification")
            return d
        for phi, k in hits:
            isolator(phi).refine(k, bits)
        bits *= 2
    raise ArithmeticError("nth_root: could not single out the principal root")
