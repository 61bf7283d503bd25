from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy

from modec.algnum import (AlgebraicNumber, NotRealError, alg_add, alg_div, alg_mul, compare_real,
                          compose_fields, is_algebraic_integer, minimal_poly, parse_algebraic, root_of)
from modec.polyarith import IntPoly, sum_resultant
from oracles import rat_coeffs, sympy_minpoly, to_sympy

S2 = root_of("x^2-2", 1)
S3 = root_of("x^2-3", 1)
I = root_of("x^2+1", 1)
R = parse_algebraic


def test_root_indices_are_canonical():
    # roots sorted by real part, then imaginary part
    assert root_of("x^3-2", 2).approx().imag == 0
    assert S2.approx().real == pytest.approx(2 ** 0.5)
    assert root_of("x^2-2", 0).approx().real == pytest.approx(-2 ** 0.5)
    assert I.approx().imag == pytest.approx(1.0)
    assert R("1 + root(x^2+5, 1)").approx() == pytest.approx(1 + 5 ** 0.5 * 1j)


def test_compose_sqrt2_sqrt3():
    K, idx, a, b = compose_fields(S2, S3)
    assert K.poly == IntPoly.parse("x^4-10*x^2+1")
    assert AlgebraicNumber(K, a, idx) == S2 and AlgebraicNumber(K, b, idx) == S3
    # the images satisfy their minimal polynomials inside K
    assert K.mul(a, a) == K.element([2]) and K.mul(b, b) == K.element([3])


def test_compose_with_rational_and_disjoint_quadratics():
    K, _, a, b = compose_fields(S2, AlgebraicNumber.rational(5))
    assert K is S2.field and a == S2.coords and b == K.element([5])
    K, *_ = compose_fields(I, S2)
    assert K.degree == 4


@pytest.mark.parametrize("value,expr", [
    (lambda: alg_add(S2, S3), sympy.sqrt(2) + sympy.sqrt(3)),
    (lambda: alg_mul(S2, S3), sympy.sqrt(6)),
    (lambda: R("1/2"), sympy.Rational(1, 2)),
    (lambda: alg_div(2, S2), sympy.sqrt(2)),
    (lambda: R("(1+root(x^2-5,1))/2"), (1 + sympy.sqrt(5)) / 2),
    (lambda: R("root(x^3-2,2) + root(x^2+1,1)"), sympy.cbrt(2) + sympy.I),
])
def test_minimal_poly_against_sympy(value, expr):
    assert rat_coeffs(minimal_poly(value())) == sympy_minpoly(expr)


def test_identities():
    assert alg_add(S2, 0) == S2
    assert alg_add(1, 1) == 2 and rat_coeffs(minimal_poly(alg_add(1, 1))) == (-2, 1)
    assert alg_mul(S2, 1) == S2
    assert alg_mul(S2, S2) == 2
    assert alg_div(S2, S2) == 1
    assert alg_div(1, 2) == Fraction(1, 2)
    assert alg_mul(alg_div(S2, S3), S3) == S2
    with pytest.raises(ZeroDivisionError):
        alg_div(S2, 0)


def test_generator_minpoly_is_defining_poly():
    a = root_of("x^3-x-1", 0)
    assert rat_coeffs(minimal_poly(a)) == (-1, -1, 0, 1)


@pytest.mark.parametrize("text,integral,cert", [
    ("(1+root(x^2-5,1))/2", True, (-1, -1, 1)),
    ("1/2", False, None),
    ("root(x^2-2,1)/2", False, None),
    ("root(x^2+1,1) + root(x^2-2,1)", True, None),
])
def test_integrality(text, integral, cert):
    ok, c = is_algebraic_integer(R(text))
    assert ok is integral
    if cert:
        assert c.coeffs == cert
    if ok:
        assert c.is_monic()


# generator pools whose composita stay at degree <= 8 (composition cost grows fast with degree)
POOLS = [[S2, S3, I], [root_of("x^3-2", 0), root_of("x^2+x+1", 1)]]


def _samples(rng, n, pool):
    return [alg_add(alg_mul(rng.randint(-3, 3), rng.choice(pool)), rng.randint(-3, 3)) for _ in range(n)]


def test_field_axioms_on_samples():
    rng = random.Random(7)
    for pool in POOLS:
        xs = _samples(rng, 9, pool)
        for a, b, c in zip(xs, xs[3:], xs[6:]):
            assert a + b == b + a and a * b == b * a
            assert (a + b) + c == a + (b + c) and (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_sum_minpoly_divides_resultant():
    rng = random.Random(8)
    xs = _samples(rng, 6, POOLS[0]) + _samples(rng, 4, POOLS[1])
    for a, b in zip(xs[::2], xs[1::2]):
        fa, fb = minimal_poly(a), minimal_poly(b)
        if fa.den != 1 or fb.den != 1:
            continue
        h = to_sympy(sum_resultant(fa.num, fb.num))
        assert sympy.rem(h, to_sympy(minimal_poly(a + b))).is_zero


def test_integer_closure():
    rng = random.Random(9)
    xs = _samples(rng, 6, POOLS[0]) + _samples(rng, 6, POOLS[1])
    for a, b in zip(xs[::2], xs[1::2]):
        assert is_algebraic_integer(a)[0] and is_algebraic_integer(b)[0]
        assert is_algebraic_integer(a + b)[0] and is_algebraic_integer(a * b)[0]


# -- real comparison --------------------------------------------------------------

def test_compare_examples():
    assert compare_real(S2 + 1, 3) == -1
    assert compare_real(S2, S2) == 0
    assert compare_real(R("root(x^2-5,1) - 1"), 1) == 1


def test_compare_rejects_nonreal():
    with pytest.raises(NotRealError):
        compare_real(I, 0)


def test_compare_is_a_total_order_matching_high_precision():
    import mpmath
    rng = random.Random(10)
    gens = [S2, S3, root_of("x^3-2", 2), root_of("x^3-3*x-1", 1)]
    xs = [alg_add(alg_mul(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), rng.choice(gens)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 3))) for _ in range(14)]
    mpmath.mp.prec = 80
    approx = {}
    for x in xs:
        m = minimal_poly(x)
        roots = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(rat_coeffs(m))],
                                 maxsteps=200, extraprec=200)
        approx[id(x)] = min((r for r in roots if abs(mpmath.im(r)) < 1e-20),
                            key=lambda r: abs(r - x.approx().real)).real
    for a in xs:
        for b in xs:
            c = compare_real(a, b)
            assert c == -compare_real(b, a)
            d = approx[id(a)] - approx[id(b)]
            if abs(d) > mpmath.mpf(2) ** -64:
                assert c == (1 if d > 0 else -1)
            else:
                assert c == 0
    order = sorted(range(len(xs)), key=lambda i: approx[id(xs[i])])
    for i, j, k in zip(order, order[1:], order[2:]):
        if compare_real(xs[i], xs[j]) <= 0 and compare_real(xs[j], xs[k]) <= 0:
            assert compare_real(xs[i], xs[k]) <= 0
