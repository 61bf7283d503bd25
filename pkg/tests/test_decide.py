from __future__ import annotations

import random
from fractions import Fraction

import pytest

from modec.decide import (And, AlignedPair, Atom, Not, Or, ResourceError, SentenceSyntaxError,
                          decide_sentence, inclusion_holds, make_pair, normalize_pair, pair_is_empty,
                          parse_sentence, radical_member_generic)
from modec.decide.pairs import ZeroElementError
from modec.ezring import AlgIntRing, IntRing, ToyVal, ToyValRing
from modec.zgspec import HalfOpenInterval, interval_covers
from oracles import cyclic_levels, cyclic_open, grid

F = Fraction
Z, T, A = IntRing(), ToyValRing(), AlgIntRing()


def tv(e) -> ToyVal:
    return ToyVal.monomial(F(e))


def aligned(ring, a, b, c, d) -> AlignedPair:
    return normalize_pair(ring, make_pair(ring, a, b, c, d))


# -- parsing ---------------------------------------------------------------------------

def test_parse_examples():
    atom = parse_sentence("Inv(1,3; 3,1) >= 2", Z)
    assert isinstance(atom, Atom) and atom.k == 2
    assert atom.pair.elements() == (1, 3, 3, 1)
    tree = parse_sentence("~(Inv(2,5; 6,5) >= 2) | (Inv(1,3; 3,1) >= 2)", Z)
    assert isinstance(tree, Or) and isinstance(tree.args[0], Not) and isinstance(tree.args[1], Atom)
    tree = parse_sentence("Inv(1,3;3,1)>=2 & ~Inv(1,1;1,1)>=1 | Inv(2,2;2,2)>=3", Z)
    assert isinstance(tree, Or) and isinstance(tree.args[0], And)


def test_parse_algebraic_elements():
    atom = parse_sentence("Inv(1 + root(x^2+5,1), 2; 2, (root(x^2-2,1))) >= 2", A)
    assert A.eq(atom.pair.b, A.parse("2"))


@pytest.mark.parametrize("text,msg", [
    ("Inv(1,0; 1,1) >= 2", "zero annihilator element"),
    ("Inv(0,1; 1,1) >= 2", "zero divisibility element"),
    ("Inv(1,1; 1,1) >= 0", "at least 1"),
    ("Inv(1,1; 1,1)", "'>='"),
    ("Inv(1,1; 1,1) >= 2 &", "expected"),
    ("Inv(1,1; 1,1) >= 2 )", "trailing"),
])
def test_parse_errors(text, msg):
    with pytest.raises(SentenceSyntaxError, match=msg):
        parse_sentence(text, Z)


def test_make_pair_rejects_zero():
    with pytest.raises(ZeroElementError):
        make_pair(Z, 1, 1, 0, 1)


# -- normalization and emptiness -----------------------------------------------------------

def test_normalize_examples():
    p = aligned(Z, 2, 12, 8, 3)
    assert (p.a, p.b, p.g, p.h) == (2, 12, 4, 4)
    q = normalize_pair(Z, p)
    assert (q.a, q.b, q.c, q.d, q.g, q.h) == (p.a, p.b, p.c, p.d, p.g, p.h)
    p = aligned(T, tv(1), tv(2), tv(3), tv(F(1, 2)))
    assert [T.value_of(x) for x in (p.a, p.b, p.g, p.h)] == [1, 2, 2, F(3, 2)]
    assert p.check(T)


@pytest.mark.parametrize("pair,empty", [((1, 3, 2, 3), True), ((1, 4, 2, 2), False), ((2, 5, 6, 5), True)])
def test_pair_is_empty_examples(pair, empty):
    assert pair_is_empty(Z, aligned(Z, *pair)) is empty


def _rand_pair(rng, den=3, top=3):
    return [tv(F(rng.randint(0, top * den), den)) for _ in range(4)]


def test_normalize_preserves_open_sets_in_cyclic_modules():
    # phi and phi' = phi + psi generate the same sum with psi in every V / t^q V
    rng = random.Random(40)
    for _ in range(150):
        elems = _rand_pair(rng)
        p = aligned(T, *elems)
        va, vb, vc, vd = (T.value_of(x) for x in elems)
        va2, vb2 = T.value_of(p.a), T.value_of(p.b)
        opens = []
        for q in grid(6, 7)[1:]:
            phi, psi = cyclic_levels(q, va, vb, vc, vd)
            phi2, _ = cyclic_levels(q, va2, vb2, vc, vd)
            assert min(phi, psi) == min(phi2, psi)
            opens.append(cyclic_open(q, va, vb, vc, vd))
        assert pair_is_empty(T, p) == (not any(opens))


# -- inclusion ---------------------------------------------------------------------------

def _direct_interval(p: AlignedPair):
    """At the unique nonzero prime of ToyVal: (v(ad), v(bc)] when g, h are non-units."""
    if T.value_of(p.g) == 0 or T.value_of(p.h) == 0:
        return None
    lo, hi = T.value_of(p.left(T)), T.value_of(p.right(T))
    return HalfOpenInterval(lo, hi) if lo < hi else None


def direct_inclusion(target, cover) -> bool:
    iv = _direct_interval(target)
    if iv is None:
        return True
    return bool(interval_covers(iv, [c for c in map(_direct_interval, cover) if c is not None]))


def test_inclusion_toyval_example():
    target = aligned(T, tv(0), tv(2), tv(1), tv(1))       # (1, 3]
    covers = [aligned(T, tv(0), tv(1), tv(1), tv(0)),     # (0, 2]
              aligned(T, tv(1), tv(2), tv(2), tv(1))]     # (2, 4]
    assert _direct_interval(target) == HalfOpenInterval(1, 3)
    assert [_direct_interval(c) for c in covers] == [HalfOpenInterval(0, 2), HalfOpenInterval(2, 4)]
    res = inclusion_holds(T, target, covers)
    assert not res.holds and "internal point" in res.reason
    assert not interval_covers(HalfOpenInterval(1, 3), [HalfOpenInterval(0, 2), HalfOpenInterval(2, 4)])
    assert not T.radical_member(res.witness.must_avoid, res.witness.must_contain)


def test_inclusion_algint_example():
    target = aligned(A, 1, 4, 2, 2)
    assert A.associates(target.g, A.parse("2")) and A.associates(target.h, A.parse("2"))
    res = inclusion_holds(A, target, [])
    assert not res.holds
    assert A.associates(res.witness.must_contain, A.parse("2")) and A.is_unit(res.witness.must_avoid)
    assert not A.radical_member(A.one(), A.parse("2"))


def test_inclusion_self_cover_and_empty_target():
    for ring, elems in ((T, (tv(0), tv(2), tv(1), tv(1))), (A, (1, 4, 2, 2))):
        p = aligned(ring, *elems)
        assert inclusion_holds(ring, p, [p]).holds
    assert inclusion_holds(A, aligned(A, 2, 5, 6, 5), []).holds


def rand_aligned(rng, den=2, top=2, live=0.85) -> AlignedPair:
    """c = g a and b = d h with g, h non-units with probability live."""
    va, vd = (F(rng.randint(0, top * den), den) for _ in range(2))
    vg, vh = (F(rng.randint(1, top * den), den) for _ in range(2))
    if rng.random() > live:
        vg = F(0)
    return aligned(T, tv(va), tv(vd + vh), tv(va + vg), tv(vd))


def test_inclusion_matches_direct_route():
    rng = random.Random(41)
    outcomes = set()
    for _ in range(150):
        target = rand_aligned(rng)
        cover = [rand_aligned(rng) for _ in range(rng.randint(0, 3))]
        res = inclusion_holds(T, target, cover)
        assert res.holds == direct_inclusion(target, cover)
        outcomes.add((pair_is_empty(T, target), res.holds))
        if not res.holds:
            assert not T.radical_member(res.witness.must_avoid, res.witness.must_contain)
    assert outcomes == {(True, True), (False, True), (False, False)}


GAUSS_PRIMES = [(1, 1), (3, 0), (2, 1), (2, -1)]


def _gval(z, pi) -> int:
    """Valuation of a nonzero Gaussian integer z = (x, y) at the prime pi."""
    (x, y), (p, q) = z, pi
    n, v = p * p + q * q, 0
    while True:
        re, im = x * p + y * q, y * p - x * q  # z * conj(pi)
        if re % n or im % n:
            return v
        x, y, v = re // n, im // n, v + 1


def _gmul(u, w):
    return u[0] * w[0] - u[1] * w[1], u[0] * w[1] + u[1] * w[0]


def gaussian_inclusion(target, cover) -> bool:
    """Direct route prime by prime; pairs are tuples of Gaussian integers (a, b, c, d)."""
    def interval(pr, pi):
        a, b, c, d = pr
        vg = _gval(c, pi) - _gval(a, pi)
        vh = _gval(b, pi) - _gval(d, pi)
        if vg <= 0 or vh <= 0:
            return None
        return HalfOpenInterval(_gval(_gmul(a, d), pi), _gval(_gmul(b, c), pi))
    for pi in GAUSS_PRIMES:
        iv = interval(target, pi)
        if iv is not None:
            if not interval_covers(iv, [c for c in (interval(x, pi) for x in cover) if c is not None]):
                return False
    return True


def test_inclusion_in_gaussian_integers_per_prime():
    rng = random.Random(42)
    gens = GAUSS_PRIMES

    def draw_aligned():
        # c = g a and b = d h built from small products of Gaussian primes
        def prod(k):
            z = (1, 0)
            for _ in range(k):
                z = _gmul(z, rng.choice(gens))
            return z
        a, d, g, h = prod(rng.randint(0, 1)), prod(rng.randint(0, 1)), prod(rng.randint(0, 2)), prod(rng.randint(0, 2))
        return a, _gmul(d, h), _gmul(g, a), d

    def to_alg(z):
        return A.parse(f"{z[0]} + ({z[1]})*root(x^2+1,1)")

    outcomes = set()
    for _ in range(25):
        target = draw_aligned()
        cover = [draw_aligned() for _ in range(rng.randint(0, 2))]
        res = inclusion_holds(A, aligned(A, *map(to_alg, target)), [aligned(A, *map(to_alg, c)) for c in cover])
        assert res.holds == gaussian_inclusion(target, cover)
        outcomes.add(res.holds)
        if not res.holds:
            assert not A.radical_member(res.witness.must_avoid, res.witness.must_contain)
    assert outcomes == {True, False}


def test_inclusion_refuses_int_and_caps_covers():
    with pytest.raises(ValueError):
        inclusion_holds(Z, aligned(Z, 1, 4, 2, 2), [])
    p = aligned(T, tv(0), tv(2), tv(1), tv(1))
    with pytest.raises(ResourceError):
        inclusion_holds(T, p, [p] * 5)
    assert inclusion_holds(T, p, [p] * 5, cover_cap=5).holds


# -- radical relation -------------------------------------------------------------------

def test_radical_generic_examples():
    r = radical_member_generic(Z, 2, 4)
    assert r.answer is True and r.power == 2
    r = radical_member_generic(Z, 2, 6)
    assert r.answer is False and abs(r.witness) == 3
    r = radical_member_generic(Z, 6, 12)
    assert r.answer is True and r.power == 2


def test_radical_generic_budget():
    r = radical_member_generic(Z, 2, 3 ** 20, budget=3)
    assert r.exhausted and r.steps == 3


def test_radical_generic_never_contradicts_exact():
    rng = random.Random(43)
    for _ in range(60):
        a, b = rng.randint(1, 200), rng.randint(1, 200)
        r = radical_member_generic(Z, a, b, budget=5000)
        if not r.exhausted:
            assert r.answer == Z.radical_member(a, b)
    elems = [A.parse(s) for s in ("2", "1+root(x^2+1,1)", "3", "2+root(x^2+1,1)", "6")]
    for a in elems:
        for b in elems:
            r = radical_member_generic(A, a, b, budget=2000)
            if not r.exhausted:
                assert r.answer == A.radical_member(a, b)


# -- sentences ----------------------------------------------------------------------------

@pytest.mark.parametrize("text,verdict", [
    ("Inv(1,4; 2,2) >= 2 | ~(Inv(1,4; 2,2) >= 2)", "VALID"),
    ("Inv(1,3; 3,1) >= 1", "VALID"),
    ("~(Inv(2,5; 6,5) >= 2)", "VALID"),
    ("~(Inv(1,4; 2,2) >= 2)", "INVALID"),
])
def test_sentence_examples(text, verdict):
    d = decide_sentence(A, text)
    assert d.verdict == verdict
    for w in d.witnesses:
        assert not A.radical_member(w.constraint.must_avoid, w.constraint.must_contain)
    if verdict == "INVALID":
        assert d.witnesses and "INVALID" in d.describe(A)


def test_sentence_refuses_int():
    with pytest.raises(ValueError):
        decide_sentence(Z, "Inv(1,3; 3,1) >= 1")


TOY_ATOMS = ["Inv(1, t^2; t, t) >= 2", "Inv(1, t; t, 1) >= 2", "Inv(t, t^2; t^2, t) >= 2",
             "Inv(1, 1; t, 1) >= 2", "Inv(1, t^3; t^(1/2), t) >= 3"]


def _random_sentence(rng, depth=2):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(TOY_ATOMS)
    op = rng.choice(["&", "|", "~"])
    if op == "~":
        return f"~({_random_sentence(rng, depth - 1)})"
    return f"({_random_sentence(rng, depth - 1)}) {op} ({_random_sentence(rng, depth - 1)})"


def test_sentence_monotonicity_and_witnesses():
    rng = random.Random(44)
    valid_seen = 0
    for _ in range(30):
        s = _random_sentence(rng)
        d = decide_sentence(T, s)
        for w in d.witnesses:
            assert not T.radical_member(w.constraint.must_avoid, w.constraint.must_contain)
        if d.valid:
            valid_seen += 1
            assert decide_sentence(T, f"({s}) | ({_random_sentence(rng)})").valid
        assert decide_sentence(T, f"({s}) | ~({s})").valid
    assert valid_seen > 0


def test_toyval_covering_sentence():
    # the open of (1, 3] is not covered by those of (0, 2] and (2, 4]: a module can meet the first alone
    target, low, high = "Inv(1, t^2; t, t) >= 2", "Inv(1, t; t, 1) >= 2", "Inv(t, t^2; t^2, t) >= 2"
    assert not decide_sentence(T, f"~({target}) | ({low}) | ({high})").valid
    # (0, 2] and (2, 4] do lie inside (0, 4]
    assert decide_sentence(T, f"~({low}) | Inv(1, t^2; t^2, 1) >= 2").valid
