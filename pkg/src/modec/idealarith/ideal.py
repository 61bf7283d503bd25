"""Integral ideals as HNF lattices in integral-basis coordinates."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from sympy import factorint

from ..polyarith import modp
from ..polyarith.poly import IntPoly
from .hnf import hnf, solve_in_lattice
from .order import CapExceeded, RingOfIntegers, poly_discriminant


class UnsupportedPrime(ArithmeticError):
    """Prime splitting needs a generator whose index is prime to p and none was found."""


@dataclass(frozen=True)
class IntegralIdeal:
    host: RingOfIntegers
    basis: tuple  # HNF rows (tuple of tuples of int)

    def __post_init__(self):
        H = hnf([list(r) for r in self.basis])
        if len(H) != self.host.degree:
            raise ValueError("zero ideal (or not of full rank)")
        object.__setattr__(self, "basis", tuple(tuple(r) for r in H))

    @classmethod
    def from_generators(cls, host: RingOfIntegers, gens) -> IntegralIdeal:
        """Ideal generated by elements given as integral-basis vectors."""
        rows = []
        n = host.degree
        for g in gens:
            if not any(g):
                continue
            for i in range(n):
                e = [int(i == j) for j in range(n)]
                rows.append(host.mul(g, e))
        if not rows:
            raise ValueError("zero ideal")
        return cls(host, tuple(tuple(r) for r in rows))

    @classmethod
    def principal(cls, host: RingOfIntegers, g) -> IntegralIdeal:
        return cls.from_generators(host, [g])

    @classmethod
    def unit(cls, host: RingOfIntegers) -> IntegralIdeal:
        return cls.principal(host, host.one())

    def norm(self) -> int:
        return math.prod(self.basis[i][i] for i in range(len(self.basis)))

    def is_unit(self) -> bool:
        return self.norm() == 1

    def contains(self, v) -> bool:
        return solve_in_lattice([list(r) for r in self.basis], list(v)) is not None

    def contains_ideal(self, other: IntegralIdeal) -> bool:
        return all(self.contains(r) for r in other.basis)

    def __mul__(self, other: IntegralIdeal) -> IntegralIdeal:
        rows = [self.host.mul(a, b) for a in self.basis for b in other.basis]
        return IntegralIdeal(self.host, tuple(tuple(r) for r in rows))

    def __add__(self, other: IntegralIdeal) -> IntegralIdeal:
        return IntegralIdeal(self.host, self.basis + other.basis)

    def __pow__(self, e: int) -> IntegralIdeal:
        result = IntegralIdeal.unit(self.host)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, IntegralIdeal):
            return NotImplemented
        return self.host is other.host and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def generators(self) -> list:
        return [list(r) for r in self.basis]

    def __str__(self):
        gens = ", ".join(_format_element(self.host, r) for r in _two_element(self))
        return f"({gens})"


def ideal_norm(I: IntegralIdeal) -> int:
    return I.norm()


def _format_element(O: RingOfIntegers, vec) -> str:
    from ..polyarith.poly import format_poly

    return format_poly(list(O.from_basis(vec)), "θ")


def _two_element(I: IntegralIdeal):
    """A short generating set for display: the smallest integer in I plus a
    basis row that together with it generates I, if one exists."""
    O = I.host
    m = I.norm()
    # smallest positive integer in I
    one = O.one()
    for k in range(1, I.norm() + 1):
        if I.contains([k * c for c in one]):
            m = k
            break
    first = [m * c for c in one]
    if IntegralIdeal.principal(O, first) == I:
        return [first]
    for r in I.basis:
        if IntegralIdeal.from_generators(O, [first, list(r)]) == I:
            return [first, list(r)]
    return [first] + [list(r) for r in I.basis]


# -- prime splitting ------------------------------------------------------------

@dataclass(frozen=True)
class PrimeIdeal:
    ideal: IntegralIdeal
    p: int
    e: int  # ramification index
    f: int  # residue degree

    def __str__(self):
        return str(self.ideal)


def _index_of(O: RingOfIntegers, minpoly: IntPoly) -> int:
    return math.isqrt(abs(poly_discriminant(minpoly) // O.discriminant))


def _generator_prime_to(O: RingOfIntegers, p: int):
    """An element theta' of O with Q(theta') = K and p not dividing [O : Z[theta']]."""
    from ..algnum.number import _minimal_poly

    K = O.field
    theta = O.to_basis(K.generator(), check=True)
    if O.index % p:
        return theta, K.poly
    n = O.degree
    for bound in (1, 2, 3):
        for c in itertools.product(range(-bound, bound + 1), repeat=n):
            if max(map(abs, c)) != bound:
                continue
            m = _minimal_poly(K, O.from_basis(list(c)))
            if m.degree != n:
                continue
            f = m.num
            if _index_of(O, f) % p:
                return list(c), f
    raise UnsupportedPrime(f"no small generator has index prime to {p}")


def primes_above(O: RingOfIntegers, p: int) -> list[PrimeIdeal]:
    """Prime ideals over p by the Dedekind criterion (Kummer-Dedekind)."""
    gen, f = _generator_prime_to(O, p)
    out = []
    for g, e in _factor_mod_p_grouped(f, p):
        # g(gen) as an element of O
        acc = [0] * O.degree
        power = O.one()
        for c in g:
            acc = [a + c * b for a, b in zip(acc, power)]
            power = O.mul(power, gen)
        pv = [p * c for c in O.one()]
        P = IntegralIdeal.from_generators(O, [pv, acc])
        out.append(PrimeIdeal(P, p, e, len(g) - 1))
    return out


def _factor_mod_p_grouped(f: IntPoly, p: int):
    _, facs = modp.factor_mod_p_multiplicities(f, p)
    return facs


def valuation(I: IntegralIdeal, P: PrimeIdeal) -> int:
    k = 0
    Pk = P.ideal
    while Pk.contains_ideal(I):
        k += 1
        Pk = Pk * P.ideal
    return k


def factor_ideal(I: IntegralIdeal) -> list[tuple[PrimeIdeal, int]]:
    O = I.host
    out = []
    N = I.norm()
    for p in sorted(factorint(N)):
        for P in primes_above(O, p):
            v = valuation(I, P)
            if v:
                out.append((P, v))
    return out


# -- principality ----------------------------------------------------------------

PRINCIPAL_SLACK = 4
ENUMERATION_CAP = 2_000_000


def _embeddings(O: RingOfIntegers):
    """Complex embeddings of the integral basis (floats are enough to enumerate)."""
    K = O.field
    iso = K.roots
    pts = []
    for k in range(K.degree):
        d = iso.refine(k, 60)
        pts.append(complex(float(d.re), float(d.im)))
    vals = []
    for row in O.basis:
        vals.append([sum(float(c) * z ** j for j, c in enumerate(row)) for z in pts])
    return vals


def _gram(O: RingOfIntegers, rows):
    emb = _embeddings(O)
    n = O.degree
    vecs = []
    for r in rows:
        vecs.append([sum(r[i] * emb[i][k] for i in range(n)) for k in range(n)])
    return [[sum((a * b.conjugate()).real for a, b in zip(u, v)) for v in vecs] for u in vecs]


def _cholesky_q(G):
    """Fincke-Pohst quadratic form coefficients q with Q(x) = sum q_ii (x_i + sum_{j>i} q_ij x_j)^2."""
    n = len(G)
    q = [row[:] for row in G]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def short_vectors(G, bound: float, cap: int = ENUMERATION_CAP):
    """All nonzero integer x (up to sign) with x^T G x <= bound (Fincke-Pohst)."""
    n = len(G)
    q = _cholesky_q(G)
    x = [0] * n
    out = []
    count = 0
    eps = 1e-9 * max(1.0, bound)

    def rec(i, remaining):
        nonlocal count
        center = -sum(q[i][j] * x[j] for j in range(i + 1, n))
        if remaining < -eps:
            return
        span = math.sqrt(max(remaining, 0) / q[i][i]) + 1e-9
        lo, hi = math.ceil(center - span), math.floor(center + span)
        for v in range(lo, hi + 1):
            count += 1
            if count > cap:
                raise CapExceeded("principality search exceeded its enumeration cap")
            x[i] = v
            rest = remaining - q[i][i] * (v - center) ** 2
            if rest < -eps:
                continue
            if i == 0:
                if any(x):
                    out.append(list(x))
            else:
                rec(i - 1, rest)
        x[i] = 0

    rec(n - 1, bound)
    # keep one of each +-pair
    seen, uniq = set(), []
    for v in out:
        key = tuple(v)
        neg = tuple(-c for c in v)
        if neg in seen:
            continue
        seen.add(key)
        uniq.append(v)
    return uniq


@dataclass(frozen=True)
class PrincipalResult:
    generator: list | None  # integral-basis vector, or None
    complete: bool  # True when "None" certifies non-principality

    @property
    def principal(self) -> bool:
        return self.generator is not None


def _search_complete(O: RingOfIntegers) -> bool:
    # imaginary quadratic and Q: every generator has T2 = n * N^(2/n);
    # real quadratic: the unit-adjusted slack below makes the search complete
    return O.degree == 1 or O.degree == 2


def _unit_slack(O: RingOfIntegers) -> float:
    """For a real quadratic field with fundamental unit eps, some generator of
    each principal ideal has T2 <= N * (eps + 1/eps); return that factor over 2N."""
    if O.degree != 2 or O.discriminant < 0:
        return 1.0
    cached = _UNIT_SLACK.get(O.field.poly)
    if cached is not None:
        return cached
    G = _gram(O, [[int(i == j) for j in range(2)] for i in range(2)])
    emb = _embeddings(O)
    bound = 8.0
    while True:
        units = []
        for x in short_vectors(G, bound):
            if abs(O.norm(x)) == 1:
                vals = [abs(sum(x[i] * emb[i][k] for i in range(2))) for k in range(2)]
                if max(vals) > 1 + 1e-9:
                    units.append(max(vals))
        if units:
            eps = min(units)
            _UNIT_SLACK[O.field.poly] = (eps + 1 / eps) / 2 + 1e-6
            return _UNIT_SLACK[O.field.poly]
        bound *= 4


_UNIT_SLACK: dict = {}


def principal_generator(I: IntegralIdeal, slack: float = PRINCIPAL_SLACK) -> PrincipalResult:
    """Search for alpha with (alpha) = I among short vectors of the T2 form."""
    O = I.host
    n = O.degree
    N = I.norm()
    if N == 1:
        return PrincipalResult(O.one(), True)
    rows = [list(r) for r in I.basis]
    G = _gram(O, rows)
    bound = max(slack, _unit_slack(O)) * n * N ** (2 / n)
    cands = short_vectors(G, bound)
    cands.sort(key=lambda x: sum(x[i] * G[i][j] * x[j] for i in range(n) for j in range(n)))
    for x in cands:
        v = [sum(x[i] * rows[i][k] for i in range(n)) for k in range(n)]
        if abs(O.norm(v)) == N:
            return PrincipalResult(v, True)
    return PrincipalResult(None, _search_complete(O))


# -- class group ------------------------------------------------------------------

CLASS_ORDER_CAP = 8
MINKOWSKI_CAP = 200


@dataclass(frozen=True)
class ClassGroup:
    order: int
    invariants: tuple
    generators: tuple  # ((PrimeIdeal, order in the class group), ...)
    minkowski_bound: float


def minkowski_bound(O: RingOfIntegers) -> float:
    n = O.degree
    r2 = sum(1 for d in O.field.roots.disks if not d.real) // 2
    return math.factorial(n) / n ** n * (4 / math.pi) ** r2 * math.sqrt(abs(O.discriminant))


def _is_principal(I: IntegralIdeal) -> bool:
    res = principal_generator(I)
    if res.principal:
        return True
    if not res.complete:
        # widen the search once before giving up
        res = principal_generator(I, slack=PRINCIPAL_SLACK * 16)
        if res.principal:
            return True
        if not res.complete:
            raise CapExceeded("principality could not be certified (units make the search incomplete)")
    return False


def class_group(O: RingOfIntegers) -> ClassGroup:
    from sympy import primerange

    from .hnf import smith_diagonal

    if O.degree > 4:
        raise CapExceeded("class groups are limited to degree <= 4")
    M = minkowski_bound(O)
    if M > MINKOWSKI_CAP:
        raise CapExceeded(f"Minkowski bound {M:.1f} exceeds the desk-scale cap {MINKOWSKI_CAP}")
    primes = []
    for p in primerange(2, int(M) + 1):
        for P in primes_above(O, p):
            if P.ideal.norm() <= M:
                primes.append(P)
    gens: list[PrimeIdeal] = []
    indices: list[int] = []
    relations = []
    for P in primes:
        # smallest k >= 1 with P^k in the subgroup generated so far
        found = None
        Pk = IntegralIdeal.unit(O)
        for k in range(1, CLASS_ORDER_CAP + 1):
            Pk = Pk * P.ideal
            for exps in itertools.product(*[range(i) for i in indices]):
                J = Pk
                for G, e in zip(gens, exps):
                    if e:
                        J = J * (G.ideal ** e)
                if _is_principal(J):
                    found = (k, exps)
                    break
            if found:
                break
        if found is None:
            raise CapExceeded(f"class order above {CLASS_ORDER_CAP}")
        k, exps = found
        if k > 1:
            relations.append(list(exps) + [k])
            gens.append(P)
            indices.append(k)
    h = math.prod(indices)
    m = len(gens)
    rel = [r + [0] * (m - len(r)) for r in relations]
    invariants = tuple(d for d in smith_diagonal(rel) if d > 1) if rel else ()
    out = []
    for P in gens:
        Pk = P.ideal
        order = 1
        while not _is_principal(Pk):
            Pk = Pk * P.ideal
            order += 1
        out.append((P, order))
    return ClassGroup(h, invariants, tuple(out), M)


__all__ = [
    "IntegralIdeal", "PrimeIdeal", "UnsupportedPrime", "ideal_norm", "factor_ideal", "primes_above",
    "valuation", "principal_generator", "PrincipalResult", "class_group", "ClassGroup", "minkowski_bound",
    "short_vectors",
]
