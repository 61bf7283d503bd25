"""Algebraic numbers as coordinates in a host number field with a root index."""
from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, lcm

from .. import linalg, literals
from ..polyarith import dense
from ..polyarith.factor import factor_over_Q, squarefree_part
from ..polyarith.poly import IntPoly, RatPoly, as_intpoly, as_ratpoly
from ..polyarith.resultant import bivariate_resultant
from .field import NumberField, number_field, rationals
from .roots import Disk, isolator, sqrt_upper


class NotRealError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    field: NumberField
    coords: tuple
    root_index: int = 0
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coords", self.field.element(self.coords))
        if not 0 <= self.root_index < self.field.degree:
            raise ValueError("root index out of range")

    # -- construction --------------------------------------------------------

    @classmethod
    def rational(cls, q) -> AlgebraicNumber:
        return cls(rationals(), (Fraction(q),), 0)

    @classmethod
    def generator(cls, poly, index: int) -> AlgebraicNumber:
        K = number_field(poly)
        return cls(K, K.generator(), index)

    @classmethod
    def root(cls, poly, index: int) -> AlgebraicNumber:
        return root_of(poly, index)

    @classmethod
    def parse(cls, text: str) -> AlgebraicNumber:
        return parse_algebraic(text)

    @staticmethod
    def coerce(x) -> AlgebraicNumber:
        if isinstance(x, AlgebraicNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return AlgebraicNumber.rational(x)
        if isinstance(x, str):
            return parse_algebraic(x)
        raise TypeError(f"cannot interpret {x!r} as an algebraic number")

    # -- basic queries -------------------------------------------------------

    def is_rational(self) -> bool:
        return all(not c for c in self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------------

    def _binary(self, other, op):
        other = AlgebraicNumber.coerce(other)
        K, idx, (x, y) = common_field(self, other)
        return _simplify(AlgebraicNumber(K, op(K, x, y), idx))

    def __add__(self, other):
        try:
            return self._binary(other, lambda K, x, y: K.add(x, y))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self._binary(other, lambda K, x, y: K.sub(x, y))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return AlgebraicNumber.coerce(other) - self

    def __neg__(self):
        return AlgebraicNumber(self.field, self.field.neg(self.coords), self.root_index)

    def __mul__(self, other):
        try:
            return self._binary(other, lambda K, x, y: K.mul(x, y))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = AlgebraicNumber.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        q = self._binary(other, lambda K, x, y: K.mul(x, K.inverse(y)))
        if q * other != self:
            raise ArithmeticError("quotient failed re-verification")
        return q

    def __rtruediv__(self, other):
        return AlgebraicNumber.coerce(other) / self

    def inverse(self) -> AlgebraicNumber:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        return AlgebraicNumber(self.field, self.field.inverse(self.coords), self.root_index)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0 and self.is_zero():
            raise ZeroDivisionError("division by zero")
        return AlgebraicNumber(self.field, self.field.power(self.coords, e), self.root_index)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, AlgebraicNumber)):
            other = AlgebraicNumber.coerce(other)
            if self.field is other.field and self.root_index == other.root_index:
                return self.coords == other.coords
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash(self.minimal_poly())

    # -- invariants ----------------------------------------------------------

    def minimal_poly(self) -> RatPoly:
        """Monic minimal polynomial over Q (first linear relation among powers)."""
        if "minpoly" not in self._cache:
            self._cache["minpoly"] = _minimal_poly(self.field, self.coords)
        return self._cache["minpoly"]

    @property
    def degree(self) -> int:
        return self.minimal_poly().degree

    def is_algebraic_integer(self) -> bool:
        return self.minimal_poly().is_integral()

    def integrality_certificate(self) -> IntPoly | None:
        m = self.minimal_poly()
        return m.num if m.is_integral() else None

    def norm(self) -> Fraction:
        """Norm from the host field (product of conjugates)."""
        return _charpoly_constant(self.field, self.coords)

    # -- numerics ------------------------------------------------------------

    def enclosure(self, bits: int = 53) -> Disk:
        """A disk with radius <= 2**-bits certified to contain the value."""
        target = Fraction(1, 1 << bits)
        if self.is_rational():
            return Disk(self.coords[0], Fraction(0), Fraction(0), True)
        iso = self.field.roots
        tb = bits + 4
        coeffs = list(self.coords)
        while True:
            d = iso.refine(self.root_index, tb)
            disk = _taylor_enclosure(coeffs, d)
            if disk.radius <= target:
                return disk
            tb += max(8, tb // 2)

    def approx(self, digits: int = 15) -> complex:
        d = self.enclosure(int(digits * 3.33) + 4)
        return complex(float(d.re), float(d.im))

    def locate(self) -> tuple[IntPoly, int, int]:
        """(P, k, D): the value times D is root number k of the monic integer
        polynomial P, the scaled minimal polynomial."""
        if "locate" not in self._cache:
            m = self.minimal_poly()
            D, P = _integer_model(m)
            iso = isolator(P)
            bits = 8
            while True:
                e = self.enclosure(bits)
                hits = iso.locate(D * e.re, D * e.im, D * e.radius)
                if len(hits) == 1:
                    break
                for h in hits:
                    iso.refine(h, bits)
                bits *= 2
            self._cache["locate"] = (P, hits[0], D)
        return self._cache["locate"]

    def is_real(self) -> bool:
        if self.is_rational():
            return True
        P, k, _ = self.locate()
        return isolator(P).disks[k].real

    def __str__(self):
        if self.is_rational():
            return str(self.coords[0])
        P, k, D = self.locate()
        base = f"root({P}, {k})"
        return base if D == 1 else f"{base}/{D}"

    def __repr__(self):
        return f"AlgebraicNumber({str(self)!r})"


# -- helpers -----------------------------------------------------------------

def _integer_model(m: RatPoly) -> tuple[int, IntPoly]:
    """For monic m over Q return (D, P) with P monic in Z[x] and P(D*r) = 0 iff m(r) = 0."""
    coeffs = m.monic().coeffs
    n = len(coeffs) - 1
    D = 1
    for k, c in enumerate(coeffs):
        if c.denominator != 1:
            # need D^(n-k) * c integral
            e = n - k
            den = c.denominator
            cand = 1
            while (cand ** e) % den:
                cand += 1
            D = lcm(D, cand)
    scaled = [c * D ** (n - k) for k, c in enumerate(coeffs)]
    return D, IntPoly([int(c) for c in scaled])


def _minimal_poly(K: NumberField, a) -> RatPoly:
    ech = linalg.Echelon(K.degree)
    cur = K.one()
    while True:
        dep = ech.insert(cur)
        if dep is not None:
            top = max(dep)
            coeffs = [dep.get(k, Fraction(0)) / dep[top] for k in range(top + 1)]
            return RatPoly.from_coeffs(coeffs)
        cur = K.mul(cur, a)


def _charpoly_constant(K: NumberField, a) -> Fraction:
    return linalg.determinant(K.mult_matrix(a))


def _gauss_abs_upper(re: Fraction, im: Fraction) -> Fraction:
    return sqrt_upper(re * re + im * im, 32)


def _taylor_enclosure(coeffs, d: Disk) -> Disk:
    """Enclose p(z) for |z - center| <= radius via the Taylor expansion at the center."""
    n = len(coeffs)
    # Taylor coefficients of p at c = d.re + i d.im, by repeated synthetic division
    work = [(Fraction(c), Fraction(0)) for c in coeffs]
    taylor = []
    for _ in range(n):
        acc_r, acc_i = Fraction(0), Fraction(0)
        nxt = []
        for cr, ci in reversed(work):
            acc_r, acc_i = acc_r * d.re - acc_i * d.im + cr, acc_r * d.im + acc_i * d.re + ci
            nxt.append((acc_r, acc_i))
        taylor.append(nxt[-1])
        work = list(reversed(nxt[:-1]))
    center = taylor[0]
    rad = Fraction(0)
    rpow = Fraction(1)
    for tr, ti in taylor[1:]:
        rpow *= d.radius
        if tr or ti:
            rad += _gauss_abs_upper(tr, ti) * rpow
    return Disk(center[0], center[1], rad, False)


def _simplify(a: AlgebraicNumber) -> AlgebraicNumber:
    """Move a into the smallest convenient host: Q for rationals, Q(a) when the
    degree of a is below the degree of its host."""
    if a.field.degree == 1:
        if a.field.poly.coeffs != (0, 1):
            return AlgebraicNumber.rational(a.coords[0])
        return a
    if a.is_rational():
        return AlgebraicNumber.rational(a.coords[0])
    m = a.minimal_poly()
    if m.degree == a.field.degree:
        return a
    P, k, D = a.locate()
    K = number_field(P)
    out = AlgebraicNumber(K, K.scale(K.generator(), Fraction(1, D)), k)
    out._cache["minpoly"] = m
    out._cache["locate"] = (P, k, D)
    return out


# -- field composition ---------------------------------------------------------

@dataclass(frozen=True)
class Composition:
    field: NumberField
    root_index: int
    image_a: tuple  # coordinates of the generator of a's field inside ``field``
    image_b: tuple
    lam: int


def _shift_poly(f: IntPoly, lam: int) -> dict:
    """f(x - lam*y) as a bivariate dict {(i, j): c}."""
    out: dict = {}
    for k, c in enumerate(f.coeffs):
        if not c:
            continue
        for i in range(k + 1):
            j = k - i
            v = c * comb(k, i) * (-lam) ** j
            out[(i, j)] = out.get((i, j), 0) + v
    return {k: v for k, v in out.items() if v}


def _field_poly_gcd(K: NumberField, A: list, B: list) -> list:
    """Monic gcd in K[y]; polynomials are lists of K-coordinate tuples."""
    def trim(p):
        while p and not any(p[-1]):
            p.pop()
        return p

    A, B = trim(list(A)), trim(list(B))
    while B:
        inv = K.inverse(B[-1])
        R = list(A)
        while len(R) >= len(B) and R:
            q = K.mul(R[-1], inv)
            shift = len(R) - len(B)
            for i, b in enumerate(B):
                R[i + shift] = K.sub(R[i + shift], K.mul(q, b))
            R = trim(R)
        A, B = B, R
    inv = K.inverse(A[-1])
    return [K.mul(c, inv) for c in A]


def _reexpress(M: NumberField, gamma_in: tuple, small: NumberField):
    """Given the image (coords in M) of the generator of ``small`` and
    deg M == deg small, return a function mapping M-coordinates to small-coordinates."""
    n = M.degree
    # powers of the image span M; express gamma = M's generator in them
    rows = []
    cur = M.one()
    for _ in range(n):
        rows.append(list(cur))
        cur = M.mul(cur, gamma_in)
    # coordinates w.r.t. basis {image^k}: solve sum x_k rows_k = target
    cols = [list(r) for r in zip(*rows)]

    def to_small(v):
        x = linalg.solve(cols, list(v))
        return small.element(x)

    return to_small


def _compose(Ka: NumberField, ia: int, Kb: NumberField, ib: int) -> Composition:
    fa, fb = Ka.poly, Kb.poly
    iso_a, iso_b = Ka.roots, Kb.roots
    lam = 1
    while True:
        h = bivariate_resultant(_shift_poly(fa, lam), {(0, j): c for j, c in enumerate(fb.coeffs) if c}, "y")
        if dense.degree(dense.gcd_int(list(h.coeffs), dense.derivative(list(h.coeffs)))) == 0:
            break
        lam += 1
    factors = sorted(set(factor_over_Q(h)), key=lambda g: (g.degree, g.coeffs))
    isos = [isolator(g) for g in factors]
    bits = 8
    while True:
        da, db = iso_a.refine(ia, bits), iso_b.refine(ib, bits)
        probe = (da.re + lam * db.re, da.im + lam * db.im, da.radius + lam * db.radius)
        hits = [(fi, k) for fi, iso in enumerate(isos) for k in iso.locate(*probe)]
        if len(hits) == 1:
            break
        for fi, k in hits:
            isos[fi].refine(k, bits)
        bits *= 2
    fi, k = hits[0]
    F = factors[fi]
    M = number_field(F)
    gamma = M.generator()
    # theta_b is the common root of fa(gamma - lam*y) and fb(y) in M[y]
    A: list = [M.zero()]
    lin = [gamma, M.element([-lam])]  # gamma - lam*y
    for c in reversed(fa.coeffs):
        A = _poly_mul_field(M, A, lin)
        A[0] = M.add(A[0], M.element([c]))
    B = [M.element([c]) for c in fb.coeffs]
    g = _field_poly_gcd(M, A, B)
    if len(g) != 2:
        raise ArithmeticError("field composition: gcd is not linear")
    img_b = M.neg(g[0])
    img_a = M.sub(gamma, M.scale(img_b, lam))
    if M.degree == Ka.degree:
        to_a = _reexpress(M, img_a, Ka)
        return Composition(Ka, ia, Ka.generator(), to_a(img_b), lam)
    if M.degree == Kb.degree:
        to_b = _reexpress(M, img_b, Kb)
        return Composition(Kb, ib, to_b(img_a), Kb.generator(), lam)
    return Composition(M, k, img_a, img_b, lam)


def _poly_mul_field(K: NumberField, A: list, B: list) -> list:
    out = [K.zero() for _ in range(len(A) + len(B) - 1)]
    for i, a in enumerate(A):
        if not any(a):
            continue
        for j, b in enumerate(B):
            out[i + j] = K.add(out[i + j], K.mul(a, b))
    return out


@functools.lru_cache(maxsize=4096)
def _compose_cached(pa: tuple, ia: int, pb: tuple, ib: int) -> Composition:
    return _compose(number_field(IntPoly(pa)), ia, number_field(IntPoly(pb)), ib)


def _embed(K: NumberField, coords, image) -> tuple:
    return K.evaluate(coords, image)


def compose_fields(a: AlgebraicNumber, b: AlgebraicNumber):
    """(K, root index, image of a, image of b) with both values in one field."""
    a, b = AlgebraicNumber.coerce(a), AlgebraicNumber.coerce(b)
    if a.field is b.field and a.root_index == b.root_index:
        return a.field, a.root_index, a.coords, b.coords
    if b.field.degree == 1:
        return a.field, a.root_index, a.coords, a.field.element([b.coords[0]])
    if a.field.degree == 1:
        return b.field, b.root_index, b.field.element([a.coords[0]]), b.coords
    comp = _compose_cached(a.field.poly.coeffs, a.root_index, b.field.poly.coeffs, b.root_index)
    K = comp.field
    return (K, comp.root_index, _embed(K, a.coords, comp.image_a), _embed(K, b.coords, comp.image_b))


def common_field(*nums):
    """(K, root index, [coords of each input in K]) for any number of inputs."""
    nums = [AlgebraicNumber.coerce(x) for x in nums]
    if not nums:
        K = rationals()
        return K, 0, []
    if len(nums) == 2:
        K, idx, x, y = compose_fields(*nums)
        return K, idx, [x, y]
    host = nums[0]
    for x in nums[1:]:
        K, idx, _, _ = compose_fields(host, x)
        host = AlgebraicNumber(K, K.generator(), idx)
    K, idx = host.field, host.root_index
    out = []
    for x in nums:
        _, _, _, img = compose_fields(host, x)
        out.append(img)
    return K, idx, out


# -- public operations ----------------------------------------------------------

def minimal_poly(a) -> RatPoly:
    return AlgebraicNumber.coerce(a).minimal_poly()


def alg_add(a, b) -> AlgebraicNumber:
    return AlgebraicNumber.coerce(a) + b


def alg_mul(a, b) -> AlgebraicNumber:
    return AlgebraicNumber.coerce(a) * b


def alg_div(a, b) -> AlgebraicNumber:
    return AlgebraicNumber.coerce(a) / b


def is_algebraic_integer(a) -> tuple[bool, IntPoly | None]:
    a = AlgebraicNumber.coerce(a)
    cert = a.integrality_certificate()
    return cert is not None, cert


def compare_real(a, b) -> int:
    """-1, 0 or 1 for a < b, a == b, a > b; both must be real."""
    a, b = AlgebraicNumber.coerce(a), AlgebraicNumber.coerce(b)
    for v in (a, b):
        if not v.is_real():
            raise NotRealError(f"{v} is not real")
    d = a - b
    if d.is_zero():
        return 0
    bits = 16
    while True:
        e = d.enclosure(bits)
        if e.re > e.radius:
            return 1
        if e.re < -e.radius:
            return -1
        bits *= 2


# -- literals ------------------------------------------------------------------

def root_of(poly, index: int) -> AlgebraicNumber:
    """The index-th (0-based) distinct root of poly in canonical order."""
    p = as_ratpoly(poly) if not isinstance(poly, IntPoly) else RatPoly(poly)
    if not p or p.degree < 1:
        raise ValueError("root() needs a nonconstant polynomial")
    P = squarefree_part(p.num)
    if P.lc < 0:
        P = -P
    iso = isolator(P)
    if not 0 <= index < len(iso.disks):
        raise ValueError(f"root index {index} out of range for {P} ({len(iso.disks)} roots)")
    facs = sorted(set(factor_over_Q(P)), key=lambda g: (g.degree, g.coeffs))
    if len(facs) == 1:
        phi = facs[0]
        k = index
    else:
        bits = 8
        while True:
            d = iso.refine(index, bits)
            hits = [(phi, k) for phi in facs for k in isolator(phi).locate(d.re, d.im, d.radius)]
            if len(hits) == 1:
                break
            for phi, k in hits:
                isolator(phi).refine(k, bits)
            bits *= 2
        phi, k = hits[0]
    c = phi.lc
    if phi.degree == 1:
        return AlgebraicNumber.rational(Fraction(-phi.coeffs[0], c))
    # y = c*x turns phi into a monic integer polynomial; scaling by c > 0 keeps root order
    n = phi.degree
    monic = IntPoly([phi.coeffs[i] * c ** (n - 1 - i) for i in range(n)] + [1])
    K = number_field(monic)
    return AlgebraicNumber(K, K.scale(K.generator(), Fraction(1, c)), k)


def parse_algebraic(text: str) -> AlgebraicNumber:
    node = literals.parse_expression(text)

    def sym(name):
        raise literals.ParseError(f"unknown symbol {name!r} in algebraic literal")

    def call(name, args):
        if name != "root":
            raise literals.ParseError(f"unknown function {name!r}")
        if len(args) != 2:
            raise literals.ParseError("root() takes a polynomial and an index")
        poly = _poly_from_ast(args[0])
        idx = literals.int_exponent(args[1])
        return root_of(poly, idx)

    def power(base, exp_node):
        return AlgebraicNumber.coerce(base) ** literals.int_exponent(exp_node)

    value = literals.evaluate(node, num=AlgebraicNumber.rational, sym=sym, call=call, power=power)
    return AlgebraicNumber.coerce(value)


def _poly_from_ast(node) -> RatPoly:
    def sym(name):
        if name != "x":
            raise literals.ParseError(f"unknown variable {name!r} in root()")
        return RatPoly(IntPoly((0, 1)))

    def power(base, exp_node):
        return base ** literals.int_exponent(exp_node)

    return literals.evaluate(node, num=lambda q: RatPoly.from_coeffs([q]), sym=sym, power=power)
