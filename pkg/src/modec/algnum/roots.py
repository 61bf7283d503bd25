"""Certified isolation of the complex roots of a squarefree integer polynomial.

Approximations come from mpmath; every isolating disk is then certified with
exact rational arithmetic using the classical bound: for any point c there is
a root within n*|f(c)/f'(c)| of c.  n pairwise disjoint certified disks
therefore each hold exactly one root.  Real roots are certified by centring
their disk on the real axis (the disk is then closed under conjugation and
holds a single root).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import mpmath

from ..polyarith import dense
from ..polyarith.poly import IntPoly

_EXACT_SEPARATION_BITS = 96


def _to_fraction(x, bits: int) -> Fraction:
    scaled = int(mpmath.nint(mpmath.mpf(x) * mpmath.mpf(2) ** bits))
    return Fraction(scaled, 1 << bits)


def sqrt_upper(q: Fraction, bits: int = 64) -> Fraction:
    """A rational upper bound for sqrt(q), within about 2**-bits relative error."""
    if q <= 0:
        return Fraction(0)
    # scale so that the integer square root carries ``bits`` significant bits
    shift = max(0, bits - (q.numerator.bit_length() - q.denominator.bit_length()) // 2)
    v = q * (1 << (2 * shift))
    s = isqrt(v.numerator // v.denominator) + 1
    return Fraction(s, 1 << shift)


def gauss_eval(coeffs, re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    """Evaluate a polynomial with rational coefficients at re + i*im exactly."""
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


@dataclass(frozen=True)
class Disk:
    re: Fraction
    im: Fraction
    radius: Fraction
    real: bool

    def re_bounds(self):
        return self.re - self.radius, self.re + self.radius

    def im_bounds(self):
        return self.im - self.radius, self.im + self.radius

    def overlaps(self, other: Disk) -> bool:
        dr, di = self.re - other.re, self.im - other.im
        s = self.radius + other.radius
        return dr * dr + di * di <= s * s

    def contains_disk(self, other: Disk) -> bool:
        slack = self.radius - other.radius
        if slack < 0:
            return False
        dr, di = self.re - other.re, self.im - other.im
        return dr * dr + di * di <= slack * slack

    def conjugate(self) -> Disk:
        return Disk(self.re, -self.im, self.radius, self.real)

    def complex(self) -> complex:
        return complex(float(self.re), float(self.im))


class RootIsolator:
    """Isolating disks for the roots of a squarefree polynomial, in canonical
    order: by real part, then imaginary part."""

    def __init__(self, poly: IntPoly, ordered: bool = True):
        if poly.degree < 1:
            raise ValueError("constant polynomial has no roots")
        self.poly = poly
        self.coeffs = list(poly.coeffs)
        self.dcoeffs = dense.derivative(self.coeffs)
        self.degree = poly.degree
        disks, partner = self._initial()
        if not ordered:
            self.disks, self.partner = disks, partner
            return
        order = sorted(range(len(disks)),
                       key=functools.cmp_to_key(lambda i, j: self._compare(disks, partner, i, j)))
        self.disks = [disks[i] for i in order]
        inverse = {old: new for new, old in enumerate(order)}
        self.partner = [inverse[partner[old]] if partner[old] is not None else None for old in order]

    # -- certification -------------------------------------------------------

    def _radius(self, re: Fraction, im: Fraction, bits: int) -> Fraction | None:
        fr, fi = gauss_eval(self.coeffs, re, im)
        if not fr and not fi:
            return Fraction(0)
        dr, di = gauss_eval(self.dcoeffs, re, im)
        dd = dr * dr + di * di
        if not dd:
            return None
        r2 = self.degree ** 2 * (fr * fr + fi * fi) / dd
        return sqrt_upper(r2, bits)

    def _certify(self, centers, bits) -> list[Disk] | None:
        disks = []
        for re, im, real in centers:
            r = self._radius(re, im, bits)
            if r is None:
                return None
            if not real and abs(im) <= r:
                return None
            disks.append(Disk(re, im, r, real))
        for i in range(len(disks)):
            for j in range(i + 1, len(disks)):
                if disks[i].overlaps(disks[j]):
                    return None
        return disks

    def _initial(self):
        n = self.degree
        if n == 1:
            a0, a1 = self.coeffs
            return [Disk(Fraction(-a0, a1), Fraction(0), Fraction(0), True)], [None]
        prec = 80
        while True:
            with mpmath.workprec(prec):
                try:
                    approx = mpmath.polyroots(list(reversed(self.coeffs)), maxsteps=200 + 20 * n,
                                              extraprec=prec)
                except mpmath.libmp.NoConvergence:
                    prec *= 2
                    continue
                tol = mpmath.mpf(2) ** (-(prec // 2))
                reals, uppers = [], []
                for z in approx:
                    z = mpmath.mpc(z)
                    scale = max(mpmath.mpf(1), abs(z))
                    if abs(z.imag) <= tol * scale:
                        reals.append(z.real)
                    elif z.imag > 0:
                        uppers.append(z)
                bits = prec
                if len(reals) + 2 * len(uppers) == n:
                    centers = [(_to_fraction(x, bits), Fraction(0), True) for x in reals]
                    partner: list = [None] * len(reals)
                    for z in uppers:
                        re, im = _to_fraction(z.real, bits), _to_fraction(z.imag, bits)
                        k = len(centers)
                        centers.append((re, im, False))
                        centers.append((re, -im, False))
                        partner.extend([k + 1, k])
                    disks = self._certify(centers, bits)
                    if disks is not None:
                        return disks, partner
            prec *= 2
            if prec > 1 << 16:
                raise ArithmeticError(f"root isolation failed for {self.poly}")

    # -- refinement ----------------------------------------------------------

    def refine(self, i: int, bits: int) -> Disk:
        """Shrink disk i until its radius is at most 2**-bits."""
        disk = self.disks[i]
        target = Fraction(1, 1 << bits) if bits >= 0 else Fraction(1 << -bits)
        if disk.radius <= target:
            return disk
        prec = bits + 40
        for _ in range(12):
            new = self._newton(disk, prec, bits)
            if new is not None and new.radius <= target and disk.contains_disk(new):
                self.disks[i] = new
                j = self.partner[i]
                if j is not None:
                    self.disks[j] = new.conjugate()
                return new
            prec *= 2
        raise ArithmeticError(f"refinement failed for root {i} of {self.poly}")

    def _newton(self, disk: Disk, prec: int, bits: int) -> Disk | None:
        with mpmath.workprec(prec):
            f = [mpmath.mpf(c) for c in reversed(self.coeffs)]
            df = [mpmath.mpf(c) for c in reversed(self.dcoeffs)]
            z = mpmath.mpf(disk.re) if disk.real else mpmath.mpc(disk.re, disk.im)
            eps = mpmath.mpf(2) ** (-(bits + 8))
            for _ in range(4 * prec):
                fz = mpmath.polyval(f, z)
                dz = mpmath.polyval(df, z)
                if dz == 0:
                    return None
                step = fz / dz
                z = z - step
                if abs(step) < eps:
                    break
            cb = bits + 16
            if disk.real:
                re, im = _to_fraction(mpmath.re(z), cb), Fraction(0)
            else:
                re, im = _to_fraction(mpmath.re(z), cb), _to_fraction(mpmath.im(z), cb)
        r = self._radius(re, im, cb)
        if r is None:
            return None
        if not disk.real and abs(im) <= r:
            return None
        return Disk(re, im, r, disk.real)

    # -- ordering ------------------------------------------------------------

    def _compare(self, disks, partner, i, j) -> int:
        if i == j:
            return 0
        # refinement during sorting works on the provisional list
        self.disks, self.partner = disks, partner
        if partner[i] == j:
            return -1 if disks[i].im < disks[j].im else 1
        bits = 8
        while True:
            a, b = self.disks[i], self.disks[j]
            alo, ahi = a.re_bounds()
            blo, bhi = b.re_bounds()
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            if bits > _EXACT_SEPARATION_BITS:
                break
            self.refine(i, bits)
            self.refine(j, bits)
            bits *= 2
        if _on_imaginary_axis(self, i) and _on_imaginary_axis(self, j):
            equal = True
        else:
            equal = _equal_real_parts(self, i, j)
        if equal:
            while True:
                a, b = self.disks[i], self.disks[j]
                alo, ahi = a.im_bounds()
                blo, bhi = b.im_bounds()
                if ahi < blo:
                    return -1
                if bhi < alo:
                    return 1
                self.refine(i, bits)
                self.refine(j, bits)
                bits *= 2
        while True:
            self.refine(i, bits)
            self.refine(j, bits)
            bits *= 2
            alo, ahi = self.disks[i].re_bounds()
            blo, bhi = self.disks[j].re_bounds()
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1

    def locate(self, center_re: Fraction, center_im: Fraction, radius: Fraction) -> list[int]:
        """Indices of disks meeting the given disk."""
        probe = Disk(center_re, center_im, radius, False)
        return [k for k, d in enumerate(self.disks) if d.overlaps(probe)]


def _on_imaginary_axis(iso: RootIsolator, i: int) -> bool:
    """Exact test Re(root_i) == 0 for even or odd f, where -conj(root) is again a root:
    the root is purely imaginary iff its mirror image lands in its own disk."""
    c = iso.coeffs
    even = all(not c[k] for k in range(1, len(c), 2))
    odd = all(not c[k] for k in range(0, len(c), 2))
    if not (even or odd):
        return False
    d = iso.disks[i]
    lo, hi = d.re_bounds()
    if lo > 0 or hi < 0:
        return False
    mirror = Disk(-d.re, d.im, d.radius, d.real)
    hits = [k for k, e in enumerate(iso.disks) if e.overlaps(mirror)]
    return hits == [i]


def _equal_real_parts(iso: RootIsolator, i: int, j: int) -> bool:
    """Decide Re(root_i) == Re(root_j) exactly.

    Both 2*Re(root) values are real roots of Res_y(f(y), f(x - y)); they agree
    iff they are the same root of its squarefree part.
    """
    from ..polyarith.factor import squarefree_part
    from ..polyarith.resultant import sum_resultant

    sums = _unordered(tuple(squarefree_part(sum_resultant(iso.poly, iso.poly)).coeffs))
    real_idx = [k for k, d in enumerate(sums.disks) if d.real]

    def which(k):
        bits = 8
        while True:
            d = iso.refine(k, bits)
            lo, hi = 2 * (d.re - d.radius), 2 * (d.re + d.radius)
            hits = [m for m in real_idx
                    if sums.disks[m].re - sums.disks[m].radius <= hi
                    and sums.disks[m].re + sums.disks[m].radius >= lo]
            if len(hits) == 1:
                return hits[0]
            for m in hits:
                sums.refine(m, bits)
            bits *= 2

    return which(i) == which(j)


@functools.lru_cache(maxsize=64)
def _unordered(coeffs: tuple) -> RootIsolator:
    return RootIsolator(IntPoly(coeffs), ordered=False)


@functools.lru_cache(maxsize=512)
def _isolator_cached(coeffs: tuple) -> RootIsolator:
    return RootIsolator(IntPoly(coeffs))


def isolator(poly: IntPoly) -> RootIsolator:
    """Shared (memoized) isolator for a squarefree polynomial."""
    return _isolator_cached(tuple(poly.coeffs))
