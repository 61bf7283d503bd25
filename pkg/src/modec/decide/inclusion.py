"""Deciding (phi/psi) inside the union of (phi_i/psi_i) for aligned pairs.

At a nonzero prime P the target is the interval (v(ad), v(bc)] when g, h lie
in P and empty otherwise; likewise for each cover pair.  We search over which
cover pairs are live at P and over the weak order of the live endpoints.  Each
choice adds "contains" or "avoids" conditions on P, merged to one element each
by gcd and lcm; a branch survives while some prime can satisfy them, i.e. while
avoid is not in rad(contain).  A complete branch whose intervals fail to cover
yields a prime where the inclusion fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..ezring.base import EffectiveRing, PrimeConstraint
from ..zgspec import HalfOpenInterval, interval_covers
from .pairs import AlignedPair, pair_is_empty

DEFAULT_COVER_CAP = 4


class ResourceError(RuntimeError):
    pass


@dataclass(frozen=True)
class InclusionResult:
    holds: bool
    witness: PrimeConstraint | None = None
    configuration: str = ""
    reason: str = ""
    branches: int = 0


@dataclass
class _State:
    contain: object
    avoid: object
    blocks: list = field(default_factory=list)  # list of lists of endpoint names
    live: tuple = ()


class _Search:
    """Endpoints: s = ad and t = bc for the target, s_i, t_i for cover pair i."""

    def __init__(self, ring: EffectiveRing, target: AlignedPair, cover: list[AlignedPair]):
        self.ring = ring
        self.target = target
        self.cover = cover
        self.value = {"s": target.left(ring), "t": target.right(ring)}
        for i, p in enumerate(cover, 1):
            self.value[f"s{i}"] = p.left(ring)
            self.value[f"t{i}"] = p.right(ring)
        self.branches = 0
        self._feasible_cache: dict = {}

    # -- constraint algebra ------------------------------------------------------------

    def feasible(self, contain, avoid) -> bool:
        key = (self.ring.format(contain), self.ring.format(avoid))
        if key not in self._feasible_cache:
            self._feasible_cache[key] = not self.ring.radical_member(avoid, contain)
        return self._feasible_cache[key]

    def with_contain(self, st: _State, x) -> _State:
        return _State(self.ring.gcd(st.contain, x), st.avoid, st.blocks, st.live)

    def with_avoid(self, st: _State, x) -> _State:
        return _State(st.contain, self.ring.lcm_of(st.avoid, x), st.blocks, st.live)

    def less(self, st: _State, x: str, y: str) -> _State:
        """v(x) < v(y) iff the generator of (y : x) lies in P."""
        return self.with_contain(st, self.ring.colon_generator(self.value[y], self.value[x]))

    def equal(self, st: _State, x: str, y: str) -> _State:
        r = self.ring
        st = self.with_avoid(st, r.colon_generator(self.value[x], self.value[y]))
        return self.with_avoid(st, r.colon_generator(self.value[y], self.value[x]))

    # -- search ---------------------------------------------------------------------------

    def run(self) -> InclusionResult:
        r = self.ring
        start = _State(r.gcd(self.target.g, self.target.h), r.one())
        found = self._live(start, 0)
        if found is None:
            return InclusionResult(True, branches=self.branches, reason="every configuration is covered")
        st, reason = found
        return InclusionResult(False, PrimeConstraint(st.contain, st.avoid), self.describe(st), reason,
                               self.branches)

    def _live(self, st: _State, i: int):
        if i == len(self.cover):
            names = ["s", "t"] + [f"{e}{j}" for j in st.live for e in "st"]
            return self._order(st, names, 0)
        p = self.cover[i]
        gh = self.ring.gcd(p.g, p.h)
        for live in (True, False):
            nxt = self.with_contain(st, gh) if live else self.with_avoid(st, gh)
            nxt.live = st.live + ((i + 1,) if live else ())
            self.branches += 1
            if self.feasible(nxt.contain, nxt.avoid):
                found = self._live(nxt, i + 1)
                if found is not None:
                    return found
        return None

    def _order(self, st: _State, names: list, k: int):
        if k == len(names):
            return self._leaf(st)
        e = names[k]
        blocks = st.blocks
        options = []
        for pos in range(len(blocks) + 1):
            # a new block just before position pos
            options.append(("new", pos))
            if pos < len(blocks):
                options.append(("join", pos))
        for how, pos in options:
            nxt = _State(st.contain, st.avoid, [list(b) for b in blocks], st.live)
            if how == "join":
                nxt = self.equal(nxt, e, blocks[pos][0])
                nxt.blocks[pos].append(e)
            else:
                if pos > 0:
                    nxt = self.less(nxt, blocks[pos - 1][0], e)
                if pos < len(blocks):
                    nxt = self.less(nxt, e, blocks[pos][0])
                nxt.blocks.insert(pos, [e])
            self.branches += 1
            if self.feasible(nxt.contain, nxt.avoid):
                found = self._order(nxt, names, k + 1)
                if found is not None:
                    return found
        return None

    def _leaf(self, st: _State):
        rank = {e: Fraction(i) for i, b in enumerate(st.blocks) for e in b}
        if rank["s"] >= rank["t"]:
            return None
        target = HalfOpenInterval(rank["s"], rank["t"])
        cover = [HalfOpenInterval(rank[f"s{j}"], rank[f"t{j}"]) for j in st.live
                 if rank[f"s{j}"] < rank[f"t{j}"]]
        res = interval_covers(target, cover)
        if res.holds:
            return None
        return st, f"{res.where} {self.label(st, res.witness.value)} uncovered"

    def label(self, st: _State, u: Fraction) -> str:
        """Name a rank position by the endpoint values around it."""
        def names(i):
            return " = ".join(f"v({e})" for e in st.blocks[i])
        if u.denominator == 1:
            return names(int(u))
        lo = int(u)
        if lo + 1 < len(st.blocks):
            return f"between {names(lo)} and {names(lo + 1)}"
        return f"above {names(lo)}"

    def describe(self, st: _State) -> str:
        order = " < ".join(" = ".join(f"v({e})" for e in b) for b in st.blocks)
        live = ", ".join(str(j) for j in st.live) or "none"
        return f"live cover pairs: {live}; endpoint order: {order}"


def inclusion_holds(ring: EffectiveRing, target: AlignedPair, cover: list[AlignedPair],
                    cover_cap: int = DEFAULT_COVER_CAP) -> InclusionResult:
    """Does (phi/psi) lie in the union of the cover's open sets over every module?
    On failure the witness (contain, avoid) describes primes where it fails."""
    if not ring.hypotheses_ok:
        raise ValueError(f"ring {ring.name!r} does not meet the hypotheses of the decision procedure")
    if len(cover) > cover_cap:
        raise ResourceError(f"{len(cover)} cover pairs exceed the cap of {cover_cap}")
    if pair_is_empty(ring, target):
        return InclusionResult(True, reason="target pair is empty")
    return _Search(ring, target, list(cover)).run()
