"""Covering of a half-open interval by finitely many others.

(s, t] is inside the union of (s_i, t_i] iff the left end s_+ is covered
(s_i <= s < t_i), the right end t is covered (s_j < t <= t_j) and every
internal u (s < u < t) satisfies s_k < u < t_k.  For an unbounded target the
right-end test becomes a test of each of its infinite points.  Internal points
need checking only at endpoints and in the gaps between consecutive endpoints.
"""
from __future__ import annotations

from dataclasses import dataclass

from .geometry import (DOUBLE_R, INFINITE_KINDS, ORDINARY, PLUS, HalfOpenInterval, SpecPoint,
                       is_inf)


@dataclass(frozen=True)
class CoverResult:
    holds: bool
    witness: SpecPoint | None = None
    reason: str = ""
    where: str = ""  # "left end", "right end", "infinite point" or "internal point"

    def __bool__(self):
        return self.holds


def interval_covers(target: HalfOpenInterval, cover: list[HalfOpenInterval]) -> CoverResult:
    s, t = target.low, target.high
    if not any(c.low <= s < c.high for c in cover):
        return CoverResult(False, SpecPoint(PLUS, s), f"left end {s}+ uncovered", "left end")
    if target.bounded:
        if not any(c.low < t <= c.high for c in cover):
            return CoverResult(False, SpecPoint(ORDINARY, t), f"right end {t} uncovered", "right end")
    else:
        for kind in INFINITE_KINDS:
            if kind in target.infinite_points and not any(kind in c.infinite_points for c in cover):
                return CoverResult(False, SpecPoint(kind), f"infinite point {kind} uncovered",
                                   "infinite point")
    inner = sorted({e for c in cover for e in (c.low, c.high) if not is_inf(e) and s < e < t})
    fence = [s] + inner + ([t] if target.bounded else [])
    probes = [(u, True) for u in inner]
    probes += [((x + y) / 2, False) for x, y in zip(fence, fence[1:])]
    if not target.bounded:
        probes.append((fence[-1] + 1, False))
    for u, at_endpoint in sorted(probes):
        if not any(c.low < u < c.high for c in cover):
            # at an endpoint the doubles u_r, u_u are the uncovered points
            w = SpecPoint(DOUBLE_R if at_endpoint else ORDINARY, u)
            return CoverResult(False, w, f"internal point {u} uncovered", "internal point")
    return CoverResult(True, None, "covered")
