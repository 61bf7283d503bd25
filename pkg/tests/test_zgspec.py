from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

import pytest

from modec.algnum import parse_algebraic
from modec.literals import ParseError
from modec.zgspec import (DOUBLE_R, DOUBLE_U, INF, INF_PT, INF_R, INF_U, INFINITE_KINDS, ORDINARY,
                          PLUS, Cut, HalfOpenInterval, LevelLine, Marker, NonCompactIntersection,
                          Rectangle, SpecPoint, classify_pair, emit_diagram, four_point_figure,
                          interval_contains, interval_covers, intersect_rectangles, parse_cut,
                          parse_interval, parse_point, parse_rectangle, point_cmp, point_in_rectangle,
                          project_rectangle, render_svg)
from oracles import candidate_points, covers_by_points, in_interval, slide_member

F = Fraction
GOLDEN = Path(__file__).parent / "golden"
KIND_CODE = {ORDINARY: "o", PLUS: "p", DOUBLE_R: "r", DOUBLE_U: "u"}


def code(p: SpecPoint):
    return (KIND_CODE[p.kind], p.value) if p.finite else (p.kind, None)


def triple(iv: HalfOpenInterval):
    return iv.low, iv.high, iv.infinite_points


# -- classification and order ------------------------------------------------------------

def test_classify_examples():
    assert classify_pair(Cut.exact(3), Cut.exact(2)) == SpecPoint(ORDINARY, 5)
    assert classify_pair(Cut.plus(0), Cut.plus(0)) == SpecPoint(PLUS, 0)
    # labels are class sums: the pair (1, 1+) sits on the line x + y = 2
    assert classify_pair(Cut.exact(1), Cut.plus(1)) == SpecPoint(DOUBLE_U, 2)
    assert classify_pair(Cut.plus(1), Cut.exact(1)) == SpecPoint(DOUBLE_R, 2)
    assert classify_pair(Cut.infinite(), Cut.exact(1)) == SpecPoint(INF_R)
    assert classify_pair(Cut.plus(2), Cut.infinite()) == SpecPoint(INF_U)
    assert classify_pair(Cut.infinite(), Cut.infinite()) == SpecPoint(INF_PT)


def test_classify_is_invariant_under_sliding():
    # (J, I) and (J + r, I - r) are the same point when both stay cuts
    for a, b, r in product([F(1), F(3, 2), F(2)], [F(1), F(5, 2)], [F(-1, 2), F(1, 2)]):
        for ka, kb in product(("exact", "plus"), repeat=2):
            p = classify_pair(Cut(ka, a), Cut(kb, b))
            q = classify_pair(Cut(ka, a + r), Cut(kb, b - r))
            assert p == q


def test_irrational_sum_with_a_plus_coordinate_is_ordinary():
    s2 = parse_algebraic("root(x^2-2,1)")
    p = classify_pair(Cut.exact(s2), Cut.plus(1))
    assert p.kind == ORDINARY and p.value == s2 + 1


def test_ordering_sanity():
    for q in (F(1, 2), F(1), F(7, 3)):
        o, r, u, pl = (SpecPoint(k, q) for k in (ORDINARY, DOUBLE_R, DOUBLE_U, PLUS))
        assert point_cmp(o, r) < 0 and point_cmp(o, u) < 0
        assert point_cmp(r, pl) < 0 and point_cmp(u, pl) < 0
        assert point_cmp(r, u) == 0
        assert point_cmp(pl, SpecPoint(ORDINARY, q + F(1, 1000))) < 0
    assert point_cmp(SpecPoint(PLUS, 100), SpecPoint(INF_R)) < 0
    assert point_cmp(SpecPoint(INF_U), SpecPoint(INF_PT)) < 0


def test_point_validation():
    with pytest.raises(ValueError):
        SpecPoint(ORDINARY, 0)
    with pytest.raises(ValueError):
        SpecPoint(DOUBLE_R, 0)
    with pytest.raises(ValueError):
        Cut.plus(parse_algebraic("root(x^2-2,1)"))
    with pytest.raises(ValueError):
        Cut.exact(-1)


# -- rectangles ---------------------------------------------------------------------

def test_point_in_rectangle_examples():
    v = parse_algebraic("root(x^2-2,1) + root(x^2-5,1)")
    assert point_in_rectangle(SpecPoint(ORDINARY, v), Rectangle(2, 3, 1, 2))
    r = Rectangle(2, 4, 1, 2)
    assert point_in_rectangle(SpecPoint(ORDINARY, 6), r)
    assert not point_in_rectangle(SpecPoint(ORDINARY, 3), r)
    assert point_in_rectangle(SpecPoint(INF_PT), Rectangle(1, 2, 0, INF))


def test_project_examples():
    assert project_rectangle(Rectangle(2, 4, 1, 2)) == HalfOpenInterval(3, 6)
    assert project_rectangle(Rectangle(1, 2, 0, INF)) == HalfOpenInterval(1, INF, frozenset({INF_U, INF_PT}))
    assert project_rectangle(Rectangle(0, INF, 0, INF)).infinite_points == set(INFINITE_KINDS)


def test_degenerate_rectangles_rejected():
    with pytest.raises(ValueError):
        Rectangle(2, 2, 0, 1)
    with pytest.raises(ValueError):
        HalfOpenInterval(1, INF)


def _sides(den, top):
    vals = [F(k, den) for k in range(top * den + 1)]
    return [(a, b) for a in vals for b in vals + [INF] if b == INF or a < b]


RECTS = [Rectangle(a, b, c, d) for (a, b), (c, d) in product(_sides(2, 2), repeat=2)]


def _grid_points(den, top):
    pts = [SpecPoint(k) for k in INFINITE_KINDS]
    for k in range(0, top * den + 1):
        q = F(k, den)
        pts.append(SpecPoint(PLUS, q))
        if q:
            pts += [SpecPoint(ORDINARY, q), SpecPoint(DOUBLE_R, q), SpecPoint(DOUBLE_U, q)]
    return pts


POINTS = _grid_points(4, 5)


def test_projection_adequacy_against_slide_oracle():
    for r in RECTS:
        iv = project_rectangle(r)
        rect = (r.x_low, r.x_high, r.y_low, r.y_high)
        for p in POINTS:
            got = point_in_rectangle(p, r)
            assert got == slide_member(*code(p), rect), (p, r)
            assert got == interval_contains(iv, p), (p, r)


def test_doubles_are_indistinguishable():
    for r in RECTS:
        for k in range(1, 21):
            q = F(k, 4)
            assert point_in_rectangle(SpecPoint(DOUBLE_R, q), r) == point_in_rectangle(SpecPoint(DOUBLE_U, q), r)


def test_intersections_match_membership():
    rects = [Rectangle(a, b, c, d) for (a, b), (c, d) in product(_sides(1, 2), repeat=2)]
    pts = _grid_points(2, 5)
    raised = 0
    for u, v in combinations(rects, 2):
        try:
            parts = intersect_rectangles(u, v)
        except NonCompactIntersection:
            raised += 1
            common = project_rectangle(u).infinite_points & project_rectangle(v).infinite_points
            assert common == {INF_PT}
            continue
        for p in pts:
            want = point_in_rectangle(p, u) and point_in_rectangle(p, v)
            assert any(point_in_rectangle(p, w) for w in parts) == want, (u, v, p)
    assert raised > 0


def test_intersection_examples():
    u = Rectangle(1, 4, 1, 4)
    assert intersect_rectangles(u, u) == [u]
    assert intersect_rectangles(Rectangle(0, 1, 0, 1), Rectangle(3, 4, 3, 4)) == []
    # two overlapping strips meet in a rectangle projecting to (a2 + b2, c1 + d1]
    (w,) = intersect_rectangles(Rectangle(0, 2, 0, 2), Rectangle(1, 3, 1, 3))
    assert project_rectangle(w) == HalfOpenInterval(2, 4)


# -- covering -----------------------------------------------------------------------

def test_cover_examples():
    res = interval_covers(HalfOpenInterval(0, 2), [HalfOpenInterval(0, 1), HalfOpenInterval(1, 2)])
    assert not res and res.where == "internal point" and res.witness == SpecPoint(DOUBLE_R, 1)
    assert interval_covers(HalfOpenInterval(0, 2), [HalfOpenInterval(0, 2), HalfOpenInterval(5, 6)])
    assert interval_covers(HalfOpenInterval(1, 3), [HalfOpenInterval(0, 2), HalfOpenInterval(F(3, 2), 4)])
    assert not interval_covers(HalfOpenInterval(1, 3), [])


def _all_intervals(ends):
    finite = [e for e in ends if e != INF]
    out = [HalfOpenInterval(a, b) for a, b in combinations(finite, 2)]
    flag_sets = [frozenset(s) for n in (1, 2, 3) for s in combinations(INFINITE_KINDS, n)]
    out += [HalfOpenInterval(a, INF, fl) for a in finite for fl in flag_sets]
    return out


def test_covering_matches_point_oracle_with_all_flag_forms():
    ends = [F(0), F(1), F(3, 2), F(2), INF]
    ivs = _all_intervals(ends)
    pts = candidate_points(ends)
    for target in ivs:
        for n in (0, 1, 2):
            for cover in combinations(ivs, n):
                got = interval_covers(target, list(cover))
                assert bool(got) == covers_by_points(triple(target), [triple(c) for c in cover], pts)
                if not got:
                    w = got.witness
                    assert interval_contains(target, w)
                    assert not any(interval_contains(c, w) for c in cover)


def test_witnesses_are_checked_by_the_oracle():
    target = HalfOpenInterval(0, INF, frozenset(INFINITE_KINDS))
    res = interval_covers(target, [HalfOpenInterval(0, INF, frozenset({INF_R, INF_PT}))])
    assert not res and res.witness == SpecPoint(INF_U)
    assert in_interval("inf_u", None, *triple(target))


# -- syntax --------------------------------------------------------------------------

def test_syntax():
    assert parse_interval("(3, 6]") == HalfOpenInterval(3, 6)
    assert parse_interval("(1, inf]").infinite_points == set(INFINITE_KINDS)
    assert parse_interval("(1, inf_u)").infinite_points == {INF_U}
    assert parse_interval("(1, inf]{inf_u, inf}").infinite_points == {INF_U, INF_PT}
    assert parse_rectangle("(2,4]x(1,2]") == Rectangle(2, 4, 1, 2)
    assert parse_rectangle("(0,1]×(0,inf]") == Rectangle(0, 1, 0, INF)
    assert parse_cut("1+") == Cut.plus(1) and parse_cut("inf") == Cut.infinite()
    assert parse_cut("3/2") == Cut.exact(F(3, 2))
    assert parse_point("1_r") == SpecPoint(DOUBLE_R, 1) and parse_point("2+") == SpecPoint(PLUS, 2)
    assert parse_point("inf_u") == SpecPoint(INF_U)
    assert parse_point("root(x^2-2,1)").kind == ORDINARY
    for s in (str(HalfOpenInterval(3, 6)), str(parse_interval("(1, inf]{inf_u, inf}"))):
        assert str(parse_interval(s)) == s


@pytest.mark.parametrize("bad", ["[3, 6]", "(3, 6)", "(2, inf]{inf}x", "(1, 5]{inf}"])
def test_syntax_errors(bad):
    with pytest.raises((ParseError, ValueError)):
        parse_interval(bad)


# -- diagrams -------------------------------------------------------------------------

def _parse_svg(text):
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    return root, ns


def test_svg_structure():
    root, ns = _parse_svg(render_svg([Rectangle(2, 4, 1, 2), LevelLine(6), LevelLine(3)]))
    assert len(root.findall(f"{ns}g[@class='rectangle']")) == 1
    levels = root.findall(f"{ns}line[@class='level-line']")
    assert len(levels) == 2
    for ln in levels:
        assert ln.get("stroke-dasharray")
        dx = float(ln.get("x2")) - float(ln.get("x1"))
        dy = float(ln.get("y2")) - float(ln.get("y1"))
        assert dx == pytest.approx(dy, abs=0.02)  # slope -1 in the flipped screen frame
    box = root.find(f"{ns}g[@class='rectangle']")
    assert len(box.findall(f"{ns}line[@class='edge included']")) == 2
    excluded = box.findall(f"{ns}line[@class='edge excluded']")
    assert len(excluded) == 2 and all(e.get("stroke-dasharray") for e in excluded)


def test_empty_svg():
    root, ns = _parse_svg(render_svg([]))
    assert root.tag == f"{ns}svg"
    assert not root.findall(f"{ns}g[@class='rectangle']")


def test_four_point_figure(tmp_path):
    objs = four_point_figure()
    out = tmp_path / "fig.svg"
    text = emit_diagram(objs, out)
    assert out.read_text(encoding="utf-8") == text
    root, ns = _parse_svg(text)
    assert len(root.findall(f"{ns}g[@class='rectangle']")) == 2
    assert len(root.findall(f"{ns}circle[@class='point']")) == 4
    assert text == (GOLDEN / "four_point.svg").read_text(encoding="utf-8")
    # the lower box holds c only, the upper box b only; the hollow a, d lie in neither
    a, b, c, d = (classify_pair(m.x, m.y) for m in objs if isinstance(m, Marker))
    low, high = (o for o in objs if isinstance(o, Rectangle))
    assert [point_in_rectangle(p, low) for p in (a, b, c, d)] == [False, False, True, False]
    assert [point_in_rectangle(p, high) for p in (a, b, c, d)] == [False, True, False, False]


def test_unwritable_target(tmp_path):
    with pytest.raises(OSError):
        emit_diagram([], tmp_path / "missing" / "x.svg")
