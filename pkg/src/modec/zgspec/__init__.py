from .covering import CoverResult, interval_covers
from .diagram import LevelLine, Marker, emit_diagram, four_point_figure, render_svg
from .geometry import (DOUBLE_R, DOUBLE_U, INF, INF_PT, INF_R, INF_U, INFINITE_KINDS, ORDINARY, PLUS,
                       Cut, HalfOpenInterval, NonCompactIntersection, Rectangle, SpecPoint,
                       classify_pair, interval_contains, intersect_intervals, intersect_rectangles,
                       point_cmp, point_in_rectangle, project_rectangle, rectangle_for)
from .syntax import parse_cut, parse_interval, parse_point, parse_rectangle

__all__ = [
    "CoverResult", "interval_covers", "LevelLine", "Marker", "emit_diagram", "four_point_figure",
    "render_svg", "DOUBLE_R", "DOUBLE_U", "INF", "INF_PT", "INF_R", "INF_U", "INFINITE_KINDS",
    "ORDINARY", "PLUS", "Cut", "HalfOpenInterval", "NonCompactIntersection", "Rectangle", "SpecPoint",
    "classify_pair", "interval_contains", "intersect_intervals", "intersect_rectangles", "point_cmp",
    "point_in_rectangle", "project_rectangle", "rectangle_for", "parse_cut", "parse_interval",
    "parse_point", "parse_rectangle",
]
