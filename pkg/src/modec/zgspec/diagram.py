"""SVG rendering of quarter-plane diagrams.

Rectangles draw their included sides (top, right) solid and their deleted
sides (left, bottom) dashed.  Level lines x + y = c are dashed with slope -1.
Markers are filled (bullet) or hollow (circle); a plus cut is drawn slightly
right of / above its rational.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path

from .geometry import Cut, Rectangle, is_inf

SIZE = 400
MARGIN = 30
DASH = "4 3"
PLUS_OFFSET = 0.06  # fraction of a unit used to draw q+ next to q


@dataclass(frozen=True)
class LevelLine:
    """The line x + y = const."""

    const: object
    label: str = ""


@dataclass(frozen=True)
class Marker:
    x: Cut
    y: Cut
    label: str = ""
    filled: bool = True


def _num(v) -> float:
    return float(v) if not hasattr(v, "approx") else v.approx(12).real


def _extent(objects) -> float:
    vals = [1.0]
    for ob in objects:
        if isinstance(ob, Rectangle):
            vals += [_num(v) for v in (ob.x_low, ob.x_high, ob.y_low, ob.y_high) if not is_inf(v)]
        elif isinstance(ob, LevelLine):
            vals.append(_num(ob.const))
        elif isinstance(ob, Marker):
            vals += [_num(c.value) for c in (ob.x, ob.y) if c.kind != "infinite"]
    return max(vals) * 1.25


def _fmt(v: float) -> str:
    return f"{v:.2f}"


class _Canvas:
    def __init__(self, extent: float):
        self.extent = extent
        self.scale = (SIZE - 2 * MARGIN) / extent
        self.root = ET.Element("svg", {"xmlns": "http://www.w3.org/2000/svg", "width": str(SIZE),
                                       "height": str(SIZE), "viewBox": f"0 0 {SIZE} {SIZE}"})

    def xy(self, x, y) -> tuple[float, float]:
        x = self.extent if is_inf(x) else min(_num(x), self.extent)
        y = self.extent if is_inf(y) else min(_num(y), self.extent)
        return MARGIN + x * self.scale, SIZE - MARGIN - y * self.scale

    def line(self, parent, p, q, cls, dashed=False):
        attrs = {"class": cls, "x1": _fmt(p[0]), "y1": _fmt(p[1]), "x2": _fmt(q[0]),
                 "y2": _fmt(q[1]), "stroke": "black"}
        if dashed:
            attrs["stroke-dasharray"] = DASH
        return ET.SubElement(parent, "line", attrs)


def render_svg(objects) -> str:
    cv = _Canvas(_extent(objects))
    axes = ET.SubElement(cv.root, "g", {"class": "axes"})
    cv.line(axes, cv.xy(0, 0), cv.xy(cv.extent, 0), "axis")
    cv.line(axes, cv.xy(0, 0), cv.xy(0, cv.extent), "axis")
    for ob in objects:
        if isinstance(ob, Rectangle):
            g = ET.SubElement(cv.root, "g", {"class": "rectangle", "data-rect": str(ob)})
            bl = cv.xy(ob.x_low, ob.y_low)
            br = cv.xy(ob.x_high, ob.y_low)
            tl = cv.xy(ob.x_low, ob.y_high)
            tr = cv.xy(ob.x_high, ob.y_high)
            cv.line(g, tl, tr, "edge included")
            cv.line(g, br, tr, "edge included")
            cv.line(g, bl, tl, "edge excluded", dashed=True)
            cv.line(g, bl, br, "edge excluded", dashed=True)
        elif isinstance(ob, LevelLine):
            c = min(_num(ob.const), 2 * cv.extent)
            # clip x + y = c to the visible square
            x0, x1 = max(0.0, c - cv.extent), min(c, cv.extent)
            ln = cv.line(cv.root, cv.xy(x0, c - x0), cv.xy(x1, c - x1), "level-line", dashed=True)
            ln.set("data-const", str(ob.const))
        elif isinstance(ob, Marker):
            px = cv.xy(ob.x.value, ob.y.value)
            dx = PLUS_OFFSET * cv.scale
            cx = px[0] + (dx if ob.x.kind == "plus" else 0)
            cy = px[1] - (dx if ob.y.kind == "plus" else 0)
            ET.SubElement(cv.root, "circle", {"class": "point", "cx": _fmt(cx), "cy": _fmt(cy), "r": "3",
                                              "fill": "black" if ob.filled else "white", "stroke": "black"})
            if ob.label:
                t = ET.SubElement(cv.root, "text", {"class": "label", "x": _fmt(cx + 5), "y": _fmt(cy - 5),
                                                    "font-size": "11"})
                t.text = ob.label
        else:
            raise TypeError(f"cannot draw {ob!r}")
    ET.indent(cv.root)
    return ET.tostring(cv.root, encoding="unicode") + "\n"


def emit_diagram(objects, target: str | Path | None = None) -> str:
    svg = render_svg(list(objects))
    if target is not None:
        try:
            Path(target).write_text(svg, encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write diagram to {target}: {exc}") from exc
    return svg


def four_point_figure() -> list:
    """Two boxes meeting at (1, 1) and the points a = (1, 1+), b = (1+, 1+),
    c = (1, 1), d = (1+, 1) that they fail to separate."""
    one, one_p = Cut.exact(1), Cut.plus(1)
    return [Rectangle(0, 1, 0, 1), Rectangle(1, 2, 1, 2),
            Marker(one, one_p, "a", filled=False), Marker(one_p, one_p, "b"),
            Marker(one, one, "c"), Marker(one_p, one, "d", filled=False)]
