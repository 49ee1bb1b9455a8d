"""
SVG emission with xml.etree.

Walks are drawn at 10 px per lattice unit as a single stroked path with a
marker at the origin. The zero portrait draws the accumulation curve, the
real segments and the roots of one G_k in the complex plane.
"""

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Iterable, Sequence

from weakly_directed_walks.analysis.zeros import REAL_SEGMENTS, ComplexRootSet
from weakly_directed_walks.lattice.models import Walk

PIXELS_PER_UNIT = 10
MARGIN_UNITS = 1
ORIGIN_RADIUS = 2
PLANE_PIXELS_PER_UNIT = 200


def svg_root(width: float, height: float) -> ET.Element:
    return ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        version="1.2",
        baseProfile="tiny",
        width=f"{width:g}px",
        height=f"{height:g}px",
        viewBox=f"0 0 {width:g} {height:g}",
    )


def path_data(points: Sequence[tuple[float, float]]) -> str:
    head, *rest = points
    return f"M{head[0]:g} {head[1]:g}" + "".join(f"L{x:g} {y:g}" for x, y in rest)


def _stroke(parent: ET.Element, points: Sequence[tuple[float, float]], colour: str) -> None:
    if len(points) < 2:
        return
    ET.SubElement(
        parent, "path", d=path_data(points), fill="none", stroke=colour, attrib={"stroke-width": "1"}
    )


def walk_svg(walk: Walk) -> ET.Element:
    """The walk on the unit grid, y axis pointing up."""
    xs = [x for x, _ in walk.vertices]
    ys = [y for _, y in walk.vertices]
    left, top = min(xs) - MARGIN_UNITS, max(ys) + MARGIN_UNITS
    width = (max(xs) - min(xs) + 2 * MARGIN_UNITS) * PIXELS_PER_UNIT
    height = (max(ys) - min(ys) + 2 * MARGIN_UNITS) * PIXELS_PER_UNIT

    def pixel(x: int, y: int) -> tuple[float, float]:
        return (x - left) * PIXELS_PER_UNIT, (top - y) * PIXELS_PER_UNIT

    root = svg_root(width, height)
    _stroke(root, [pixel(x, y) for x, y in walk.vertices], "black")
    cx, cy = pixel(0, 0)
    ET.SubElement(root, "circle", cx=f"{cx:g}", cy=f"{cy:g}", r=str(ORIGIN_RADIUS), fill="red")
    return root


def zeros_svg(
    roots: ComplexRootSet,
    curve: Iterable[complex],
    scale: int = PLANE_PIXELS_PER_UNIT,
) -> ET.Element:
    """Roots of G_k over the accumulation set, viewport [-2.6, 1.2] x [-1.2, 1.2]."""
    left, right, bottom, top = -2.6, 1.2, -1.2, 1.2
    width, height = (right - left) * scale, (top - bottom) * scale

    def pixel(z: complex) -> tuple[float, float]:
        return round((z.real - left) * scale, 2), round((top - z.imag) * scale, 2)

    root = svg_root(width, height)
    axes = ET.SubElement(root, "g", attrib={"id": "axes"})
    _stroke(axes, [pixel(complex(left, 0)), pixel(complex(right, 0))], "#bbbbbb")
    _stroke(axes, [pixel(complex(0, bottom)), pixel(complex(0, top))], "#bbbbbb")

    boundary = ET.SubElement(root, "g", attrib={"id": "boundary"})
    points = list(curve)
    half = len(points) // 2
    _stroke(boundary, [pixel(z) for z in points[:half]], "blue")
    _stroke(boundary, [pixel(z) for z in points[half:]], "blue")
    for a, b in REAL_SEGMENTS:
        _stroke(boundary, [pixel(complex(a, 0)), pixel(complex(b, 0))], "blue")

    zeros = ET.SubElement(root, "g", attrib={"id": f"zeros-k{roots.k}"})
    for z in roots.roots:
        x, y = pixel(z)
        ET.SubElement(zeros, "circle", cx=f"{x:g}", cy=f"{y:g}", r="2", fill="black")
    return root


def to_string(element: ET.Element) -> str:
    return ET.tostring(element, encoding="unicode")


def write_svg(element: ET.Element, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(to_string(element), encoding="utf-8")
