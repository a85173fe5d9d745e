"""Exact convex polygons in the valuation plane.

Vertices are ``(Fraction, Fraction)`` pairs kept in counter-clockwise order,
starting from the lexicographically smallest vertex, with collinear points
removed.  That normal form makes equality of polygons a tuple comparison.
Degenerate polygons (a point or a segment) are allowed; they show up as
slices at the right end of a body.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import format_rat

Point = tuple  # (Fraction, Fraction)


def _pt(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable) -> tuple:
    """Andrew's monotone chain; drops collinear and duplicate points.

    Works on the raw coordinates (ints stay ints) and converts only the
    surviving vertices to Fractions.
    """
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return tuple(_pt(p) for p in pts)
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return tuple(_pt(p) for p in hull)


@dataclass(frozen=True)
class Polygon:
    vertices: tuple

    @classmethod
    def from_points(cls, points: Iterable) -> "Polygon":
        return cls(convex_hull(points))

    def __post_init__(self):
        object.__setattr__(self, "vertices", convex_hull(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def edges(self):
        v = self.vertices
        n = len(v)
        for i in range(n):
            yield v[i], v[(i + 1) % n]

    def halfplanes(self) -> list:
        """Edges as ``(a, b, c)`` with the polygon inside ``a*x + b*y >= c``.

        Only meaningful for polygons with at least three vertices.
        """
        out = []
        for p, q in self.edges():
            a = -(q[1] - p[1])
            b = q[0] - p[0]
            out.append((a, b, a * p[0] + b * p[1]))
        return out

    def to_json(self) -> dict:
        return {"vertices": [[format_rat(x), format_rat(y)] for x, y in self.vertices]}

    def __repr__(self) -> str:
        inner = ", ".join(f"({format_rat(x)},{format_rat(y)})" for x, y in self.vertices)
        return f"Polygon[{inner}]"


def polygon_contains(poly: Polygon, point) -> bool:
    p = _pt(point)
    v = poly.vertices
    if not v:
        return False
    if len(v) == 1:
        return v[0] == p
    if len(v) == 2:
        a, b = v
        if cross(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    return all(cross(a, b, p) >= 0 for a, b in poly.edges())


def polygon_includes(outer: Polygon, inner: Polygon) -> bool:
    """Whether ``inner`` is a subset of ``outer`` (convexity: vertex test)."""
    return all(polygon_contains(outer, v) for v in inner.vertices)


def polygon_translate(poly: Polygon, vector) -> Polygon:
    dx, dy = _pt(vector)
    return Polygon(tuple((x + dx, y + dy) for x, y in poly.vertices))


def polygon_scale(poly: Polygon, factor) -> Polygon:
    f = Fraction(factor)
    return Polygon(tuple((f * x, f * y) for x, y in poly.vertices))


def polygon_area(poly: Polygon) -> Fraction:
    v = poly.vertices
    if len(v) < 3:
        return Fraction(0)
    s = Fraction(0)
    for (x0, y0), (x1, y1) in poly.edges():
        s += x0 * y1 - x1 * y0
    return s / 2


def clip_halfplane(poly: Polygon, a, b, c) -> Polygon:
    """Intersection with ``{a*x + b*y >= c}`` (Sutherland-Hodgman)."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    v = poly.vertices
    if not v:
        return poly
    if len(v) == 1:
        return poly if a * v[0][0] + b * v[0][1] >= c else Polygon(())

    def val(p):
        return a * p[0] + b * p[1] - c

    out = []
    n = len(v)
    for i in range(n):
        p, q = v[i], v[(i + 1) % n]
        fp, fq = val(p), val(q)
        if fp >= 0:
            out.append(p)
        if (fp > 0 and fq < 0) or (fp < 0 and fq > 0):
            s = fp / (fp - fq)
            out.append((p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])))
    return Polygon(tuple(out))


def polygon_slice_right(poly: Polygon, t) -> Polygon:
    """Part of the polygon with first coordinate >= t (whole polygon left of it)."""
    t = Fraction(t)
    if poly.is_empty:
        raise ValueError("slice of an empty polygon")
    right = max(x for x, _ in poly.vertices)
    if t > right:
        raise ValueError(f"slice at t={format_rat(t)} beyond the right end {format_rat(right)}")
    return clip_halfplane(poly, 1, 0, t)


def polygon_intersection(p: Polygon, q: Polygon) -> Polygon:
    """Intersection of two convex polygons (``q`` with at least 3 vertices)."""
    out = p
    for a, b, c in q.halfplanes():
        out = clip_halfplane(out, a, b, c)
        if out.is_empty:
            break
    return out


def polygon_min_sum(poly: Polygon) -> Fraction:
    """Minimum of x + y over the polygon (attained at a vertex)."""
    if poly.is_empty:
        raise ValueError("empty polygon")
    return min(x + y for x, y in poly.vertices)


def standard_simplex(size) -> Polygon:
    s = Fraction(size)
    return Polygon(((Fraction(0), Fraction(0)), (s, Fraction(0)), (Fraction(0), s)))



def parse_polygon(doc: dict) -> Polygon:
    from .lattice import parse_rat

    return Polygon(tuple((parse_rat(x), parse_rat(y)) for x, y in doc["vertices"]))


def is_convex_ccw(vertices: Sequence) -> bool:
    n = len(vertices)
    if n < 3:
        return True
    return all(cross(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]) > 0 for i in range(n))
