from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from okounkov.polygon import (
    Polygon,
    clip_halfplane,
    is_convex_ccw,
    parse_polygon,
    polygon_area,
    polygon_contains,
    polygon_includes,
    polygon_intersection,
    polygon_min_sum,
    polygon_scale,
    polygon_slice_right,
    polygon_translate,
    standard_simplex,
)

from conftest import Q

EXAMPLE = Polygon((Q(0, 2), (Fraction(1, 3), Fraction(10, 3)), Q(0, 5)))
TRIANGLE = Polygon((Q(0, 0), Q(1, 0), Q(1, 1)))


def test_normal_form():
    p = Polygon((Q(0, 5), Q(0, 2), (Fraction(1, 3), Fraction(10, 3)), Q(0, 3)))
    assert p.vertices == (Q(0, 2), (Fraction(1, 3), Fraction(10, 3)), Q(0, 5))
    assert is_convex_ccw(p.vertices)


def test_example_area_and_min_sum():
    assert polygon_min_sum(EXAMPLE) == 2
    assert polygon_area(EXAMPLE) == Fraction(1, 2)


def test_translate():
    assert polygon_translate(TRIANGLE, (1, 0)).vertices == (Q(1, 0), Q(2, 0), Q(2, 1))


def test_contains_and_includes():
    assert polygon_contains(TRIANGLE, (Fraction(1, 2), Fraction(1, 4)))
    assert polygon_contains(TRIANGLE, (1, 1))
    assert not polygon_contains(TRIANGLE, (0, Fraction(1, 100)))
    assert polygon_includes(standard_simplex(2), standard_simplex(1))
    assert not polygon_includes(standard_simplex(1), standard_simplex(2))
    seg = Polygon((Q(0, 0), Q(2, 2)))
    assert polygon_contains(seg, (1, 1)) and not polygon_contains(seg, (3, 3))
    assert polygon_contains(Polygon((Q(1, 1),)), (1, 1))
    assert not polygon_contains(Polygon(()), (0, 0))


def test_slice():
    s = polygon_slice_right(EXAMPLE, Fraction(1, 6))
    assert s.vertices == ((Fraction(1, 6), Fraction(8, 3)), (Fraction(1, 3), Fraction(10, 3)), (Fraction(1, 6), Fraction(25, 6)))
    assert polygon_slice_right(EXAMPLE, 0) == EXAMPLE
    assert polygon_slice_right(EXAMPLE, Fraction(1, 3)).vertices == ((Fraction(1, 3), Fraction(10, 3)),)
    with pytest.raises(ValueError):
        polygon_slice_right(EXAMPLE, 1)


def test_intersection_and_clip():
    assert polygon_intersection(TRIANGLE, standard_simplex(1)).vertices == (Q(0, 0), Q(1, 0), (Fraction(1, 2), Fraction(1, 2)))
    assert polygon_intersection(polygon_translate(TRIANGLE, (5, 5)), standard_simplex(1)).is_empty
    assert clip_halfplane(TRIANGLE, 1, 0, 2).is_empty


def test_json_round_trip():
    assert parse_polygon(EXAMPLE.to_json()) == EXAMPLE
    assert EXAMPLE.to_json()["vertices"][1] == ["1/3", "10/3"]


coords = st.fractions(min_value=-10, max_value=10, max_denominator=7)
points = st.lists(st.tuples(coords, coords), min_size=3, max_size=12)


@given(points, coords, coords)
def test_hull_properties(pts, dx, dy):
    poly = Polygon.from_points(pts)
    assert all(polygon_contains(poly, p) for p in pts)
    assert is_convex_ccw(poly.vertices)
    moved = polygon_translate(poly, (dx, dy))
    assert polygon_area(moved) == polygon_area(poly)
    assert polygon_area(polygon_scale(poly, 3)) == 9 * polygon_area(poly)
