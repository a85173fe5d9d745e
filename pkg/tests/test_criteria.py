from fractions import Fraction

import pytest

from okounkov.criteria import (
    ample_report,
    augmented_sequence_check,
    flag_coverage,
    largest_simplex_constant,
    multiplicity_bound_check,
    nef_report,
    nested_check,
    origin_criterion,
    simplex_criterion,
    sigma_variation_check,
    slice_check,
    theorem_c_report,
)
from okounkov.polygon import polygon_contains

from conftest import Q
from oracles import bisect_simplex_constant


def test_origin_examples(f1, p2):
    r = origin_criterion(f1, Q(1, 1), f1.flag("cusp-tangent"))
    assert (r.left, r.right, r.agree) == (False, False, True)
    r = origin_criterion(p2, Q(3), p2.flag("linear"))
    assert (r.left, r.right) == (True, True)
    r = origin_criterion(f1, Q(1, 1), f1.flag("on-L"))
    assert (r.left, r.right) == (True, True)


@pytest.mark.parametrize(
    "divisor, flag, expected",
    [((2, -1), "on-E", 1), ((1, 0), "on-E", 0), ((1, 1), "cusp-tangent", 0)],
)
def test_simplex_constant_examples(f1, divisor, flag, expected):
    from okounkov.body import okounkov_polygon

    lam = largest_simplex_constant(f1, Q(*divisor), f1.flag(flag))
    assert lam.value == expected
    poly = okounkov_polygon(f1, Q(*divisor), f1.flag(flag))
    lo, hi = bisect_simplex_constant(lambda p: polygon_contains(poly, p), 10)
    assert lo <= lam.value <= hi


def test_simplex_criterion_examples(f1, p2):
    r = simplex_criterion(f1, Q(1, 0), f1.flag("on-E"))
    assert (r.left, r.right) == (False, False)
    r = simplex_criterion(f1, Q(2, -1), f1.flag("on-E"))
    assert (r.left, r.right) == (True, True)
    r = simplex_criterion(p2, Q(2), p2.flag("linear"))
    assert (r.left, r.right) == (True, True)
    assert r.to_json()["certificates"]["lambda"] == "2"


def test_nef_ample_reports(f1, p2):
    r = nef_report(f1, Q(1, 1))
    assert (r.left, r.right) == (False, False)
    assert "warning" not in r.certificates
    r = ample_report(f1, Q(2, -1))
    assert (r.left, r.right) == (True, True)
    assert all(v > 0 for v in r.certificates["lambda"].values())
    assert ample_report(p2, Q(3)).agree
    partial = nef_report(f1, Q(1, 1), [f1.flag("on-E")])
    assert partial.certificates["warning"] == "flag suite does not cover catalog"
    assert not flag_coverage(f1, [f1.flag("on-E")])["complete"]


def test_theorem_c_examples(f1, p2):
    r = theorem_c_report(f1, Q(1, 1), f1.flag("on-E"))
    assert r.left
    assert r.certificates["polygon"].vertices == (Q(1, 0), Q(2, 0), Q(2, 1))
    assert r.certificates["polygon_P"].vertices == (Q(0, 0), Q(1, 0), Q(1, 1))
    assert r.certificates["nu_N"] == Q(1, 0)
    r = theorem_c_report(f1, Q(1, 1), f1.flag("on-L"))
    assert r.certificates["sigma"] == 0 and r.left
    assert polygon_contains(r.certificates["polygon"], (0, 0))
    r = theorem_c_report(p2, Q(2), p2.flag("linear"))
    assert r.certificates["nu_N"] == Q(0, 0) and r.left


def test_nested_examples(f1, p2):
    r = nested_check(f1, Q(1, 1), Q(2, -1), [1, Fraction(1, 4), Fraction(1, 2)], f1.flag("cusp-tangent"))
    assert r.left and all(r.certificates["strict"])
    assert r.certificates["eps"] == [Fraction(1, 4), Fraction(1, 2), Fraction(1)]
    r = nested_check(f1, Q(1, 1), Q(2, -1), [0], f1.flag("on-E"))
    assert r.left and r.certificates["strict"] == [False]
    r = nested_check(p2, Q(2), Q(1), [1], p2.flag("linear"))
    assert r.certificates["chain"][1].vertices == (Q(0, 0), Q(3, 0), Q(0, 3))
    with pytest.raises(ValueError):
        nested_check(f1, Q(1, 1), Q(1, 0), [1], f1.flag("on-E"))


def test_slice_examples(f1):
    r = slice_check(f1, Q(1, 1), f1.flag("cusp-tangent"), Fraction(1, 6))
    expected = ((Fraction(1, 6), Fraction(8, 3)), (Fraction(1, 3), Fraction(10, 3)), (Fraction(1, 6), Fraction(25, 6)))
    assert r.left and r.certificates["slice"].vertices == expected
    assert r.certificates["shifted"].vertices == expected
    assert slice_check(f1, Q(1, 1), f1.flag("cusp-tangent"), 0).left
    r = slice_check(f1, Q(1, 0), f1.flag("on-E"), Fraction(1, 2))
    assert r.left
    half = Fraction(1, 2)
    assert r.certificates["slice"].vertices == ((half, 0), (1, 0), (1, 1), (half, half))
    with pytest.raises(ValueError):
        slice_check(f1, Q(1, 1), f1.flag("cusp-tangent"), Fraction(1, 3))


def test_multiplicity_examples(f1, p2):
    r = multiplicity_bound_check(f1, Q(1, 1), f1.flag("cusp-tangent"))
    c = r.certificates
    assert r.left and (c["mult"], c["min_sum"], c["a"], c["b"], c["strict"]) == (1, 2, 0, 2, True)
    r = multiplicity_bound_check(p2, Q(3), p2.flag("linear"))
    assert r.left and r.certificates["mult"] == 0 == r.certificates["min_sum"]
    r = multiplicity_bound_check(f1, Q(1, 1), f1.flag("on-E"))
    c = r.certificates
    assert r.left and (c["mult"], c["min_sum"], c["a"], c["b"]) == (1, 1, 1, 0)


def test_augmented_examples(f1):
    a = Q(2, -1)
    r = augmented_sequence_check(f1, Q(2, -1), a, f1.flag("on-E"), Fraction(1, 2), 8)
    assert r.left and r.right
    assert r.certificates["levels"] == list(range(2, 9))
    assert all(r.certificates["meets"]) and r.certificates["p_eps"] == 2
    assert set(r.certificates["mult"]) == {0}
    r = augmented_sequence_check(f1, Q(1, 0), a, f1.flag("on-E"), Fraction(1, 2), 8)
    assert not r.left and not r.right
    assert r.certificates["levels"] == list(range(3, 9))
    assert set(r.certificates["mult"]) == {1}
    # a simplex too small to reach a polygon kept away from the origin
    r = augmented_sequence_check(f1, Q(1, 1), a, f1.flag("cusp-tangent"), Fraction(1, 2), 8)
    assert r.certificates["p_eps"] is None and not r.left
    with pytest.raises(ValueError):
        augmented_sequence_check(f1, Q(1, 0), a, f1.flag("on-E"), Fraction(1, 2), 2)


def test_sigma_examples(f1):
    half = Fraction(1, 2)
    r = sigma_variation_check(f1, Q(1, 1), "E", [0, half, 1])
    assert r.left and r.certificates["sigma"] == 1
    assert r.certificates["negative_parts"] == [{"E": 1}, {"E": half}, {}]
    r = sigma_variation_check(f1, Q(2, -1), "E", [0, half, 1])
    assert r.left and r.certificates["branch"] == "sigma_zero"
    assert sigma_variation_check(f1, Q(1, 1), "E", [0]).left
    with pytest.raises(ValueError):
        sigma_variation_check(f1, Q(1, 1), "L", [0])
