import random
from fractions import Fraction

import pytest

from okounkov.cones import classify, is_ample, is_big, is_nef, is_pseudoeffective, mu_threshold, nef_witness, pseudoeffective_witness
from okounkov.lattice import ModelError
from okounkov.suites import random_classes

from conftest import Q
from oracles import pairing_table


def test_pseudoeffective_examples(f1, p2_minimal):
    assert not is_pseudoeffective(f1, Q(1, -2))
    assert pseudoeffective_witness(f1, Q(1, -2)) == Q(1, -1)
    # the witness really violates the pairing
    assert pairing_table(f1, [Q(1, -2)], [Q(1, -1)]) == [[-1]]
    assert is_pseudoeffective(p2_minimal, Q(0))
    assert is_pseudoeffective(f1, Q(1, 1))


def test_nef_examples(f1, p2_minimal):
    assert not is_nef(f1, Q(1, 1))
    assert nef_witness(f1, Q(1, 1)) == Q(0, 1)
    assert is_nef(f1, Q(1, 0))
    assert all(is_nef(p2_minimal, Q(d)) for d in range(6))


def test_big_examples(f1, p2_minimal):
    assert is_big(f1, Q(1, 1))
    assert not is_big(f1, Q(1, -1))
    assert not is_big(p2_minimal, Q(-1))


def test_ample_examples(f1, p2_minimal):
    assert is_ample(f1, Q(2, -1))
    assert not is_ample(f1, Q(1, 0))
    assert is_ample(p2_minimal, Q(1))


def test_mu_examples(f1):
    assert mu_threshold(f1, Q(1, 1), Q(3, -2)) == Fraction(1, 3)
    assert mu_threshold(f1, Q(1, 0), "E") == 1
    assert mu_threshold(f1, Q(1, 1), "E") == 2


def test_mu_unbounded(f1):
    with pytest.raises(ModelError, match="unbounded"):
        mu_threshold(f1, Q(1, 1), Q(0, 0))


def test_verdict_as_dict(f1):
    v = classify(f1, Q(1, -2)).as_dict()
    assert v["pseudoeffective"] is False
    assert v["witness"] == ["1", "-1"]


@pytest.mark.parametrize("name", ["p2", "f1", "dp7"])
def test_verdict_hierarchy(name, request):
    model = request.getfixturevalue(name)
    rng = random.Random(name)
    gen = random_classes(model, rng)
    for _ in range(200):
        v = classify(model, next(gen))
        assert not v.ample or v.nef
        assert not v.nef or v.pseudoeffective
        assert not v.ample or v.big
        assert not v.big or v.pseudoeffective


@pytest.mark.parametrize("name", ["p2", "f1", "dp7"])
def test_duality_consistency(name, request):
    model = request.getfixturevalue(name)
    assert all(is_nef(model, n) for n in model.nef_gens)
    assert all(is_pseudoeffective(model, e) for e in model.eff_gens)


def test_mu_monotone_under_ample(dp7):
    rng = random.Random(3)
    a = Q(3, -1, -1)
    assert is_ample(dp7, a)
    checked = 0
    for d in random_classes(dp7, rng):
        if checked == 40:
            break
        if not is_big(dp7, d):
            continue
        for c in dp7.curves:
            big = tuple(x + y for x, y in zip(d, a))
            assert mu_threshold(dp7, big, c.id) >= mu_threshold(dp7, d, c.id)
        checked += 1
