"""Deterministic verification suites over random classes of a model."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator

from . import criteria
from .cones import is_ample, is_nef, is_pseudoeffective, mu_threshold
from .lattice import SurfaceModel
from .toric import invariant_flags, oracle_compare, toric_structure
from .zariski import is_big_class

SUITES = ("theoremA", "theoremB", "theoremC", "slice", "nested", "multiplicity", "augmented", "sigma", "oracle")
EPS_CHAIN = (Fraction(1, 4), Fraction(1, 2), Fraction(1))


def random_classes(model: SurfaceModel, rng: random.Random, box: int = 6) -> Iterator[tuple]:
    while True:
        yield tuple(Fraction(rng.randint(-box, box)) for _ in range(model.rank))


def random_big_classes(model: SurfaceModel, count: int, rng: random.Random, box: int = 6) -> list:
    out = []
    seen = set()
    for d in itertools.islice(random_classes(model, rng, box), 200 * count):
        if d not in seen and is_big_class(model, d):
            seen.add(d)
            out.append(d)
            if len(out) == count:
                break
    return out


def random_pseudoeffective_classes(model: SurfaceModel, count: int, rng: random.Random, box: int = 6) -> list:
    out = []
    for d in itertools.islice(random_classes(model, rng, box), 200 * count):
        if is_pseudoeffective(model, d):
            out.append(d)
            if len(out) == count:
                break
    return out


def random_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 12) -> Fraction:
    """Rational in ``[lo, hi)`` with a small denominator."""
    span = hi - lo
    q = rng.randint(1, max_den)
    k = rng.randint(0, q - 1)
    return lo + span * Fraction(k, q)


def default_ample(model: SurfaceModel) -> tuple:
    """An integral ample class: the sum of the nef generators, else a small search."""
    total = tuple(sum(col) for col in zip(*model.nef_gens))
    if is_ample(model, total):
        return total
    for d in itertools.product(range(-3, 6), repeat=model.rank):
        d = tuple(Fraction(x) for x in d)
        if is_ample(model, d):
            return d
    raise ValueError("no small ample class found")


def oracle_report(model, toric, d, flag, levels=(1, 2, 6)) -> criteria.CriterionReport:
    comps = {m: oracle_compare(toric, model, d, flag, m) for m in levels}
    contained = all(c.contained for c in comps.values())
    gaps = {m: c.area_gap for m, c in comps.items()}
    nef = is_nef(model, d)
    ok = contained and gaps[levels[-1]] <= gaps[levels[0]]
    if nef:
        ok = ok and gaps[levels[0]] == 0
    return criteria.CriterionReport(
        "oracle", ok, True, {"flag": flag.id, "divisor": d, "gaps": gaps, "contained": contained, "nef": nef}
    )


def run_suite(
    model: SurfaceModel,
    suite: str,
    samples: int = 12,
    seed: int = 0,
    t=None,
    eps=Fraction(1, 2),
    m: int = 6,
    p_max: int = 8,
) -> list:
    """Reports for one suite over ``samples`` random big classes and all flags.

    ``t`` fixes the slice parameter (clipped pairs with t >= mu are skipped),
    ``eps``/``p_max`` drive the augmented suite and ``m`` is the finest
    oracle level.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    rng = random.Random(f"{model.name}:{suite}:{seed}")
    classes = random_big_classes(model, samples, rng)
    flags = list(model.flags)
    reports = []
    if suite == "theoremA":
        reports = [criteria.origin_criterion(model, d, f) for d in classes for f in flags]
    elif suite == "theoremB":
        reports = [criteria.simplex_criterion(model, d, f) for d in classes for f in flags]
    elif suite == "theoremC":
        reports = [criteria.theorem_c_report(model, d, f) for d in classes for f in flags]
    elif suite == "multiplicity":
        reports = [criteria.multiplicity_bound_check(model, d, f) for d in classes for f in flags]
    elif suite == "slice":
        for d in classes:
            for f in flags:
                mu = mu_threshold(model, d, model.curve(f.curve).cls)
                if t is not None:
                    if 0 <= t < mu:
                        reports.append(criteria.slice_check(model, d, f, t))
                    continue
                for _ in range(3):
                    reports.append(criteria.slice_check(model, d, f, random_rational(rng, Fraction(0), mu)))
    elif suite == "nested":
        a = default_ample(model)
        reports = [criteria.nested_check(model, d, a, EPS_CHAIN, f) for d in classes for f in flags]
    elif suite == "augmented":
        a = default_ample(model)
        for d in classes:
            for f in flags:
                reports.append(criteria.augmented_sequence_check(model, d, a, f, eps, p_max))
    elif suite == "sigma":
        for d in classes:
            for c in model.negative_curves:
                reports.append(criteria.sigma_variation_check(model, d, c.id, sigma_grid(model, d, c.id, rng)))
    elif suite == "oracle":
        toric = toric_structure(model)
        if toric is not None:
            inv = invariant_flags(toric, model)
            levels = (1, m) if m > 1 else (1,)
            reports = [oracle_report(model, toric, d, f, levels) for d in classes for f in inv]
    return reports


def sigma_grid(model: SurfaceModel, d, curve_id: str, rng: random.Random, size: int = 10) -> list:
    """``size`` rational t with D - tE pseudo-effective, inside [0, sigma] when sigma > 0."""
    from .zariski import sigma_coefficient

    sigma = sigma_coefficient(model, d, curve_id)
    hi = sigma if sigma > 0 else mu_threshold(model, d, model.curve(curve_id).cls)
    grid = {Fraction(0), hi}
    while len(grid) < size:
        grid.add(random_rational(rng, Fraction(0), hi, max_den=24))
    return sorted(grid)


def summarise(reports: list) -> dict:
    bad = [r for r in reports if not r.agree]
    return {"checks": len(reports), "disagreements": len(bad)}

