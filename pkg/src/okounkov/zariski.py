"""Zariski decomposition, volume, sigma-invariants and base-locus supports.

The negative part is found by iterated enlargement of the support: start with
the curves meeting D negatively, solve the negative-definite system
``(D - N).G = 0`` for G in the support, add every curve that the new positive
part still meets negatively, and repeat.

The solver also works along a ray ``D + s*V`` for infinitesimal ``s > 0``:
every number is then a pair ``(value, slope)`` compared lexicographically.
The chamber walk in :mod:`okounkov.polygon` uses this to read off the support
that is valid immediately to the right of a breakpoint.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cones import is_pseudoeffective
from .lattice import (
    CatalogInsufficient,
    Flag,
    NotBig,
    NotPseudoeffective,
    SurfaceModel,
    flag_incidence,
    intersect,
    is_negative_definite,
    solve,
)

ZERO = Fraction(0)


@dataclass(frozen=True)
class ZariskiDecomposition:
    """D = P + N with N supported on catalog curves."""

    positive: tuple
    negative: dict
    support: tuple

    def coefficient(self, curve_id: str) -> Fraction:
        return self.negative.get(curve_id, ZERO)

    def negative_class(self, model: SurfaceModel) -> tuple:
        out = [ZERO] * model.rank
        for cid, x in self.negative.items():
            for i, v in enumerate(model.curve(cid).cls):
                out[i] += x * v
        return tuple(out)


@dataclass(frozen=True)
class RaySupport:
    """Negative part of D + s*V for small s > 0: coefficients ``value + s*slope``."""

    support: tuple
    value: tuple
    slope: tuple
    positive_value: tuple
    positive_slope: tuple


def _lex_neg(v: Fraction, w: Fraction) -> bool:
    return v < 0 or (v == 0 and w < 0)


def _pair(model, d0, d1, cls):
    return intersect(model, d0, cls), intersect(model, d1, cls)


def negative_part_along(model: SurfaceModel, base, direction=None) -> RaySupport:
    """Zariski negative part of ``base + s*direction`` for infinitesimal s > 0.

    With ``direction`` omitted this is the ordinary decomposition of ``base``.
    The caller is responsible for pseudo-effectivity.
    """
    rank = model.rank
    d0 = tuple(Fraction(x) for x in base)
    d1 = tuple(Fraction(x) for x in direction) if direction is not None else (ZERO,) * rank
    curves = model.negative_curves

    support = [c for c in curves if _lex_neg(*_pair(model, d0, d1, c.cls))]
    while True:
        if support:
            gram = [[intersect(model, a.cls, b.cls) for b in support] for a in support]
            if not is_negative_definite(gram):
                raise CatalogInsufficient(
                    "support " + ",".join(c.id for c in support) + " is not negative definite"
                )
            rhs0 = [intersect(model, d0, c.cls) for c in support]
            rhs1 = [intersect(model, d1, c.cls) for c in support]
            x0, x1 = solve(gram, [rhs0, rhs1])
        else:
            x0, x1 = [], []
        p0 = list(d0)
        p1 = list(d1)
        for c, a, b in zip(support, x0, x1):
            for i, v in enumerate(c.cls):
                if v:
                    p0[i] -= a * v
                    p1[i] -= b * v
        ids = {c.id for c in support}
        extra = [
            c
            for c in curves
            if c.id not in ids and _lex_neg(intersect(model, p0, c.cls), intersect(model, p1, c.cls))
        ]
        if not extra:
            break
        support.extend(extra)

    for a, b in zip(x0, x1):
        if not (a > 0 or (a == 0 and b > 0)):
            raise CatalogInsufficient("negative part has a non-positive coefficient")
    for e in model.eff_gens:
        if _lex_neg(intersect(model, p0, e), intersect(model, p1, e)):
            raise CatalogInsufficient(
                "positive part is not nef; the curve catalog lacks a negative curve"
            )
    order = {c.id: i for i, c in enumerate(model.curves)}
    triples = sorted(zip(support, x0, x1), key=lambda t: order[t[0].id])
    return RaySupport(
        support=tuple(c.id for c, _, _ in triples),
        value=tuple(a for _, a, _ in triples),
        slope=tuple(b for _, _, b in triples),
        positive_value=tuple(p0),
        positive_slope=tuple(p1),
    )


@lru_cache(maxsize=65536)
def _decompose_cached(model: SurfaceModel, d: tuple) -> ZariskiDecomposition:
    if not is_pseudoeffective(model, d):
        raise NotPseudoeffective("not pseudoeffective")
    ray = negative_part_along(model, d)
    negative = {cid: x for cid, x in zip(ray.support, ray.value) if x != 0}
    return ZariskiDecomposition(
        positive=ray.positive_value,
        negative=negative,
        support=tuple(cid for cid in ray.support if cid in negative),
    )


def zariski_decompose(model: SurfaceModel, d) -> ZariskiDecomposition:
    """Zariski decomposition of a pseudo-effective class.

    Raises NotPseudoeffective, or CatalogInsufficient when the fixed point
    of the support iteration leaves a positive part that is not nef.
    """
    return _decompose_cached(model, model.check_class(d))


def volume(model: SurfaceModel, d) -> Fraction:
    d = model.check_class(d)
    if not is_pseudoeffective(model, d):
        return ZERO
    p = zariski_decompose(model, d).positive
    return intersect(model, p, p)


def sigma_coefficient(model: SurfaceModel, d, curve_id: str) -> Fraction:
    model.curve(curve_id)
    return zariski_decompose(model, d).coefficient(curve_id)


def bminus_divisorial_support(model: SurfaceModel, d) -> frozenset:
    return frozenset(zariski_decompose(model, d).support)


def _require_big(model: SurfaceModel, d) -> ZariskiDecomposition:
    d = model.check_class(d)
    if not is_pseudoeffective(model, d):
        raise NotBig("not big")
    z = zariski_decompose(model, d)
    if intersect(model, z.positive, z.positive) <= 0:
        raise NotBig("not big")
    return z


def bplus_support(model: SurfaceModel, d) -> frozenset:
    """Supp N together with the catalog curves that P meets trivially."""
    z = _require_big(model, d)
    null = {c.id for c in model.curves if intersect(model, z.positive, c.cls) == 0}
    return frozenset(z.support) | null


def point_in_bminus(model: SurfaceModel, d, flag: Flag) -> bool:
    return any(flag_incidence(model, flag, cid) for cid in bminus_divisorial_support(model, d))


def point_in_bplus(model: SurfaceModel, d, flag: Flag) -> bool:
    return any(flag_incidence(model, flag, cid) for cid in bplus_support(model, d))


def asymptotic_multiplicity(model: SurfaceModel, d, flag: Flag) -> Fraction:
    """mult_x||D|| = a + b', a = sigma_C(D), b' = mult_x N(D - aC).

    Catalog curves are smooth at flag points, so each incident curve of the
    negative part contributes its coefficient once.
    """
    d = model.check_class(d)
    _require_big(model, d)
    host = model.curve(flag.curve)
    a = sigma_coefficient(model, d, host.id)
    rest = tuple(x - a * c for x, c in zip(d, host.cls))
    z = zariski_decompose(model, rest)
    b = sum(
        (x for cid, x in z.negative.items() if cid != host.id and flag.mult(cid) > 0),
        ZERO,
    )
    return a + b


def decomposition_as_dict(model: SurfaceModel, z: ZariskiDecomposition) -> dict:
    from .lattice import format_rat

    return {
        "positive": [format_rat(x) for x in z.positive],
        "negative": {cid: format_rat(z.negative[cid]) for cid in z.support},
        "support": list(z.support),
    }


def is_big_class(model: SurfaceModel, d) -> bool:
    try:
        _require_big(model, d)
    except NotBig:
        return False
    return True
