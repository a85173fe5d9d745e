"""Newton-Okounkov polygons of big divisors via a chamber walk.

For a flag (C, x) and D_t = D - tC the body is the region

    a <= t <= mu,   alpha(t) <= y <= beta(t),

with a = sigma_C(D), mu the pseudo-effective threshold of D along C,
alpha(t) = ord_x(N(D_t)|_C) and beta(t) = alpha(t) + P(D_t).C.  Inside a
chamber of constant Zariski support both profiles are affine in t, so the
walk only needs the next parameter where a negative coefficient vanishes or
a new curve starts meeting P(D_t) negatively.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .cones import mu_threshold
from .lattice import Flag, ModelError, SurfaceModel, format_rat, intersect
from .polygon import Polygon
from .zariski import _require_big, negative_part_along, sigma_coefficient

ZERO = Fraction(0)


@dataclass(frozen=True)
class PiecewiseLinear:
    """Continuous piecewise-affine function on ``[breakpoints[0], breakpoints[-1]]``.

    ``pieces[i] = (intercept, slope)`` describes the function on
    ``[breakpoints[i], breakpoints[i+1]]`` as ``intercept + slope * t``.
    """

    breakpoints: tuple
    pieces: tuple

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        bp = self.breakpoints
        if not bp[0] <= t <= bp[-1]:
            raise ValueError(f"t={format_rat(t)} outside [{format_rat(bp[0])}, {format_rat(bp[-1])}]")
        for i, (c0, c1) in enumerate(self.pieces):
            if t <= bp[i + 1]:
                return c0 + c1 * t
        c0, c1 = self.pieces[-1]
        return c0 + c1 * t

    @property
    def domain(self) -> tuple:
        return self.breakpoints[0], self.breakpoints[-1]

    def values(self) -> list:
        return [self(t) for t in self.breakpoints]

    def is_convex(self) -> bool:
        slopes = [s for _, s in self.pieces]
        return all(a <= b for a, b in zip(slopes, slopes[1:]))

    def is_concave(self) -> bool:
        slopes = [s for _, s in self.pieces]
        return all(a >= b for a, b in zip(slopes, slopes[1:]))

    def to_json(self) -> dict:
        return {
            "breakpoints": [format_rat(t) for t in self.breakpoints],
            "pieces": [[format_rat(a), format_rat(b)] for a, b in self.pieces],
        }


@dataclass(frozen=True)
class Profiles:
    a: Fraction
    mu: Fraction
    alpha: PiecewiseLinear
    beta: PiecewiseLinear
    chambers: tuple  # support curve ids per chamber


def valuation_vector(model: SurfaceModel, flag: Flag, effective: Mapping[str, object]) -> tuple:
    """Valuation (nu1, nu2) of an effective combination of catalog curves."""
    nu1 = ZERO
    nu2 = ZERO
    for cid, coeff in effective.items():
        coeff = Fraction(coeff)
        model.curve(cid)
        if coeff < 0:
            raise ValueError(f"negative coefficient {format_rat(coeff)} for {cid}")
        if cid == flag.curve:
            nu1 += coeff
        else:
            nu2 += coeff * flag.mult(cid)
    return nu1, nu2


def _walk(model: SurfaceModel, d: tuple, flag: Flag) -> Profiles:
    _require_big(model, d)
    host = model.curve(flag.curve)
    c = host.cls
    minus_c = tuple(-x for x in c)
    a = sigma_coefficient(model, d, host.id)
    mu = mu_threshold(model, d, c)
    negs = model.negative_curves

    breakpoints = [a]
    alpha_pieces = []
    beta_pieces = []
    chambers = []
    t = a
    while t < mu:
        base = tuple(x - t * y for x, y in zip(d, c))
        ray = negative_part_along(model, base, minus_c)
        if host.id in ray.support:
            raise ModelError("host curve re-entered the negative part past sigma_C")
        # alpha, beta as value + (s - t) * slope
        al0 = sum((x * flag.mult(cid) for cid, x in zip(ray.support, ray.value)), ZERO)
        al1 = sum((x * flag.mult(cid) for cid, x in zip(ray.support, ray.slope)), ZERO)
        pc0 = intersect(model, ray.positive_value, c)
        pc1 = intersect(model, ray.positive_slope, c)

        nxt = mu
        for x0, x1 in zip(ray.value, ray.slope):
            if x1 < 0:
                cand = t - x0 / x1
                if t < cand < nxt:
                    nxt = cand
        in_support = set(ray.support)
        for g in negs:
            if g.id in in_support:
                continue
            q0 = intersect(model, ray.positive_value, g.cls)
            q1 = intersect(model, ray.positive_slope, g.cls)
            if q1 < 0:
                cand = t - q0 / q1
                if t < cand < nxt:
                    nxt = cand
        alpha_pieces.append((al0 - al1 * t, al1))
        beta_pieces.append((al0 + pc0 - (al1 + pc1) * t, al1 + pc1))
        chambers.append(ray.support)
        breakpoints.append(nxt)
        t = nxt

    bp = tuple(breakpoints)
    return Profiles(
        a=a,
        mu=mu,
        alpha=PiecewiseLinear(bp, tuple(alpha_pieces)),
        beta=PiecewiseLinear(bp, tuple(beta_pieces)),
        chambers=tuple(chambers),
    )


@lru_cache(maxsize=32768)
def _profiles_cached(model: SurfaceModel, d: tuple, flag: Flag) -> Profiles:
    return _walk(model, d, flag)


def profiles(model: SurfaceModel, d, flag: Flag) -> Profiles:
    """Start a, threshold mu and the lower/upper profiles alpha, beta on [a, mu]."""
    return _profiles_cached(model, model.check_class(d), flag)


def okounkov_polygon(model: SurfaceModel, d, flag: Flag) -> Polygon:
    """Newton-Okounkov polygon of a big class for the flag, closed at t = mu."""
    pr = profiles(model, d, flag)
    pts = []
    for t, lo, hi in zip(pr.alpha.breakpoints, pr.alpha.values(), pr.beta.values()):
        pts.append((t, lo))
        pts.append((t, hi))
    return Polygon.from_points(pts)
