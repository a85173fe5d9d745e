"""Brute-force oracle on smooth toric surfaces.

For a torus-invariant flag (D_i, D_i & D_j) the valuation of a monomial
section chi^u of O(mD) is ``(<u, v_i> + m a_i, <u, v_j> + m a_j)``, where
``D = sum a_r D_r`` in torus-invariant form.  Hulls of these vectors,
scaled by 1/m, are inner approximations of the Newton-Okounkov polygon and
are compared against the chamber-walk result.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .body import okounkov_polygon
from .lattice import Flag, ModelError, SurfaceModel, determinant, intersect, solve
from .polygon import Polygon, convex_hull, polygon_area, polygon_includes


class NotTorusInvariant(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ToricModel:
    rays: tuple
    ray_classes: tuple
    curve_of_ray: tuple  # catalog curve id or None, per ray

    @property
    def n(self) -> int:
        return len(self.rays)

    def self_intersection(self, i: int) -> int:
        prev = self.rays[i - 1]
        nxt = self.rays[(i + 1) % self.n]
        v = self.rays[i]
        s = (prev[0] + nxt[0], prev[1] + nxt[1])
        # s = b * v
        b = s[0] // v[0] if v[0] else s[1] // v[1]
        if (b * v[0], b * v[1]) != s:
            raise ModelError("fan is not smooth")
        return -b

    def fan_intersection(self, i: int, j: int) -> int:
        if i == j:
            return self.self_intersection(i)
        if (i - j) % self.n in (1, self.n - 1):
            return 1
        return 0


def _det2(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _half(v) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_less(v, w) -> bool:
    if _half(v) != _half(w):
        return _half(v) < _half(w)
    return _det2(v, w) > 0


def validate_toric(toric: ToricModel, model: SurfaceModel) -> None:
    """Smooth complete fan whose intersection numbers match the model's Gram."""
    n = toric.n
    if n < 3:
        raise ModelError("fan needs at least three rays")
    for i in range(n):
        v, w = toric.rays[i], toric.rays[(i + 1) % n]
        if math.gcd(*v) != 1:
            raise ModelError(f"ray {v} not primitive")
        if _det2(v, w) != 1:
            raise ModelError("consecutive rays must form a positively oriented lattice basis")
    # each step turns by less than pi, so the fan is complete iff the
    # cyclic sequence of angles wraps past the positive x-axis exactly once
    if sum(1 for i in range(n) if not _angle_less(toric.rays[i], toric.rays[(i + 1) % n])) != 1:
        raise ModelError("rays do not wind once around the origin")
    if n - 2 != model.rank:
        raise ModelError("fan Picard rank differs from model rank")
    for i in range(n):
        for j in range(n):
            if intersect(model, toric.ray_classes[i], toric.ray_classes[j]) != toric.fan_intersection(i, j):
                raise ModelError(f"fan intersection D{i}.D{j} disagrees with the Gram matrix")
    # linear relations: sum <m, v_r> [D_r] = 0
    for k in range(2):
        rel = [Fraction(0)] * model.rank
        for v, cls in zip(toric.rays, toric.ray_classes):
            for idx, x in enumerate(cls):
                rel[idx] += v[k] * x
        if any(rel):
            raise ModelError("ray classes violate the toric linear relations")
    for cid, cls in zip(toric.curve_of_ray, toric.ray_classes):
        if cid is not None and model.curve(cid).cls != tuple(Fraction(x) for x in cls):
            raise ModelError(f"curve {cid} class differs from its boundary divisor")


def torus_invariant_rep(toric: ToricModel, model: SurfaceModel, d) -> tuple:
    """Coefficients a_r with sum a_r [D_r] = d (zero on two rays)."""
    d = model.check_class(d)
    rank = model.rank
    for subset in itertools.combinations(range(toric.n), rank):
        mat = [[toric.ray_classes[r][i] for r in subset] for i in range(rank)]
        if determinant(mat) in (1, -1):
            (x,) = solve(mat, [list(d)])
            a = [Fraction(0)] * toric.n
            for r, val in zip(subset, x):
                a[r] = val
            return tuple(a)
    raise ModelError("boundary classes do not contain a unimodular basis")


def section_polytope(toric: ToricModel, model: SurfaceModel, d, m: int = 1) -> list:
    """Lattice points u with <u, v_r> >= -m a_r for every ray."""
    a = torus_invariant_rep(toric, model, d)
    ma = [m * x for x in a]
    if any(x.denominator != 1 for x in ma):
        raise ValueError(f"m*D is not integral for m={m}")
    ma = [int(x) for x in ma]
    rays = toric.rays
    # bounding box from pairwise intersections of the constraint lines
    corners = []
    for i, j in itertools.combinations(range(toric.n), 2):
        det = _det2(rays[i], rays[j])
        if det == 0:
            continue
        ci, cj = -ma[i], -ma[j]
        x = Fraction(ci * rays[j][1] - cj * rays[i][1], det)
        y = Fraction(rays[i][0] * cj - rays[j][0] * ci, det)
        if all(v[0] * x + v[1] * y >= -c for v, c in zip(rays, ma)):
            corners.append((x, y))
    if not corners:
        return []
    xlo = math.ceil(min(p[0] for p in corners))
    xhi = math.floor(max(p[0] for p in corners))
    pts = []
    for x in range(xlo, xhi + 1):
        # each ray bounds y on this column: v1*y >= -c - v0*x
        lo, hi = -math.inf, math.inf
        for v, c in zip(rays, ma):
            rhs = -c - v[0] * x
            if v[1] > 0:
                lo = max(lo, math.ceil(Fraction(rhs, v[1])))
            elif v[1] < 0:
                hi = min(hi, math.floor(Fraction(rhs, v[1])))
            elif rhs > 0:
                lo, hi = 1, 0
                break
        if lo <= hi:
            pts.extend((x, y) for y in range(lo, hi + 1))
    return pts


def flag_rays(toric: ToricModel, model: SurfaceModel, flag: Flag) -> tuple:
    """(host ray, point ray) for a flag whose data matches a torus-fixed point."""
    if flag.curve not in toric.curve_of_ray:
        raise NotTorusInvariant(f"flag {flag.id}: host curve is not a boundary divisor")
    i = toric.curve_of_ray.index(flag.curve)
    boundary = {cid for cid in toric.curve_of_ray if cid is not None}
    for cid, mult in flag.local_mults.items():
        if mult and cid not in boundary:
            raise NotTorusInvariant(f"flag {flag.id}: point lies on non-invariant curve {cid}")
    for j in ((i + 1) % toric.n, (i - 1) % toric.n):
        ok = True
        for r, cid in enumerate(toric.curve_of_ray):
            if cid is None or r == i:
                continue
            want = 1 if r == j else 0
            if flag.mult(cid) != want:
                ok = False
                break
        if ok:
            return i, j
    raise NotTorusInvariant(f"flag {flag.id}: point is not a torus-fixed point")


@dataclass(frozen=True)
class SectionHull:
    m: int
    points: tuple
    hull: Polygon

    @property
    def empty(self) -> bool:
        return not self.points


def valuation_hull(toric: ToricModel, model: SurfaceModel, d, flag: Flag, m: int = 1) -> SectionHull:
    i, j = flag_rays(toric, model, flag)
    a = torus_invariant_rep(toric, model, d)
    pts = section_polytope(toric, model, d, m)
    vi, vj = toric.rays[i], toric.rays[j]
    ai, aj = int(m * a[i]), int(m * a[j])  # integral, checked by section_polytope
    vals = [
        (vi[0] * x + vi[1] * y + ai, vj[0] * x + vj[1] * y + aj)
        for x, y in pts
    ]
    integer_hull = convex_hull(vals)
    scaled = Polygon(tuple((Fraction(p) / m, Fraction(q) / m) for p, q in integer_hull))
    return SectionHull(m, tuple(vals), scaled)


@dataclass(frozen=True)
class OracleComparison:
    contained: bool
    area_gap: Fraction
    hull: SectionHull
    body: Polygon


def oracle_compare(toric: ToricModel, model: SurfaceModel, d, flag: Flag, m: int = 1) -> OracleComparison:
    body = okounkov_polygon(model, d, flag)
    sh = valuation_hull(toric, model, d, flag, m)
    return OracleComparison(
        contained=polygon_includes(body, sh.hull),
        area_gap=polygon_area(body) - polygon_area(sh.hull),
        hull=sh,
        body=body,
    )


def _fractions(rows):
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def toric_structure(model: SurfaceModel) -> Optional[ToricModel]:
    """Fan description for the bundled toric models, keyed by model name."""
    name = model.name
    if name == "p2":
        t = ToricModel(((1, 0), (0, 1), (-1, -1)), _fractions([[1], [1], [1]]), ("L1", "L2", None))
    elif name == "f1":
        t = ToricModel(
            ((1, 0), (0, 1), (-1, 1), (0, -1)),
            _fractions([[1, -1], [0, 1], [1, -1], [1, 0]]),
            (None, "E", "L", "M"),
        )
    elif name.startswith("F") and name[1:].isdigit():
        e = int(name[1:])
        t = ToricModel(
            ((1, 0), (0, 1), (-1, e), (0, -1)),
            _fractions([[0, 1], [1, 0], [0, 1], [1, e]]),
            ("F", "E", None, "S"),
        )
    elif name == "dp7":
        t = ToricModel(
            ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1)),
            _fractions([[1, -1, 0], [0, 1, 0], [1, -1, -1], [0, 0, 1], [1, 0, -1]]),
            ("M1", "E1", "L12", "E2", "M2"),
        )
    else:
        return None
    validate_toric(t, model)
    return t


def invariant_flags(toric: ToricModel, model: SurfaceModel) -> list:
    out = []
    for f in model.flags:
        try:
            flag_rays(toric, model, f)
        except NotTorusInvariant:
            continue
        out.append(f)
    return out
