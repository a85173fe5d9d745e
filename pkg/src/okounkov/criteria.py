"""Positivity criteria read off Newton-Okounkov polygons.

Every check returns a :class:`CriterionReport` pairing a convex-geometric
verdict (left) with an independent intersection-theoretic one (right).
The theorems being exercised say the two always agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .body import okounkov_polygon, profiles, valuation_vector
from .cones import is_ample, is_nef, is_pseudoeffective, mu_threshold
from .lattice import Flag, NotBig, SurfaceModel, format_rat
from .polygon import (
    Polygon,
    polygon_contains,
    polygon_includes,
    polygon_intersection,
    polygon_min_sum,
    polygon_slice_right,
    polygon_translate,
    standard_simplex,
)
from .zariski import (
    _require_big,
    asymptotic_multiplicity,
    is_big_class,
    point_in_bminus,
    point_in_bplus,
    sigma_coefficient,
    zariski_decompose,
)

ZERO = Fraction(0)
ORIGIN = (ZERO, ZERO)


def jsonable(obj):
    """Recursively convert Fractions, polygons and tuples into JSON values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return format_rat(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Polygon):
        return obj.to_json()["vertices"]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    left: bool
    right: bool
    certificates: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.left == self.right

    def to_json(self) -> dict:
        return {
            "criterion": self.criterion,
            "left": self.left,
            "right": self.right,
            "agree": self.agree,
            "certificates": jsonable(self.certificates),
        }


@dataclass(frozen=True)
class SimplexConstant:
    value: Fraction
    tight: object = None  # the edge (a, b, c) or vertex that bounds lambda


def origin_criterion(model: SurfaceModel, d, flag: Flag) -> CriterionReport:
    """0 in the polygon  <=>  x not in B_-(D)."""
    poly = okounkov_polygon(model, d, flag)
    return CriterionReport(
        "theoremA",
        polygon_contains(poly, ORIGIN),
        not point_in_bminus(model, d, flag),
        {"flag": flag.id, "divisor": tuple(d), "polygon": poly},
    )


def simplex_constant_of(poly: Polygon) -> SimplexConstant:
    """Largest lambda with the standard lambda-simplex inside ``poly``."""
    if not polygon_contains(poly, ORIGIN) or len(poly) < 3:
        return SimplexConstant(ZERO, "origin")
    best = None
    tight = None
    for a, b, c in poly.halfplanes():
        # edge inequality a*x + b*y >= c with c <= 0 since 0 is inside
        for coef in (a, b):
            if coef < 0:
                bound = c / coef
                if best is None or bound < best:
                    best, tight = bound, (a, b, c)
    if best is None:
        raise ValueError("unbounded polygon")
    return SimplexConstant(best, tight)


def largest_simplex_constant(model: SurfaceModel, d, flag: Flag) -> SimplexConstant:
    return simplex_constant_of(okounkov_polygon(model, d, flag))


def simplex_criterion(model: SurfaceModel, d, flag: Flag) -> CriterionReport:
    """Some simplex fits in the polygon  <=>  x not in B_+(D)."""
    lam = largest_simplex_constant(model, d, flag)
    return CriterionReport(
        "theoremB",
        lam.value > 0,
        not point_in_bplus(model, d, flag),
        {
            "flag": flag.id,
            "divisor": tuple(d),
            "lambda": lam.value,
            "host_ample": is_ample(model, model.curve(flag.curve).cls),
        },
    )


def flag_coverage(model: SurfaceModel, flags: Sequence[Flag]) -> dict:
    hosts = {f.curve for f in flags}
    vg_hosts = {f.curve for f in flags if f.very_general}
    catalog = {c.id for c in model.curves}
    return {
        "uncovered": sorted(catalog - hosts),
        "without_very_general": sorted(catalog - vg_hosts),
        "complete": catalog <= hosts and catalog <= vg_hosts,
    }


def nef_report(model: SurfaceModel, d, flags: Sequence[Flag] | None = None) -> CriterionReport:
    """Origin in every suite polygon  vs.  nef by pairing."""
    flags = list(model.flags if flags is None else flags)
    failing = [f.id for f in flags if not polygon_contains(okounkov_polygon(model, d, f), ORIGIN)]
    cov = flag_coverage(model, flags)
    cert = {"failing_flags": failing, "coverage": cov}
    if not cov["complete"]:
        cert["warning"] = "flag suite does not cover catalog"
    return CriterionReport("nef", not failing, is_nef(model, d), cert)


def ample_report(model: SurfaceModel, d, flags: Sequence[Flag] | None = None) -> CriterionReport:
    """Positive simplex constant on every suite flag  vs.  ample by Nakai-Moishezon."""
    flags = list(model.flags if flags is None else flags)
    lams = {f.id: largest_simplex_constant(model, d, f).value for f in flags}
    cov = flag_coverage(model, flags)
    cert = {"lambda": lams, "coverage": cov}
    if not cov["complete"]:
        cert["warning"] = "flag suite does not cover catalog"
    return CriterionReport("ample", all(v > 0 for v in lams.values()), is_ample(model, d), cert)


def theorem_c_report(model: SurfaceModel, d, flag: Flag) -> CriterionReport:
    """Offset quadrant, very-general corner point, and N + P translation identity."""
    d = model.check_class(d)
    z = zariski_decompose(model, d)
    sigma = z.coefficient(flag.curve)
    poly = okounkov_polygon(model, d, flag)
    quadrant = all(x >= sigma and y >= 0 for x, y in poly.vertices)
    corner = polygon_contains(poly, (sigma, ZERO)) if flag.very_general else True
    shift = valuation_vector(model, flag, z.negative)
    poly_p = okounkov_polygon(model, z.positive, flag)
    translated = polygon_translate(poly_p, shift)
    identity = translated == poly
    off_support = not point_in_bminus(model, d, flag)
    if off_support:
        identity = identity and poly == poly_p
    checks = {"quadrant": quadrant, "very_general_corner": corner, "translation": identity}
    return CriterionReport(
        "theoremC",
        all(checks.values()),
        True,
        {
            "flag": flag.id,
            "divisor": d,
            "sigma": sigma,
            "nu_N": shift,
            "polygon": poly,
            "polygon_P": poly_p,
            "checks": checks,
            "very_general": flag.very_general,
        },
    )


def nested_check(model: SurfaceModel, d, ample, eps_list: Iterable, flag: Flag) -> CriterionReport:
    """Polygon of D inside the polygon of D + eps*A, monotonically in eps."""
    d = model.check_class(d)
    ample = model.check_class(ample)
    if not is_ample(model, ample):
        raise ValueError("perturbation class is not ample")
    eps_sorted = sorted(Fraction(e) for e in eps_list)
    if any(e < 0 for e in eps_sorted):
        raise ValueError("eps must be non-negative")
    chain = [okounkov_polygon(model, d, flag)]
    for e in eps_sorted:
        chain.append(okounkov_polygon(model, tuple(x + e * y for x, y in zip(d, ample)), flag))
    inclusions = [polygon_includes(b, a) for a, b in zip(chain, chain[1:])]
    strict = [a != b for a, b in zip(chain, chain[1:])]
    return CriterionReport(
        "nested",
        all(inclusions),
        True,
        {"flag": flag.id, "eps": eps_sorted, "inclusions": inclusions, "strict": strict, "chain": chain},
    )


def slice_check(model: SurfaceModel, d, flag: Flag, t) -> CriterionReport:
    """Right slice at t equals the polygon of D - tC shifted by (t, 0)."""
    d = model.check_class(d)
    t = Fraction(t)
    host = model.curve(flag.curve).cls
    mu = mu_threshold(model, d, host)
    if not 0 <= t < mu:
        raise ValueError(f"t={format_rat(t)} outside [0, mu={format_rat(mu)})")
    lhs = polygon_slice_right(okounkov_polygon(model, d, flag), t)
    rhs = polygon_translate(okounkov_polygon(model, tuple(x - t * c for x, c in zip(d, host)), flag), (t, 0))
    return CriterionReport(
        "slice",
        lhs == rhs,
        True,
        {"flag": flag.id, "t": t, "slice": lhs, "shifted": rhs},
    )


def multiplicity_bound_check(model: SurfaceModel, d, flag: Flag) -> CriterionReport:
    """mult_x||D|| <= min of nu1 + nu2, and that minimum equals a + alpha(a)."""
    poly = okounkov_polygon(model, d, flag)
    pr = profiles(model, d, flag)
    mult = asymptotic_multiplicity(model, d, flag)
    min_sum = polygon_min_sum(poly)
    start = pr.a + pr.alpha(pr.a)
    return CriterionReport(
        "multiplicity",
        mult <= min_sum and min_sum == start,
        True,
        {"flag": flag.id, "mult": mult, "min_sum": min_sum, "a": pr.a, "b": pr.alpha(pr.a), "strict": mult < min_sum},
    )


def augmented_sequence_check(
    model: SurfaceModel, d, ample, flag: Flag, eps, p_max: int
) -> CriterionReport:
    """Simplex intersections and multiplicities along pD - A, p = 1..p_max.

    Left: the intersection with the eps-simplex is nonempty from some p on
    and the multiplicity sequence ends at 0.  Right: x is not in B_+(D).
    The threshold p_eps is the first p from which every big level meets the
    simplex; it is reported, never extrapolated past ``p_max``.
    """
    d = model.check_class(d)
    ample = model.check_class(ample)
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    simplex = standard_simplex(eps)
    levels = []
    for p in range(1, p_max + 1):
        dp = tuple(p * x - y for x, y in zip(d, ample))
        if not is_big_class(model, dp):
            continue
        poly = okounkov_polygon(model, dp, flag)
        meets = not polygon_intersection(poly, simplex).is_empty
        levels.append((p, meets, asymptotic_multiplicity(model, dp, flag)))
    if not levels:
        raise ValueError(f"no p <= {p_max} makes pD - A big")
    p_eps = None
    for p, meets, _ in reversed(levels):
        if not meets:
            break
        p_eps = p
    mults = [m for _, _, m in levels]
    left = p_eps is not None and mults[-1] == 0
    return CriterionReport(
        "augmented",
        left,
        not point_in_bplus(model, d, flag),
        {
            "flag": flag.id,
            "eps": eps,
            "levels": [p for p, _, _ in levels],
            "meets": [m for _, m, _ in levels],
            "mult": mults,
            "p_eps": p_eps,
        },
    )


def sigma_variation_check(model: SurfaceModel, d, curve_id: str, t_grid: Iterable) -> CriterionReport:
    """Negative part along D - tE for a negative curve E.

    sigma_E(D) = 0: sigma_E stays 0 and N(D - tE) grows coefficient-wise.
    sigma_E(D) > 0: N(D - tE) = N(D) - tE for t in [0, sigma_E(D)].
    """
    d = model.check_class(d)
    _require_big(model, d)
    curve = model.curve(curve_id)
    if not curve.is_negative:
        raise ValueError(f"{curve_id} is not a negative curve")
    sigma = sigma_coefficient(model, d, curve_id)
    grid = sorted(Fraction(t) for t in t_grid)
    z0 = zariski_decompose(model, d)
    negs = []
    for t in grid:
        dt = tuple(x - t * c for x, c in zip(d, curve.cls))
        if not is_pseudoeffective(model, dt):
            raise ValueError(f"D - tE not pseudoeffective at t={format_rat(t)}")
        negs.append(zariski_decompose(model, dt).negative)
    ok = True
    if sigma == 0:
        ok = all(n.get(curve_id, ZERO) == 0 for n in negs)
        ids = [c.id for c in model.curves]
        for a, b in zip(negs, negs[1:]):
            if any(b.get(i, ZERO) < a.get(i, ZERO) for i in ids):
                ok = False
        branch = "sigma_zero"
    else:
        branch = "sigma_positive"
        for t, n in zip(grid, negs):
            if 0 <= t <= sigma:
                expect = dict(z0.negative)
                expect[curve_id] = expect[curve_id] - t
                expect = {k: v for k, v in expect.items() if v != 0}
                if n != expect:
                    ok = False
    return CriterionReport(
        "sigma",
        ok,
        True,
        {"curve": curve_id, "sigma": sigma, "branch": branch, "grid": grid, "negative_parts": negs},
    )


def require_big(model: SurfaceModel, d) -> None:
    if not is_big_class(model, d):
        raise NotBig("not big")
