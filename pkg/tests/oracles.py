"""Independent reference computations used only by the tests."""
from fractions import Fraction
from itertools import combinations

from okounkov.lattice import intersect, is_negative_definite, solve


def pairing_table(model, classes_a, classes_b):
    return [[intersect(model, a, b) for b in classes_b] for a in classes_a]


def exhaustive_zariski(model, d):
    """Try every subset of negative curves; exactly one gives a Zariski decomposition."""
    d = tuple(Fraction(x) for x in d)
    negs = model.negative_curves
    found = []
    for k in range(len(negs) + 1):
        for subset in combinations(negs, k):
            if subset:
                gram = [[intersect(model, a.cls, b.cls) for b in subset] for a in subset]
                if not is_negative_definite(gram):
                    continue
                (x,) = solve(gram, [[intersect(model, d, c.cls) for c in subset]])
            else:
                x = []
            if any(v <= 0 for v in x):
                continue
            p = list(d)
            for c, v in zip(subset, x):
                for i, w in enumerate(c.cls):
                    p[i] -= v * w
            if all(intersect(model, p, e) >= 0 for e in model.eff_gens):
                found.append((tuple(p), {c.id: v for c, v in zip(subset, x)}))
    assert len(found) == 1, f"expected a unique decomposition, got {len(found)}"
    return found[0]


def sampled_profiles(model, d, flag, t):
    """alpha(t), beta(t) from a fresh decomposition of D - tC."""
    host = model.curve(flag.curve).cls
    dt = tuple(Fraction(x) - Fraction(t) * c for x, c in zip(d, host))
    p, neg = exhaustive_zariski(model, dt)
    alpha = sum((v * flag.mult(cid) for cid, v in neg.items() if cid != flag.curve), Fraction(0))
    return alpha, alpha + intersect(model, p, host)


def bisect_simplex_constant(poly_contains, hi, width=Fraction(1, 1000)):
    """Bisection on lambda using only point containment; returns (lo, hi)."""
    lo = Fraction(0)
    hi = Fraction(hi)
    if not poly_contains((0, 0)):
        return lo, lo
    while hi - lo > width:
        mid = (lo + hi) / 2
        if all(poly_contains(p) for p in [(0, 0), (mid, 0), (0, mid)]):
            lo = mid
        else:
            hi = mid
    return lo, hi


def brute_hull_points(rays, a, m, box=60):
    """Lattice points of the section polytope by scanning a fixed box."""
    return [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if all(v[0] * x + v[1] * y >= -m * c for v, c in zip(rays, a))
    ]
