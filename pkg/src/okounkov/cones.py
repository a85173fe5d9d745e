"""Membership in the pseudo-effective, big, nef and ample cones.

On a surface the closed effective cone and the nef cone are dual, so every
test is a finite list of exact pairings against the model's generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .lattice import ModelError, SurfaceModel, intersect


@dataclass(frozen=True)
class PositivityVerdict:
    pseudoeffective: bool
    big: bool
    nef: bool
    ample: bool
    witness: Optional[tuple] = None

    def as_dict(self) -> dict:
        from .lattice import format_rat

        return {
            "pseudoeffective": self.pseudoeffective,
            "big": self.big,
            "nef": self.nef,
            "ample": self.ample,
            "witness": None if self.witness is None else [format_rat(x) for x in self.witness],
        }


def pseudoeffective_witness(model: SurfaceModel, d) -> Optional[tuple]:
    """First nef generator pairing negatively with ``d``, or None."""
    d = model.check_class(d)
    for n in model.nef_gens:
        if intersect(model, d, n) < 0:
            return n
    return None


def is_pseudoeffective(model: SurfaceModel, d) -> bool:
    return pseudoeffective_witness(model, d) is None


def nef_witness(model: SurfaceModel, d) -> Optional[tuple]:
    d = model.check_class(d)
    for e in model.eff_gens:
        if intersect(model, d, e) < 0:
            return e
    return None


def is_nef(model: SurfaceModel, d) -> bool:
    return nef_witness(model, d) is None


def is_big(model: SurfaceModel, d) -> bool:
    from .zariski import volume

    return is_pseudoeffective(model, d) and volume(model, d) > 0


def is_ample(model: SurfaceModel, d) -> bool:
    """Nakai-Moishezon against the effective generators."""
    d = model.check_class(d)
    return all(intersect(model, d, e) > 0 for e in model.eff_gens) and intersect(model, d, d) > 0


def classify(model: SurfaceModel, d) -> PositivityVerdict:
    d = model.check_class(d)
    witness = pseudoeffective_witness(model, d)
    if witness is not None:
        return PositivityVerdict(False, False, False, False, witness)
    nef_w = nef_witness(model, d)
    return PositivityVerdict(
        pseudoeffective=True,
        big=is_big(model, d),
        nef=nef_w is None,
        ample=is_ample(model, d),
        witness=nef_w,
    )


def mu_threshold(model: SurfaceModel, d, c) -> Fraction:
    """sup{t : d - t*c pseudo-effective} for a curve class ``c``.

    ``c`` may be a catalog curve id or a class.  The pseudo-effectivity
    constraints are linear in t, so the supremum is a minimum of ratios over
    the nef generators that pair positively with ``c``.
    """
    d = model.check_class(d)
    if isinstance(c, str):
        c = model.curve(c).cls
    best = None
    for n in model.nef_gens:
        cn = intersect(model, c, n)
        if cn > 0:
            r = intersect(model, d, n) / cn
            if best is None or r < best:
                best = r
    if best is None:
        raise ModelError("unbounded threshold: no nef generator pairs positively with the curve")
    return best
