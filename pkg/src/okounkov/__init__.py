"""Exact Zariski decompositions and Newton-Okounkov polygons of divisors on surfaces."""
from .body import PiecewiseLinear, Profiles, okounkov_polygon, profiles, valuation_vector
from .cones import (
    PositivityVerdict,
    classify,
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    mu_threshold,
)
from .lattice import (
    CatalogInsufficient,
    Curve,
    Flag,
    ModelError,
    NotBig,
    NotPseudoeffective,
    SurfaceModel,
    bundled_model,
    flag_incidence,
    intersect,
    load_model,
    load_model_file,
)
from .polygon import (
    Polygon,
    polygon_area,
    polygon_contains,
    polygon_includes,
    polygon_min_sum,
    polygon_slice_right,
    polygon_translate,
)
from .zariski import (
    ZariskiDecomposition,
    asymptotic_multiplicity,
    bminus_divisorial_support,
    bplus_support,
    point_in_bminus,
    point_in_bplus,
    sigma_coefficient,
    volume,
    zariski_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "PiecewiseLinear",
    "Profiles",
    "okounkov_polygon",
    "profiles",
    "valuation_vector",
    "PositivityVerdict",
    "classify",
    "is_ample",
    "is_big",
    "is_nef",
    "is_pseudoeffective",
    "mu_threshold",
    "CatalogInsufficient",
    "Curve",
    "Flag",
    "ModelError",
    "NotBig",
    "NotPseudoeffective",
    "SurfaceModel",
    "bundled_model",
    "flag_incidence",
    "intersect",
    "load_model",
    "load_model_file",
    "Polygon",
    "polygon_area",
    "polygon_contains",
    "polygon_includes",
    "polygon_min_sum",
    "polygon_slice_right",
    "polygon_translate",
    "ZariskiDecomposition",
    "asymptotic_multiplicity",
    "bminus_divisorial_support",
    "bplus_support",
    "point_in_bminus",
    "point_in_bplus",
    "sigma_coefficient",
    "volume",
    "zariski_decompose",
]
