"""Surface models: Picard lattice, intersection form, curve catalog, flags.

A model is loaded from a JSON document and validated once; afterwards it is
treated as immutable.  Divisor classes are plain tuples of ``Fraction``
coefficients over the lattice basis.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

Rat = Fraction
DivisorClass = tuple  # tuple[Fraction, ...]


class ModelError(ValueError):
    """Raised when a model document is malformed or violates an invariant."""


class CatalogInsufficient(RuntimeError):
    """The curve catalog cannot certify a result (a negative curve is missing)."""


class NotPseudoeffective(ValueError):
    pass


class NotBig(ValueError):
    pass


def parse_rat(value) -> Fraction:
    """Parse an int or a ``"p/q"`` string into a Fraction (floats rejected)."""
    if isinstance(value, bool):
        raise ModelError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ModelError(f"not a rational: {value!r}") from exc
    raise ModelError(f"not a rational: {value!r}")


def format_rat(value: Fraction) -> str:
    """Canonical string form: ``"3"`` or ``"-1/3"``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def divisor(*coeffs) -> DivisorClass:
    if len(coeffs) == 1 and isinstance(coeffs[0], (list, tuple)):
        coeffs = tuple(coeffs[0])
    return tuple(parse_rat(c) for c in coeffs)


def parse_divisor(text: str) -> DivisorClass:
    """Parse a comma-separated coefficient list such as ``"1,-1/2"``."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ModelError("empty divisor")
    return tuple(parse_rat(p) for p in parts)


def add(a: Sequence, b: Sequence) -> DivisorClass:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> DivisorClass:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> DivisorClass:
    c = Fraction(c)
    return tuple(c * x for x in a)


def combine(terms: Iterable[tuple], rank: int) -> DivisorClass:
    """Sum of ``coeff * cls`` over ``(coeff, cls)`` pairs."""
    out = [Fraction(0)] * rank
    for coeff, cls in terms:
        for i, x in enumerate(cls):
            out[i] += coeff * x
    return tuple(out)


@dataclass(frozen=True)
class Curve:
    id: str
    cls: DivisorClass
    is_negative: bool


@dataclass(frozen=True, eq=False)
class Flag:
    """An admissible flag (C, x): host curve C plus local data of x.

    ``local_mults[G]`` is the local intersection number (G.C)_x; curves not
    listed do not pass through x.
    """

    id: str
    curve: str
    local_mults: Mapping[str, int] = field(default_factory=dict)
    very_general: bool = False

    def mult(self, curve_id: str) -> int:
        return self.local_mults.get(curve_id, 0)


@dataclass(frozen=True, eq=False)
class SurfaceModel:
    rank: int
    gram: tuple
    curves: tuple
    nef_gens: tuple
    eff_gens: tuple
    flags: tuple
    name: str = ""

    # lookups -------------------------------------------------------------

    def curve(self, curve_id: str) -> Curve:
        for c in self.curves:
            if c.id == curve_id:
                return c
        raise ModelError(f"unknown curve id {curve_id!r}")

    def flag(self, flag_id: str) -> Flag:
        for f in self.flags:
            if f.id == flag_id:
                return f
        raise ModelError(f"unknown flag id {flag_id!r}")

    @property
    def negative_curves(self) -> tuple:
        return tuple(c for c in self.curves if c.is_negative)

    def intersect(self, a: Sequence, b: Sequence) -> Fraction:
        return intersect(self, a, b)

    def check_class(self, d: Sequence) -> DivisorClass:
        if len(d) != self.rank:
            raise ModelError(f"divisor has length {len(d)}, model rank is {self.rank}")
        return tuple(Fraction(x) for x in d)


def intersect(model: SurfaceModel, a: Sequence, b: Sequence) -> Fraction:
    """Intersection number a^T G b."""
    n = model.rank
    if len(a) != n or len(b) != n:
        raise ModelError(f"dimension mismatch: {len(a)}, {len(b)} vs rank {n}")
    g = model.gram
    total = Fraction(0)
    for i in range(n):
        if a[i]:
            row = g[i]
            total += a[i] * sum((row[j] * b[j] for j in range(n) if b[j]), Fraction(0))
    return total


def flag_incidence(model: SurfaceModel, flag: Flag, curve_id: str) -> bool:
    """Whether the flag point x lies on the catalog curve."""
    model.curve(curve_id)
    return curve_id == flag.curve or flag.mult(curve_id) > 0


# -- linear algebra over Q --------------------------------------------------


def leading_minors(matrix: Sequence[Sequence]) -> list:
    """Leading principal minors via fraction-exact Gaussian elimination."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    minors = []
    det = Fraction(1)
    for k in range(n):
        pivot = m[k][k]
        if pivot == 0:
            # a zero leading minor; remaining minors computed directly
            minors.append(Fraction(0))
            for j in range(k + 1, n):
                minors.append(determinant([row[: j + 1] for row in matrix[: j + 1]]))
            return minors
        det *= pivot
        minors.append(det)
        for i in range(k + 1, n):
            f = m[i][k] / pivot
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return minors


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> list:
    """Solve ``matrix @ X = rhs`` exactly; ``rhs`` is a list of columns.

    Returns the list of solution columns.  Raises ``ZeroDivisionError`` for a
    singular matrix.
    """
    n = len(matrix)
    k = len(rhs)
    aug = [[Fraction(x) for x in matrix[i]] + [Fraction(col[i]) for col in rhs] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        row_c = aug[c]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c] / pv
                row_i = aug[i]
                for j in range(c, n + k):
                    row_i[j] -= f * row_c[j]
    return [[aug[i][n + j] / aug[i][i] for i in range(n)] for j in range(k)]


def is_negative_definite(matrix: Sequence[Sequence]) -> bool:
    """Sylvester: leading minors alternate in sign starting negative."""
    for k, minor in enumerate(leading_minors(matrix), start=1):
        if minor == 0 or (minor > 0) != (k % 2 == 0):
            return False
    return True


def signature(matrix: Sequence[Sequence]) -> tuple:
    """(positive, negative, zero) inertia of a symmetric rational matrix.

    Symmetric Gaussian elimination (congruence), with a pivot-creation step
    when the diagonal vanishes.
    """
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    pos = neg = 0
    size = n
    while size:
        p = next((i for i in range(size) if m[i][i] != 0), None)
        if p is None:
            q = next(((i, j) for i in range(size) for j in range(i + 1, size) if m[i][j] != 0), None)
            if q is None:
                break
            i, j = q
            # x_i <- x_i + x_j produces a nonzero diagonal 2*m[i][j]
            for r in range(size):
                m[r][i] += m[r][j]
            for r in range(size):
                m[i][r] += m[j][r]
            p = i
        # move pivot to the end and eliminate
        last = size - 1
        m[p], m[last] = m[last], m[p]
        for row in m:
            row[p], row[last] = row[last], row[p]
        pv = m[last][last]
        if pv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(last):
            f = m[i][last] / pv
            if f:
                for j in range(last):
                    m[i][j] -= f * m[last][j]
        m = [row[:last] for row in m[:last]]
        size = last
    return pos, neg, n - pos - neg


# -- loading ----------------------------------------------------------------


def _parse_class(raw, rank: int, what: str, integral: bool = False) -> DivisorClass:
    if not isinstance(raw, list):
        raise ModelError(f"{what}: class must be a list")
    if len(raw) != rank:
        raise ModelError(f"{what}: class length {len(raw)} != rank {rank}")
    cls = tuple(parse_rat(x) for x in raw)
    if integral and any(x.denominator != 1 for x in cls):
        raise ModelError(f"{what}: class must be integral")
    return cls


def hirzebruch_document(e: int) -> dict:
    """Model document for the Hirzebruch surface F_e in the basis (E, F).

    E is the negative section (E^2 = -e), F a fibre, S = E + eF a section
    disjoint from E.
    """
    if not 0 <= e <= 4:
        raise ModelError(f"Hirzebruch parameter e={e} outside 0..4")
    curves = [
        {"id": "E", "class": [1, 0]},
        {"id": "F", "class": [0, 1]},
        {"id": "S", "class": [1, e]},
    ]
    flags = [
        {"id": "on-E", "curve": "E", "local_mults": {}, "very_general": True},
        {"id": "E-meets-F", "curve": "E", "local_mults": {"F": 1}, "very_general": False},
        {"id": "on-F", "curve": "F", "local_mults": {}, "very_general": True},
        {"id": "F-meets-E", "curve": "F", "local_mults": {"E": 1}, "very_general": False},
        {"id": "on-S", "curve": "S", "local_mults": {}, "very_general": True},
        {"id": "S-meets-F", "curve": "S", "local_mults": {"F": 1}, "very_general": False},
    ]
    return {
        "name": f"F{e}",
        "rank": 2,
        "gram": [[-e, 1], [1, 0]],
        "curves": curves,
        "nef_gens": [[0, 1], [1, e]],
        "eff_gens": [[1, 0], [0, 1]],
        "flags": flags,
    }


def load_model(document, e: int | None = None) -> SurfaceModel:
    """Build and validate a model from a JSON string or an already-parsed dict.

    A document of the form ``{"family": "hirzebruch", "e": k}`` expands to the
    Hirzebruch surface F_k; ``e`` overrides the parameter.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ModelError(f"parse error: {exc}") from exc
    if not isinstance(document, dict):
        raise ModelError("parse error: model document must be a JSON object")
    if document.get("family") == "hirzebruch":
        k = e if e is not None else document.get("e", 1)
        if not isinstance(k, int):
            raise ModelError("hirzebruch family needs an integer e")
        document = hirzebruch_document(k)

    for key in ("rank", "gram", "curves", "nef_gens", "eff_gens"):
        if key not in document:
            raise ModelError(f"parse error: missing field {key!r}")
    rank = document["rank"]
    if not isinstance(rank, int) or rank < 1:
        raise ModelError("rank must be a positive integer")
    gram_raw = document["gram"]
    if (
        not isinstance(gram_raw, list)
        or len(gram_raw) != rank
        or any(not isinstance(r, list) or len(r) != rank for r in gram_raw)
    ):
        raise ModelError("gram must be a rank x rank matrix")
    if any(isinstance(x, bool) or not isinstance(x, int) for r in gram_raw for x in r):
        raise ModelError("gram entries must be integers")
    gram = tuple(tuple(Fraction(x) for x in row) for row in gram_raw)

    curves = []
    for raw in document["curves"]:
        if not isinstance(raw, dict) or "id" not in raw or "class" not in raw:
            raise ModelError("parse error: curve entries need 'id' and 'class'")
        cls = _parse_class(raw["class"], rank, f"curve {raw['id']}", integral=True)
        curves.append((str(raw["id"]), cls))

    flags = []
    for raw in document.get("flags", []):
        if not isinstance(raw, dict) or "id" not in raw or "curve" not in raw:
            raise ModelError("parse error: flag entries need 'id' and 'curve'")
        lm = raw.get("local_mults", {}) or {}
        if not isinstance(lm, dict):
            raise ModelError(f"flag {raw['id']}: local_mults must be an object")
        mults = {}
        for k, v in lm.items():
            if isinstance(v, bool) or not isinstance(v, int):
                raise ModelError(f"flag {raw['id']}: local multiplicity of {k} must be an integer")
            if v:
                mults[str(k)] = v
        flags.append(Flag(str(raw["id"]), str(raw["curve"]), mults, bool(raw.get("very_general", False))))

    provisional = SurfaceModel(rank, gram, (), (), (), ())
    curve_objs = tuple(
        Curve(cid, cls, intersect(provisional, cls, cls) < 0) for cid, cls in curves
    )
    model = SurfaceModel(
        rank=rank,
        gram=gram,
        curves=curve_objs,
        nef_gens=tuple(_parse_class(g, rank, "nef_gens") for g in document["nef_gens"]),
        eff_gens=tuple(_parse_class(g, rank, "eff_gens") for g in document["eff_gens"]),
        flags=tuple(flags),
        name=str(document.get("name", "")),
    )
    validate(model)
    return model


def load_model_file(path, e: int | None = None) -> SurfaceModel:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ModelError(f"cannot read model file {path}: {exc}") from exc
    model = load_model(text, e=e)
    if not model.name:
        object.__setattr__(model, "name", path.stem)
    return model


def validate(model: SurfaceModel) -> None:
    """Check every model invariant; raises ModelError naming the first violation."""
    n = model.rank
    g = model.gram
    for i in range(n):
        for j in range(n):
            if g[i][j] != g[j][i]:
                raise ModelError("gram not symmetric")
    if signature(g) != (1, n - 1, 0):
        raise ModelError(f"gram not signature (1,{n - 1})")

    ids = [c.id for c in model.curves]
    if len(set(ids)) != len(ids):
        raise ModelError("duplicate curve id")
    for c in model.curves:
        if (intersect(model, c.cls, c.cls) < 0) != c.is_negative:
            raise ModelError(f"curve {c.id}: is_negative inconsistent with self-intersection")

    if not model.nef_gens or not model.eff_gens:
        raise ModelError("nef_gens and eff_gens must be non-empty")
    for a in model.nef_gens:
        if intersect(model, a, a) < 0:
            raise ModelError(f"nef generator {list(map(str, a))} has negative square")
        for b in model.eff_gens:
            if intersect(model, a, b) < 0:
                raise ModelError(
                    f"cross-duality violated: nef gen {list(map(str, a))} . eff gen {list(map(str, b))} < 0"
                )

    # every negative extremal generator of Eff must be a catalog curve
    neg_classes = {c.cls for c in model.curves if c.is_negative}
    for b in model.eff_gens:
        if intersect(model, b, b) < 0 and not any(_proportional(b, cls) for cls in neg_classes):
            raise ModelError(f"negative eff generator {list(map(str, b))} missing from curve catalog")

    flag_ids = [f.id for f in model.flags]
    if len(set(flag_ids)) != len(flag_ids):
        raise ModelError("duplicate flag id")
    for f in model.flags:
        host = model.curve(f.curve)
        for cid, m in f.local_mults.items():
            if cid == f.curve:
                raise ModelError(f"flag {f.id}: local_mults must not mention the host curve")
            other = model.curve(cid)
            if m < 0:
                raise ModelError(f"flag {f.id}: negative local multiplicity for {cid}")
            if m > intersect(model, other.cls, host.cls):
                raise ModelError(f"flag {f.id}: local_mults exceeds Γ·C for {cid}")
        if f.very_general and any(f.local_mults.values()):
            raise ModelError(f"flag {f.id}: very_general flag with nonzero local_mults")


def _proportional(a: Sequence, b: Sequence) -> bool:
    ratio = None
    for x, y in zip(a, b):
        if (x == 0) != (y == 0):
            return False
        if x:
            r = Fraction(x) / Fraction(y)
            if r <= 0 or (ratio is not None and r != ratio):
                return False
            ratio = r
    return ratio is not None


def model_to_document(model: SurfaceModel) -> dict:
    def enc(cls):
        return [int(x) if x.denominator == 1 else format_rat(x) for x in cls]

    return {
        "name": model.name,
        "rank": model.rank,
        "gram": [[int(x) for x in row] for row in model.gram],
        "curves": [{"id": c.id, "class": enc(c.cls)} for c in model.curves],
        "nef_gens": [enc(g) for g in model.nef_gens],
        "eff_gens": [enc(g) for g in model.eff_gens],
        "flags": [
            {"id": f.id, "curve": f.curve, "local_mults": dict(f.local_mults), "very_general": f.very_general}
            for f in model.flags
        ],
    }


MODEL_DIR = Path(__file__).parent / "models"


def bundled_model(name: str, e: int | None = None) -> SurfaceModel:
    """Load one of the bundled model files (``p2``, ``f1``, ``fe``, ``dp7``)."""
    stem = name[:-5] if name.endswith(".json") else name
    return load_model_file(MODEL_DIR / f"{stem}.json", e=e)
