"""Command-line front end: ``classify``, ``polygon`` and ``verify``.

Exit codes: 0 success, 1 a criterion disagreed, 2 parse/validation error,
3 catalog insufficient.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path
from xml.sax.saxutils import escape

from . import criteria
from .body import okounkov_polygon, profiles
from .cones import classify
from .lattice import (
    MODEL_DIR,
    CatalogInsufficient,
    ModelError,
    NotBig,
    NotPseudoeffective,
    format_rat,
    load_model_file,
    parse_divisor,
    parse_rat,
)
from .polygon import Polygon
from .suites import SUITES, run_suite, summarise
from .zariski import decomposition_as_dict, volume, zariski_decompose

EXIT_OK, EXIT_DISAGREE, EXIT_INVALID, EXIT_CATALOG = 0, 1, 2, 3


def _resolve_model(path: str, e):
    p = Path(path)
    if not p.exists() and (MODEL_DIR / p.name).exists():
        p = MODEL_DIR / p.name
    return load_model_file(p, e=e)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(text: str, path) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _divisor(model, text):
    return model.check_class(parse_divisor(text))


def cmd_classify(args) -> int:
    model = _resolve_model(args.model, args.e)
    d = _divisor(model, args.divisor)
    verdict = classify(model, d)
    out = {"model": model.name, "divisor": [format_rat(x) for x in d], "verdict": verdict.as_dict()}
    if verdict.pseudoeffective:
        out["volume"] = format_rat(volume(model, d))
        out["zariski"] = decomposition_as_dict(model, zariski_decompose(model, d))
    _emit(_dump(out), args.json)
    return EXIT_OK


def polygon_csv(poly: Polygon) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["nu1", "nu2"])
    for x, y in poly.vertices:
        w.writerow([format_rat(x), format_rat(y)])
    return buf.getvalue()


def _r(x) -> str:
    s = f"{float(x):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def polygon_svg(poly: Polygon, lam: Fraction = Fraction(0), size: int = 400, margin: int = 40) -> str:
    """SVG with axes, the polygon and the inscribed lambda-simplex.

    nu1 runs to the right and nu2 upwards.  Exact vertices are kept in a
    <metadata> block; drawing coordinates are rounded to 6 places.
    """
    xs = [x for x, _ in poly.vertices] + [Fraction(0)]
    ys = [y for _, y in poly.vertices] + [Fraction(0)]
    span = max(max(xs) - min(xs), max(ys) - min(ys), Fraction(1))
    k = Fraction(size - 2 * margin) / span
    x0, y0 = min(xs), min(ys)

    def tx(x):
        return margin + (x - x0) * k

    def ty(y):
        return size - margin - (y - y0) * k

    pts = " ".join(f"{_r(tx(x))},{_r(ty(y))}" for x, y in poly.vertices)
    exact = json.dumps(poly.to_json(), sort_keys=True)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"  <metadata>{escape(exact)}</metadata>",
        f'  <line x1="{_r(tx(x0))}" y1="{_r(ty(0))}" x2="{size - margin // 2}" y2="{_r(ty(0))}" stroke="black"/>',
        f'  <line x1="{_r(tx(0))}" y1="{_r(ty(y0))}" x2="{_r(tx(0))}" y2="{margin // 2}" stroke="black"/>',
        f'  <text x="{size - margin // 2}" y="{_r(ty(0) + 15)}" font-size="12">nu1</text>',
        f'  <text x="{_r(tx(0) + 5)}" y="{margin // 2}" font-size="12">nu2</text>',
        f'  <polygon points="{pts}" fill="#9ecae1" fill-opacity="0.6" stroke="#08519c"/>',
    ]
    if lam > 0:
        simplex = f"{_r(tx(0))},{_r(ty(0))} {_r(tx(lam))},{_r(ty(0))} {_r(tx(0))},{_r(ty(lam))}"
        lines.append(f'  <polygon points="{simplex}" fill="#fdae6b" fill-opacity="0.7" stroke="#a63603"/>')
    for x, y in poly.vertices:
        lines.append(
            f'  <circle cx="{_r(tx(x))}" cy="{_r(ty(y))}" r="3"><title>({format_rat(x)}, {format_rat(y)})</title></circle>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_polygon(args) -> int:
    model = _resolve_model(args.model, args.e)
    d = _divisor(model, args.divisor)
    flag = model.flag(args.flag)
    poly = okounkov_polygon(model, d, flag)
    pr = profiles(model, d, flag)
    lam = criteria.simplex_constant_of(poly).value
    out = {
        "model": model.name,
        "divisor": [format_rat(x) for x in d],
        "flag": flag.id,
        "vertices": poly.to_json()["vertices"],
        "a": format_rat(pr.a),
        "mu": format_rat(pr.mu),
        "alpha": pr.alpha.to_json(),
        "beta": pr.beta.to_json(),
        "lambda": format_rat(lam),
    }
    if args.csv:
        Path(args.csv).write_text(polygon_csv(poly))
    if args.svg:
        Path(args.svg).write_text(polygon_svg(poly, lam))
    _emit(_dump(out), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    model = _resolve_model(args.model, args.e)
    suites = SUITES if args.suite == "all" else (args.suite,)
    report = {"model": model.name, "seed": args.seed, "samples": args.samples, "suites": {}}
    first_bad = None
    for name in suites:
        reports = run_suite(
            model,
            name,
            samples=args.samples,
            seed=args.seed,
            t=None if args.t is None else parse_rat(args.t),
            eps=parse_rat(args.eps),
            m=args.m,
            p_max=args.p_max,
        )
        entry = summarise(reports)
        entry["reports"] = [r.to_json() for r in reports] if args.full else []
        bad = next((r for r in reports if not r.agree), None)
        if bad is not None and first_bad is None:
            first_bad = bad.to_json()
        report["suites"][name] = entry
    report["ok"] = first_bad is None
    if first_bad is not None:
        report["first_disagreement"] = first_bad
    _emit(_dump(report), args.json)
    return EXIT_OK if first_bad is None else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="okounkov", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--model", required=True, help="model JSON file (bundled names also accepted)")
        p.add_argument("--e", type=int, default=None, help="Hirzebruch parameter for fe.json")
        p.add_argument("--json", default=None, help="write the JSON report here instead of stdout")

    p = sub.add_parser("classify", help="positivity verdict, volume and Zariski decomposition")
    common(p)
    p.add_argument("--divisor", required=True, help="comma-separated rational coefficients")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("polygon", help="Newton-Okounkov polygon for a flag")
    common(p)
    p.add_argument("--divisor", required=True)
    p.add_argument("--flag", required=True)
    p.add_argument("--svg", default=None)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("verify", help="run verification suites")
    common(p)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--samples", type=int, default=12, help="random big classes per suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full", action="store_true", help="include every per-check report")
    p.add_argument("--t", default=None, help="fixed slice parameter for the slice suite")
    p.add_argument("--eps", default="1/2", help="simplex size for the augmented suite")
    p.add_argument("--m", type=int, default=6, help="finest level for the toric oracle")
    p.add_argument("--p-max", dest="p_max", type=int, default=8, help="largest multiple in the augmented suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CatalogInsufficient as exc:
        print(f"error: catalog insufficient: {exc}", file=sys.stderr)
        return EXIT_CATALOG
    except (ModelError, NotBig, NotPseudoeffective, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
