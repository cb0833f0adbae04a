"""Command-line interface: one subcommand per library capability, JSON on stdout."""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import conjugacy, curves, exact, parametrization, periodicity
from .errors import ComputationError, ValidationError
from .geometry import (
    Geometry,
    Kind,
    Method,
    Quadrilateral,
    SideLengths,
    embed,
    fold_orbit,
    measure,
    validate_and_classify,
)

EXIT_OK, EXIT_VALIDATION, EXIT_COMPUTATION = 0, 2, 3


# ---------------------------------------------------------------------------
# output


def _number(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = format(x, ".17g")
    if "e" not in text and "." not in text and "n" not in text:
        text += ".0"
    return text


def to_json(obj) -> str:
    """Compact deterministic JSON with every float written to 17 significant digits."""
    if obj is None:
        return "null"
    if isinstance(obj, (bool, int, float)):
        return _number(obj)
    if isinstance(obj, Fraction):
        return str(obj.numerator) if obj.denominator == 1 else _number(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in obj) + "]"
    if hasattr(obj, "tolist"):
        return to_json(obj.tolist())
    if exact.is_symbolic(obj):
        return _number(float(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _exact_field(x):
    """Value plus its exact text when the value is not a plain float."""
    if exact.is_exact(x):
        return {"value": float(x), "exact": exact.describe(x)}
    return {"value": float(x)}


# ---------------------------------------------------------------------------
# input


def parse_sides(text: str, geometry: str = "euclidean") -> SideLengths:
    try:
        vals = [exact.parse_number(t) for t in text.split(",")]
    except ValueError as err:
        raise ValidationError(str(err)) from None
    return SideLengths(tuple(vals), Geometry.parse(geometry))


def _pair_arg(text: str) -> tuple[int, int]:
    table = {"cd": (3, 4), "34": (3, 4), "bc": (2, 3), "23": (2, 3)}
    try:
        return table[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"pair must be cd (34) or bc (23), got {text!r}") from None


def _float_pair(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
    return float(parts[0]), float(parts[1])


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args) -> dict:
    a = parse_sides(args.sides, args.geometry)
    cls = validate_and_classify(a)
    return {
        "sides": [exact.describe(v) for v in a.values],
        "geometry": a.geometry.value,
        "kind": cls.kind.value,
        "grashof": cls.grashof,
        "lattice": cls.lattice.value,
        "zero_count": cls.zero_count,
        "variant": None if cls.variant is None else cls.variant.value,
        "equal_pairs": None if cls.equal_pairs is None else [list(p) for p in cls.equal_pairs],
        "zeros": [list(z) for z in cls.zeros],
    }


def cmd_curves(args) -> dict:
    a = parse_sides(args.sides, args.geometry)
    out = {"sides": [exact.describe(v) for v in a.values], "geometry": a.geometry.value, "angle_curves": {}}
    for pair, c in curves.angle_curves(a).items():
        out["angle_curves"][f"{pair[0]}{pair[1]}"] = {
            name: _exact_field(getattr(c, name)) for name in ("c22", "c20", "c02", "c11", "c00")
        }
    d = curves.diagonal_curve(a)
    out["diagonal_curve"] = {name: _exact_field(v) for name, v in zip(("d11", "d10", "d01", "d00"), d.coefficients)}
    cls = validate_and_classify(a)
    if a.geometry is Geometry.EUCLIDEAN and cls.kind is Kind.ELLIPTIC:
        nf = curves.normal_form(a)
        out["normal_form"] = {"m": _exact_field(nf.m), "modulus": nf.modulus}
    elif cls.kind not in (Kind.ELLIPTIC, Kind.CONIC) and a.geometry is Geometry.EUCLIDEAN:
        out["components"] = [
            {"label": comp.label, "infinite": comp.infinite, "curve": None if comp.curve is None else comp.curve.to_dict()}
            for comp in curves.degenerate_components(a)
        ]
    return out


def cmd_param(args) -> dict:
    a = parse_sides(args.sides)
    P = parametrization.build(a)
    out = P.to_dict()
    if isinstance(P, parametrization.EllipticParametrization):
        out["period"] = parametrization.period_from_sigma(P.sigma, P.quarter, P.case).to_dict()
    return out


def _start_quad(args) -> Quadrilateral:
    if args.quad:
        with open(args.quad, encoding="utf-8") as fh:
            data = json.load(fh)
        return Quadrilateral.from_dict(data.get("start", data))
    if args.sides is None or args.phi1 is None:
        raise ValidationError("fold needs --sides and --phi1, or --quad")
    a = parse_sides(args.sides, args.geometry)
    return embed(a, args.phi1, args.branch)


def cmd_fold(args) -> dict:
    q = _start_quad(args)
    orbit = fold_orbit(q, args.pair, args.steps)
    steps = []
    for i, p in enumerate(orbit):
        angles, diag = measure(p)
        steps.append({"step": i, "z": list(angles.z), "phi": list(angles.phi), "diagonals": [diag.x, diag.y]})
    if args.svg:
        from .svg import write_orbit

        write_orbit(args.svg, orbit)
    return {"start": q.to_dict(), "pair": list(args.pair), "steps": steps, "svg": args.svg}


def cmd_period(args) -> dict:
    a = parse_sides(args.sides)
    report = periodicity.period_report(a, max_n=args.max_n, method=args.method, tol=args.tol)
    return {"sides": [exact.describe(v) for v in a.values], **report.to_dict()}


def cmd_conjugate(args) -> dict:
    a = parse_sides(args.sides)
    q = embed(a, args.phi1, args.branch)
    c = conjugacy.conjugate_quad(q)
    d0, d1 = measure(q)[1], measure(c)[1]
    return {
        "sides": [exact.describe(v) for v in a.values],
        "conjugate_sides": [exact.describe(v) for v in c.sides.values],
        "diagonals": [d0.x, d0.y],
        "conjugate_diagonals": [d1.x, d1.y],
        "mismatch": max(abs(d0.x - d1.x), abs(d0.y - d1.y)),
        "quadrilateral": q.to_dict(),
        "conjugate": c.to_dict(),
    }


def cmd_ivory(args) -> dict:
    spec = conjugacy.ConfocalSpec(args.geometry, args.c, args.lam, args.mu)
    d1, d2, diff = conjugacy.ivory_check(spec)
    return {"geometry": spec.geometry.value, "c": spec.c, "lambda": list(spec.lam), "mu": list(spec.mu), "d1": d1, "d2": d2, "difference": diff}


def cmd_identities(args) -> dict:
    try:
        vals = [float(exact.parse_number(t)) for t in args.sides.split(",")]
    except ValueError as err:
        raise ValidationError(str(err)) from None
    if len(vals) != 4:
        raise ValidationError("expected four values")
    g = Geometry.parse(args.geometry)
    pairs = conjugacy.identity_pairs(vals, g)
    return {
        "values": vals,
        "geometry": g.value,
        "identities": [{"left": l, "right": r} for l, r in pairs],
        "worst_residual": conjugacy.identity_suite(vals, g),
    }


def cmd_pq(args) -> dict:
    a = parse_sides(args.sides)
    data = periodicity.p_q_data(a)
    return {
        "u_p": _exact_field(data.u_p),
        "v_p": _exact_field(data.v_p),
        "u_q": _exact_field(data.u_q),
        "real_feasible": data.real_feasible,
        "crosscheck_error": periodicity.branch_value_crosscheck(a),
    }


def cmd_search(args, out) -> None:
    hits = periodicity.find_periodic(args.grid, args.n, args.method, args.jobs)
    for point, report in hits:
        out.write(to_json({"sides": [exact.describe(v) for v in point], **report.to_dict()}) + "\n")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadfold", description="Quadrilateral configuration spaces and folding.")
    sub = ap.add_subparsers(dest="command", required=True)

    def sides_cmd(name, help_text, geometry=True, required=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--sides", required=required, help="four comma-separated lengths, e.g. 1,3,3*sqrt(5),5")
        if geometry:
            p.add_argument("--geometry", default="euclidean", choices=[g.value for g in Geometry])
        return p

    sides_cmd("classify", "side type, Grashof flag and lattice")
    sides_cmd("curves", "angle curves and the diagonal curve")
    sides_cmd("param", "elliptic or conic parametrization", geometry=False)
    p = sides_cmd("fold", "orbit of a composed fold pair", required=False)
    p.add_argument("--phi1", type=float)
    p.add_argument("--branch", default="+", choices=["+", "-"])
    p.add_argument("--pair", type=_pair_arg, default=(3, 4), help="cd (F3 F4) or bc (F2 F3)")
    p.add_argument("--steps", type=int, default=6)
    p.add_argument("--svg", help="write the orbit as SVG to this path")
    p.add_argument("--quad", help="start from a quadrilateral JSON record")
    p = sides_cmd("period", "folding period", geometry=False)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--method", default="hankel", choices=[m.value for m in Method])
    p.add_argument("--tol", type=float, default=1e-9)
    p = sides_cmd("conjugate", "conjugate quadrilateral", geometry=False)
    p.add_argument("--phi1", type=float, required=True)
    p.add_argument("--branch", default="+", choices=["+", "-"])
    p = sub.add_parser("ivory", help="diagonals of a confocal quadrilateral")
    p.add_argument("--geometry", default="euclidean", choices=[g.value for g in Geometry])
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=_float_pair, required=True)
    p.add_argument("--mu", type=_float_pair, required=True)
    sides_cmd("identities", "side-length identities")
    sides_cmd("pq", "diagonal data of the aligned configuration", geometry=False)
    p = sub.add_parser("search", help="grid search for periodic side lengths (JSON lines)")
    p.add_argument("--grid", required=True, help="lo:hi:step for each side, comma-separated")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", default="hankel", choices=[m.value for m in Method])
    p.add_argument("--jobs", type=int, default=1)
    return ap


COMMANDS = {
    "classify": cmd_classify,
    "curves": cmd_curves,
    "param": cmd_param,
    "fold": cmd_fold,
    "period": cmd_period,
    "conjugate": cmd_conjugate,
    "ivory": cmd_ivory,
    "identities": cmd_identities,
    "pq": cmd_pq,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "search":
            cmd_search(args, out)
        else:
            out.write(to_json(COMMANDS[args.command](args)) + "\n")
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except ComputationError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_COMPUTATION
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
