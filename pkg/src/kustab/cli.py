"""Command line surface.

Subcommands map one-to-one onto the library operations; every verdict is
encoded in the report (a failing check still exits 0), usage problems exit
2 and domain errors exit 3.  Reports print as stable text lines or, with
--json, as a JSON document with sorted keys; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import semiorth, tilt, walls
from .config import registry
from .exact import DomainError, rat
from .report import to_jsonable, to_text_value
from .svg import render_walls_svg
from .variety import (SPINOR_CLASS, SPINOR_VARIETIES, ChernVector,
                      VarietyDesc, euler_pairing, gram_matrix,
                      line_bundle_class, serre_numeric)


class ParseError(ValueError):
    """A malformed token or flag value; reported as a usage error."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept negative rationals ("-1/2") and class tokens ("-1,0,0")
        self._negative_number_matcher = re.compile(r"^-\d[\d/,.\-]*$")

    def error(self, message):
        raise ParseError(message)


def parse_class(token: str, x: VarietyDesc, truncated: bool = False) -> ChernVector:
    """Resolve a class token: "O", "O(k)", "S", or comma-separated rationals.

    Full classes need dim + 1 entries; with truncated=True a bare
    (c0, c1, c2) triple is also accepted.
    """
    tok = token.strip()
    if tok == "O":
        return line_bundle_class(x, 0)
    if tok.startswith("O(") and tok.endswith(")"):
        inner = tok[2:-1]
        try:
            k = int(inner)
        except ValueError:
            raise ParseError(f"malformed twist in {token!r}") from None
        return line_bundle_class(x, k)
    if tok == "S":
        if x.name.lower() not in SPINOR_VARIETIES:
            raise ParseError(f"unknown symbol 'S' on variety {x.name}")
        return SPINOR_CLASS
    if "," in tok:
        parts = tok.split(",")
        try:
            coeffs = [rat(p) for p in parts]
        except DomainError:
            raise ParseError(f"malformed class token {token!r}") from None
        if len(coeffs) == x.dim + 1:
            return ChernVector(coeffs)
        if truncated and len(coeffs) == 3:
            return ChernVector(coeffs)
        want = f"{x.dim + 1}" + (" or 3" if truncated else "")
        raise ParseError(
            f"wrong arity: {token!r} has {len(coeffs)} entries, needs {want}")
    raise ParseError(f"malformed class token {token!r}")


def default_collection(x: VarietyDesc) -> list[ChernVector]:
    """The standard block O, O(1), ..., O(index - 1)."""
    return [line_bundle_class(x, k) for k in range(x.index)]


def _collection(args, x) -> semiorth.Collection:
    tokens = getattr(args, "members", None)
    if tokens:
        members = [parse_class(t, x) for t in tokens]
    else:
        members = default_collection(x)
    return semiorth.Collection(variety=x, members=tuple(members))


def _tilt_params(args) -> tilt.TiltParams:
    return tilt.TiltParams(alpha=args.alpha, beta=args.beta,
                           mu=getattr(args, "mu", Fraction(0)))


def build_parser() -> _Parser:
    p = _Parser(prog="kustab", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variety", help="preset or config variety name")
    common.add_argument("--config", help="path to a JSON variety config")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--out", help="write output to a file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True,
                           parser_class=_Parser)

    def add_parser(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    sp = add_parser("chi", help="Euler pairing of two classes")
    sp.add_argument("lhs")
    sp.add_argument("rhs")

    sp = add_parser("gram", help="Euler pairing matrix on 1, H, ..., H^n")
    sp.add_argument("--convention", choices=("chi", "paper"), default="chi")

    sp = add_parser("orth", help="basis of the right orthogonal lattice")
    sp.add_argument("members", nargs="*")

    sp = add_parser("project", help="project a class onto the residual lattice")
    sp.add_argument("target")
    sp.add_argument("members", nargs="*")

    sp = add_parser("classify", help="labels of a residual class")
    sp.add_argument("target")
    sp.add_argument("members", nargs="*")

    add_parser("serre", help="numerical Serre action matrix")

    sp = add_parser("zh", help="weak charge Z_H and slope")
    sp.add_argument("target")

    sp = add_parser("ztilt", help="tilt charge and slope")
    sp.add_argument("target")
    sp.add_argument("--alpha", type=Fraction, required=True)
    sp.add_argument("--beta", type=Fraction, required=True)
    sp.add_argument("--mu", type=Fraction, default=Fraction(0))
    sp.add_argument("--shift", type=int, default=0)

    sp = add_parser("heart", help="double-tilt heart membership case")
    sp.add_argument("target")
    sp.add_argument("--alpha", type=Fraction, required=True)
    sp.add_argument("--beta", type=Fraction, required=True)
    sp.add_argument("--mu", type=Fraction, default=Fraction(0))
    sp.add_argument("--shift", type=int, default=0)

    sp = add_parser("blms", help="induced stability checklist")
    sp.add_argument("members", nargs="*")
    sp.add_argument("--alpha", type=Fraction, required=True)
    sp.add_argument("--beta", type=Fraction, required=True)
    sp.add_argument("--mu", type=Fraction, default=Fraction(0))

    sp = add_parser("alpha-range", help="exact alpha interval of the checklist")
    sp.add_argument("members", nargs="*")
    sp.add_argument("--beta", type=Fraction, required=True)

    sp = add_parser("beta0", help="discriminant line of a truncated class")
    sp.add_argument("target")

    sp = add_parser("nowall", help="no-wall certificate for a truncated class")
    sp.add_argument("target")

    sp = add_parser("walls", help="bounded scan for candidate walls")
    sp.add_argument("target")
    sp.add_argument("--max-rank", type=Fraction, default=Fraction(3))
    sp.add_argument("--max-c1", type=Fraction, default=Fraction(3))

    sp = add_parser("svg", help="render the wall scan as SVG")
    sp.add_argument("target")
    sp.add_argument("--max-rank", type=Fraction, default=Fraction(3))
    sp.add_argument("--max-c1", type=Fraction, default=Fraction(3))
    sp.add_argument("--beta-min", type=Fraction, default=Fraction(-4))
    sp.add_argument("--beta-max", type=Fraction, default=Fraction(2))
    sp.add_argument("--alpha-max", type=Fraction, default=Fraction(3))

    sp = add_parser("fullness", help="fullness checklist verdict")
    sp.add_argument("members", nargs="*")
    sp.add_argument("--gen", action="append", default=[],
                    help="residual generator token (repeatable)")
    sp.add_argument("--stability-assumed",
                    action=argparse.BooleanOptionalAction, default=False)

    return p


def _slope_str(s: tilt.ExtSlope) -> str:
    return str(s)


def _handle(args, x: VarietyDesc):
    """Dispatch to the library; returns (payload, notes)."""
    cmd = args.command
    if cmd == "chi":
        v = parse_class(args.lhs, x)
        w = parse_class(args.rhs, x)
        return {"lhs": v, "rhs": w, "chi": euler_pairing(x, v, w)}, []
    if cmd == "gram":
        g = gram_matrix(x, args.convention)
        return {"convention": args.convention,
                "matrix": [list(g.row(i)) for i in range(g.rows)]}, \
            ["entry (i, j) is chi(H^i, H^j)"
             + ("" if args.convention == "chi" else " divided by the degree")]
    if cmd == "orth":
        c = _collection(args, x)
        basis = semiorth.right_orthogonal(x, c)
        return {"collection": list(c.members), "rank": len(basis),
                "basis": basis}, \
            ["basis rows are primitive and in Hermite normal form"]
    if cmd == "project":
        c = _collection(args, x)
        v = parse_class(args.target, x)
        proj = semiorth.sod_project(x, c, v)
        return {"target": v, "collection": list(c.members),
                "projection": proj}, \
            ["projection is chi-orthogonal to every collection member"]
    if cmd == "classify":
        c = _collection(args, x)
        v = parse_class(args.target, x)
        rep = semiorth.classify_class(x, c, v)
        eig = {1: "+1", -1: "-1", None: "none"}[rep.serre_eigenvalue]
        return {"target": v, "chi_self": rep.chi_self,
                "serre_eigenvalue": eig, "labels": rep.labels}, []
    if cmd == "serre":
        s = serre_numeric(x)
        return {"matrix": [list(s.row(i)) for i in range(s.rows)]}, \
            ["equals the matrix of v -> (-1)^n * v * e^(-index H)"]
    if cmd == "zh":
        v = parse_class(args.target, x)
        z = tilt.charge_h(x, v)
        return {"target": v, "re": z.re, "im": z.im,
                "slope": _slope_str(tilt.slope_h(x, v))}, []
    if cmd == "ztilt":
        v = parse_class(args.target, x)
        p = _tilt_params(args)
        z = tilt.charge_tilt(x, v, args.shift, p)
        return {"target": v, "alpha": p.alpha, "beta": p.beta,
                "shift": args.shift, "re": z.re, "im": z.im,
                "slope": _slope_str(tilt.slope_tilt(x, v, p))}, []
    if cmd == "heart":
        v = parse_class(args.target, x)
        p = _tilt_params(args)
        verdict = tilt.heart_case(x, v, args.shift, p)
        checks = [{"name": c.name, "value": _slope_str(c.value),
                   "threshold": c.threshold, "satisfied": c.satisfied}
                  for c in verdict.slope_checks]
        return {"target": v, "shift": args.shift,
                "case": verdict.case_id if verdict.in_heart else "not-in-heart",
                "checks": checks}, []
    if cmd == "blms":
        c = _collection(args, x)
        p = _tilt_params(args)
        rep = tilt.blms_check(x, c.members, p)
        items = [{"condition": i.condition, "label": i.label,
                  "passed": i.passed, "detail": i.detail} for i in rep.items]
        return {"collection": list(c.members), "alpha": p.alpha,
                "beta": p.beta, "verdict": "PASS" if rep.passed else "FAIL",
                "items": items}, []
    if cmd == "alpha-range":
        c = _collection(args, x)
        intervals = tilt.alpha_range(x, c.members, args.beta)
        return {"collection": list(c.members), "beta": rat(args.beta),
                "intervals": [{"text": i.text(), "lo": i.lo, "hi": i.hi,
                               "lo_open": i.lo_open, "hi_open": i.hi_open}
                              for i in intervals]}, []
    if cmd == "beta0":
        v = parse_class(args.target, x, truncated=True)
        bz = walls.beta_zero(x, v)
        return {"target": v, "F": bz.F, "beta0": bz.beta0,
                "bound": bz.bound}, []
    if cmd == "nowall":
        v = parse_class(args.target, x, truncated=True)
        bz = walls.beta_zero(x, v)
        cert = walls.nowall_certificate(x, v)
        if cert is not None:
            return {"target": v, "certificate": True,
                    "beta0": bz.beta0, "interval": f"(0, {to_text_value(bz.bound)})",
                    "step": cert.lattice_step,
                    "conclusion": cert.conclusion}, []
        violation = walls.first_interval_violation(x, v)
        payload = {"target": v, "certificate": False, "beta0": bz.beta0,
                   "interval": f"(0, {to_text_value(bz.bound)})"}
        if violation is not None:
            c0w, c1w, value = violation
            payload["violation"] = {"c0": c0w, "c1": c1w, "value": value}
        return payload, ["no gcd obstruction; candidate values meet the interval"]
    if cmd == "walls":
        v = parse_class(args.target, x, truncated=True)
        found = walls.wall_scan(x, v, args.max_rank, args.max_c1)
        return {"target": v,
                "bounds": {"max_rank": rat(args.max_rank),
                           "max_c1": rat(args.max_c1)},
                "count": len(found),
                "walls": [{"kind": w.kind, "center": w.center_beta,
                           "radius_sq": w.radius_sq,
                           "witnesses": list(w.witnesses)} for w in found]}, \
            ["candidate numerical walls; only a certificate is definitive"]
    if cmd == "fullness":
        c = _collection(args, x)
        gens = [parse_class(t, x) for t in args.gen]
        verdict = semiorth.fullness_report(x, c, gens, args.stability_assumed)
        return {"collection": list(c.members), "generators": gens,
                "collection_rank": verdict.collection_rank,
                "residual_rank": verdict.residual_rank,
                "total_rank": verdict.total_rank,
                "stability_assumed": verdict.stability_assumed,
                "checks": [{"name": n, "passed": ok} for n, ok in verdict.checks],
                "verdict": verdict.verdict}, []
    raise ParseError(f"unknown subcommand {cmd!r}")


def _render_text(command, variety, payload, notes) -> str:
    lines = [f"command: {command}", f"variety: {variety}"]
    for key, value in payload.items():
        lines.append(f"{key}: {to_text_value(value)}")
    lines.extend(f"note: {n}" for n in notes)
    return "\n".join(lines) + "\n"


def run(argv: list[str]) -> int:
    """Execute one invocation; prints the report and returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        table, default = registry(args.config)
        name = (args.variety or default).lower()
        if name not in table:
            raise DomainError(f"unknown variety: {name}")
        x = table[name]
        if args.command == "svg":
            v = parse_class(args.target, x, truncated=True)
            found = walls.wall_scan(x, v, args.max_rank, args.max_c1)
            doc = render_walls_svg(found, {
                "beta_min": args.beta_min, "beta_max": args.beta_max,
                "alpha_max": args.alpha_max})
            if args.out:
                with open(args.out, "wb") as fh:
                    fh.write(doc)
                payload = {"target": v, "count": len(found), "out": args.out}
                text = _render_text("svg", x.name, payload, [])
                sys.stdout.write(json.dumps(
                    {"command": "svg", "variety": x.name,
                     "result": to_jsonable(payload), "notes": []},
                    sort_keys=True) + "\n" if args.json else text)
            else:
                sys.stdout.write(doc.decode("utf-8"))
            return 0
        payload, notes = _handle(args, x)
        if args.json:
            doc = {"command": args.command, "variety": x.name,
                   "result": to_jsonable(payload), "notes": notes}
            out = json.dumps(doc, sort_keys=True) + "\n"
        else:
            out = _render_text(args.command, x.name, payload, notes)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
        return 0
    except (ParseError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stdout.write(f"error: {exc}\n")
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
