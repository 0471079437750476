"""Command-line frontend.

Problem files declare one ring, named ideals and optional point sets:

    // a comment
    ring Q[x,y,z] degrevlex;
    ideal I = z^2 - y, x^2 - 2*x*z + y;
    points S = (0,0,0), (1,1,1);

Exit codes: 0 the checked property holds (or the computation succeeded),
1 the property fails, 2 input or usage error, 3 unsupported input.
"""

import argparse
import hashlib
import json
import re
import sys
import time
from fractions import Fraction

from .border import check_sci_border, family_sci_locus
from .ci_core import check_ci_at_maximal, check_locally_ci, check_sci_macaulay
from .errors import (
    CharacteristicObstruction,
    CicheckError,
    DegreeCapExceeded,
    ExponentOverflow,
    ParseError,
    UnsupportedField,
)
from .fields import GF, QQ, FunctionField
from .groebner import buchberger, hilbert_data
from .kahler import kahler_different
from .poly import ORDERING_NAMES, PolyRing
from .primdec import DEFAULT_SEED, primary_decomposition
from .quotient import vanishing_ideal_of_points

SCHEMA_VERSION = 1

_RING_RE = re.compile(
    r"^ring\s+(?P<field>Q|Fp\(\s*\d+\s*\)|Q\([^)]*\))\s*"
    r"\[(?P<vars>[^\]]+)\]\s*(?P<ord>\w+)$"
)


class ProblemFile:
    def __init__(self, ring, ideals, point_sets):
        self.ring = ring
        self.ideals = ideals
        self.point_sets = point_sets


def _strip_comments(text):
    return re.sub(r"//[^\n]*", "", text)


def _parse_field(spec):
    spec = spec.strip()
    if spec == "Q":
        return QQ
    if spec.startswith("Fp"):
        p = int(spec[spec.index("(") + 1 : spec.index(")")])
        return GF(p)
    params = [s.strip() for s in spec[2:-1].split(",") if s.strip()]
    return FunctionField(params)


def _split_top_level(text, sep):
    """Split on sep outside parentheses."""
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _parse_point(text, ring):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ParseError(f"malformed point {text!r}")
    coords = []
    for piece in text[1:-1].split(","):
        piece = piece.strip()
        if "/" in piece:
            num, den = piece.split("/")
            coords.append(Fraction(int(num), int(den)))
        else:
            coords.append(int(piece))
    if len(coords) != ring.nvars:
        raise ParseError(f"point {text!r} has {len(coords)} coordinates, expected {ring.nvars}")
    return tuple(coords)


def parse_problem(text):
    ring = None
    ideals = {}
    point_sets = {}
    clean = _strip_comments(text)
    for raw in clean.split(";"):
        stmt = raw.strip()
        if not stmt:
            continue
        stmt = re.sub(r"\s+", " ", stmt)
        if stmt.startswith("ring "):
            if ring is not None:
                raise ParseError("multiple ring declarations")
            m = _RING_RE.match(stmt)
            if not m:
                raise ParseError(f"malformed ring declaration: {stmt!r}")
            field = _parse_field(m.group("field"))
            variables = [v.strip() for v in m.group("vars").split(",")]
            ordering = m.group("ord").lower()
            if ordering not in ORDERING_NAMES:
                raise ParseError(f"unknown term ordering {ordering!r}")
            ring = PolyRing(field, variables, ordering)
        elif stmt.startswith("ideal "):
            if ring is None:
                raise ParseError("ideal declared before the ring")
            m = re.match(r"^ideal\s+(\w+)\s*=\s*(.+)$", stmt, re.S)
            if not m:
                raise ParseError(f"malformed ideal declaration: {stmt!r}")
            name, body = m.group(1), m.group(2)
            polys = [
                ring.parse(part.strip())
                for part in _split_top_level(body, ",")
                if part.strip()
            ]
            if not polys:
                raise ParseError(f"ideal {name} has no generators")
            ideals[name] = polys
        elif stmt.startswith("points "):
            if ring is None:
                raise ParseError("points declared before the ring")
            m = re.match(r"^points\s+(\w+)\s*=\s*(.+)$", stmt, re.S)
            if not m:
                raise ParseError(f"malformed points declaration: {stmt!r}")
            name, body = m.group(1), m.group(2)
            pts = []
            for part in _split_top_level(body, ","):
                part = part.strip()
                if part:
                    pts.append(_parse_point(part, ring))
            if not pts:
                raise ParseError(f"point set {name} is empty")
            point_sets[name] = pts
        else:
            raise ParseError(f"unrecognized statement: {stmt!r}")
    if ring is None:
        raise ParseError("no ring declaration")
    return ProblemFile(ring, ideals, point_sets)


def _select_ideal(problem, name):
    if name is not None:
        if name in problem.ideals:
            return problem.ideals[name]
        if name in problem.point_sets:
            return vanishing_ideal_of_points(problem.ring, problem.point_sets[name])
        raise ParseError(f"no ideal or point set named {name!r}")
    if len(problem.ideals) == 1:
        return next(iter(problem.ideals.values()))
    if not problem.ideals and len(problem.point_sets) == 1:
        return vanishing_ideal_of_points(
            problem.ring, next(iter(problem.point_sets.values()))
        )
    raise ParseError("ambiguous input: name the ideal with --ideal")


def _emit(args, payload, human_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def _payload(args, command, digest, body, elapsed):
    out = {"schema": SCHEMA_VERSION, "command": command, "input_digest": digest}
    out["seed"] = args.seed
    out.update(body)
    out["timing"] = round(elapsed, 3) if args.timing else None
    return out


def _maybe_plot(args, hd, stem):
    if args.plot_dir and hd is not None:
        from .report import write_report_artifacts

        png, csvf = write_report_artifacts(hd, args.plot_dir, stem=stem)
        print(f"wrote {png}", file=sys.stderr)
        print(f"wrote {csvf}", file=sys.stderr)


def _ci_body(report):
    return report.as_dict()


def _run(args):
    with open(args.problem, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    problem = parse_problem(raw.decode("utf-8"))
    start = time.monotonic()
    command = args.command if args.command != "check" else f"check {args.mode}"

    if args.command == "gb":
        gens = _select_ideal(problem, args.ideal)
        gb = buchberger(gens)
        body = {"basis": [str(g) for g in gb.elements]}
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start),
              ["reduced Groebner basis:"] + [f"  {g}" for g in gb.elements])
        return 0

    if args.command == "hilbert":
        gens = _select_ideal(problem, args.ideal)
        hd = hilbert_data(buchberger(gens))
        _maybe_plot(args, hd, "hilbert")
        body = {"hilbert": hd.as_dict()}
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start),
              [f"mu = {hd.mu}",
               f"hilbert function = {hd.hf}",
               f"castelnuovo = {hd.castelnuovo}",
               f"regularity index = {hd.ri}",
               f"symmetric = {hd.symmetric}"])
        return 0

    if args.command == "primdec":
        gens = _select_ideal(problem, args.ideal)
        comps = primary_decomposition(gens, seed=args.seed)
        body = {"components": [c.as_dict() for c in comps]}
        lines = [f"{len(comps)} primary component(s)"]
        for k, c in enumerate(comps):
            lines.append(f"component {k + 1}: multiplicity {c.multiplicity}")
            lines.append("  radical: " + ", ".join(str(g) for g in c.radical_gb.elements))
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start), lines)
        return 0

    if args.command == "check" and args.mode == "ci-at":
        gens = _select_ideal(problem, args.ideal)
        maximal = problem.ideals.get(args.maximal) if args.maximal else None
        if args.maximal and maximal is None:
            raise ParseError(f"no ideal named {args.maximal!r}")
        report = check_ci_at_maximal(
            gens,
            maximal=maximal,
            assume_primary=args.assume_primary,
            seed=args.seed,
            short_circuit=args.short_circuit,
            workers=args.workers,
        )
        body = _ci_body(report)
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start),
              [f"complete intersection at m: {report.verdict}",
               f"witnesses: {body['witnesses']}"])
        return 0 if report.verdict else 1

    if args.command == "check" and args.mode == "lci":
        gens = _select_ideal(problem, args.ideal)
        verdict, reports = check_locally_ci(
            gens, seed=args.seed, short_circuit=args.short_circuit, workers=args.workers
        )
        body = {
            "verdict": verdict,
            "components": [
                {"radical": [str(g) for g in comp.radical_gb.elements], **rep.as_dict()}
                for comp, rep in reports
            ],
        }
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start),
              [f"locally a complete intersection: {verdict}"])
        return 0 if verdict else 1

    if args.command in ("check", "witnesses") and getattr(args, "mode", "sci") == "sci":
        gens = _select_ideal(problem, args.ideal)
        if args.method == "border":
            report = check_sci_border(
                gens, short_circuit=args.short_circuit, workers=args.workers
            )
        else:
            report = check_sci_macaulay(
                gens, short_circuit=args.short_circuit, workers=args.workers
            )
        _maybe_plot(args, report.hilbert, "sci")
        body = _ci_body(report)
        lines = [f"strict complete intersection: {report.verdict}"]
        if report.failure_reason != "none":
            lines.append(f"reason: {report.failure_reason}")
        lines.append(f"witnesses: {body['witnesses']}")
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start), lines)
        return 0 if report.verdict else 1

    if args.command == "kahler":
        gens = _select_ideal(problem, args.ideal)
        target = "self" if args.target == "self" else "degree_form"
        report = kahler_different(gens, target=target, workers=args.workers)
        body = report.as_dict()
        lines = [
            f"char_ok = {report.char_ok} (mu = {report.mu})",
            f"theta generators: {[str(g) for g in report.theta_generators]}",
        ]
        if report.char_ok:
            lines.append(f"verdict: {report.verdict_if_applicable}")
        else:
            lines.append("no verdict: characteristic divides mu")
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start), lines)
        if not report.char_ok:
            return 0
        return 0 if report.verdict_if_applicable else 1

    if args.command == "family-sci":
        gens = _select_ideal(problem, args.ideal)
        locus = family_sci_locus(
            gens, short_circuit=args.short_circuit, workers=args.workers
        )
        _maybe_plot(args, locus.report.hilbert, "family")
        body = locus.as_dict()
        body["verdict"] = locus.report.verdict
        lines = ["strict-CI locus (generic fiber only):"]
        for cond in body["conditions"]:
            terms = ", ".join(f"{p} != 0" for p in cond["nonvanishing"])
            lines.append(f"  minor columns {cond['columns']}: {terms}")
        if not body["conditions"]:
            lines.append("  empty (no nonzero minor)")
        _emit(args, _payload(args, command, digest, body, time.monotonic() - start), lines)
        return 0 if locus.report.verdict else 1

    raise ParseError(f"unknown command {args.command!r}")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cicheck",
        description="Complete-intersection checks for 0-dimensional ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_method=False, with_maximal=False, with_target=False):
        p.add_argument("problem", help="problem file")
        p.add_argument("--ideal", help="name of the ideal (or point set) to use")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--short-circuit", action="store_true")
        p.add_argument("--assume-primary", action="store_true")
        p.add_argument("--plot-dir", help="write Castelnuovo plot and Hilbert CSV here")
        p.add_argument("--timing", action="store_true", help="fill the timing field")
        if with_method:
            p.add_argument("--method", choices=("macaulay", "border"), default="macaulay")
        if with_maximal:
            p.add_argument("--maximal", help="name of the maximal ideal in the file")
        if with_target:
            p.add_argument("--target", choices=("self", "df"), default="self")

    for name in ("gb", "hilbert", "primdec", "family-sci"):
        common(sub.add_parser(name))

    check = sub.add_parser("check")
    check.add_argument("mode", choices=("lci", "ci-at", "sci"))
    common(check, with_method=True, with_maximal=True)

    wit = sub.add_parser("witnesses")
    common(wit, with_method=True)
    wit.set_defaults(mode="sci")

    kah = sub.add_parser("kahler")
    common(kah, with_target=True)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "method"):
        args.method = "macaulay"
    try:
        return _run(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DegreeCapExceeded, UnsupportedField, CharacteristicObstruction, ExponentOverflow) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 3
    except CicheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
