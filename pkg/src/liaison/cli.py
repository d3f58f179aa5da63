"""Command-line interface: run instance files, compute single operations,
generate corpora.

Exit codes: 0 every check holds (or is inapplicable), 1 some check fails,
2 usage or parse error, 3 resource limit exceeded.
"""

import argparse
import json
import sys
from importlib import resources

from . import __version__, limits
from .checks import FAILS, run_suite
from .errors import LiaisonError, ParseError, ResourceLimitError
from .fields import GF, QQ
from .generate import PROFILES, generate_instances
from .groebner import Ideal
from .ideal_ops import ideal_quotient, intersect_ideals
from .instancefile import instance_digest, parse_instance
from .linkage import (
    CyclicModule,
    RegularSequenceWitness,
    aprime_construct,
    cd_bounds,
)
from .parse import TokenStream, parse_poly_tokens, tokenize
from .resolutions import grade_via_ext, pd_via_resolution
from .rings import PolyRing, poly_str


def report_schema():
    """The shipped JSON schema for reports."""
    text = resources.files("liaison").joinpath("report_schema.json").read_text()
    return json.loads(text)


def build_report(parsed, verdicts):
    return {
        "version": __version__,
        "digest": instance_digest(parsed),
        "characteristic": parsed.ring.field.characteristic,
        "verdicts": [
            {
                "check": v.check.value,
                "status": v.status,
                "details": _plain(v.details),
                "witness": _plain(v.witness) if v.witness is not None else None,
                "millis": round(v.millis, 3),
            }
            for v in verdicts
        ],
    }


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = list(value)
        if isinstance(value, (set, frozenset)):
            items = sorted(items, key=repr)
        return [_plain(v) for v in items]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return str(value)


def render_markdown(report):
    lines = [
        "# Check report",
        "",
        f"- version: {report['version']}",
        f"- digest: {report['digest']}",
        f"- characteristic: {report['characteristic']}",
        "",
    ]
    for v in report["verdicts"]:
        lines.append(f"## {v['check']} — {v['status']}")
        lines.append("")
        for key, value in v["details"].items():
            lines.append(f"- {key}: {value}")
        if v["witness"] is not None:
            lines.append(f"- witness: {v['witness']}")
        lines.append(f"- millis: {v['millis']}")
        lines.append("")
    return "\n".join(lines)


def exit_code_for(verdicts):
    code = 0
    for v in verdicts:
        if v.status == FAILS:
            if v.details.get("reason") == "resource limit exceeded":
                return 3
            code = 1
    return code


def _write_output(text, out_path):
    if out_path:
        with open(out_path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _cmd_run(args):
    try:
        with open(args.file) as handle:
            text = handle.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    previous_caps = None
    if args.degree_cap:
        previous_caps = limits.set_caps(degree=args.degree_cap)
    try:
        parsed = parse_instance(text)
        verdicts = run_suite(parsed, jobs=args.jobs)
    except ParseError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return 3
    finally:
        if previous_caps is not None:
            limits.set_caps(*previous_caps)
    report = build_report(parsed, verdicts)
    if args.format == "json":
        _write_output(json.dumps(report, indent=2) + "\n", args.out)
    else:
        _write_output(render_markdown(report), args.out)
    return exit_code_for(verdicts)


def _parse_ring_spec(spec):
    """'QQ[x,y] grevlex' or 'FP(7)[x1,x2] lex' (order defaults to grevlex)."""
    ts = TokenStream(tokenize(spec))
    field_tok = ts.expect_ident("field")
    if field_tok.value == "QQ":
        field = QQ
    elif field_tok.value == "FP":
        ts.expect_sym("(")
        field = GF(ts.expect_int("prime").value)
        ts.expect_sym(")")
    else:
        raise ParseError("expected QQ or FP(p)", field_tok.line, field_tok.col)
    ts.expect_sym("[")
    variables = [ts.expect_ident("variable").value]
    while ts.try_sym(","):
        variables.append(ts.expect_ident("variable").value)
    ts.expect_sym("]")
    order = "grevlex"
    if ts.peek().kind == "ident":
        order = ts.next().value
    ts.expect_eof()
    return PolyRing(field, variables, order)


def _parse_poly_list_arg(ring, text):
    """Comma-separated polynomials; '0' alone denotes the empty list."""
    ts = TokenStream(tokenize(text))
    first = ts.peek()
    if first.kind == "int" and first.value == 0:
        ts.next()
        if ts.peek().kind == "eof":
            return []
        ts.pos -= 1
    polys = [parse_poly_tokens(ts, ring)]
    while ts.try_sym(","):
        polys.append(parse_poly_tokens(ts, ring))
    ts.expect_eof()
    return polys


def _cmd_compute(args):
    ring = _parse_ring_spec(args.ring)
    ideal = Ideal(ring, tuple(_parse_poly_list_arg(ring, args.ideal)))
    by = None
    if args.by is not None:
        by = Ideal(ring, tuple(_parse_poly_list_arg(ring, args.by)))
    module_ideal = Ideal(ring, ())
    if args.module is not None:
        module_ideal = Ideal(ring, tuple(_parse_poly_list_arg(ring, args.module)))
    module = CyclicModule(ring, module_ideal)

    def show_ideal(I):
        gb = I.groebner()
        return ", ".join(poly_str(g) for g in gb) if gb else "0"

    op = args.operation
    if op == "gb":
        print(show_ideal(ideal))
    elif op == "colon":
        if by is None:
            raise ValueError("colon needs --by")
        shifted = Ideal(ring, ideal.gens + module_ideal.gens)
        print(show_ideal(ideal_quotient(shifted, by)))
    elif op == "intersect":
        if by is None:
            raise ValueError("intersect needs --by")
        print(show_ideal(intersect_ideals(ideal, by)))
    elif op == "grade":
        print(grade_via_ext(ideal, module))
    elif op == "cd":
        record = cd_bounds(ideal, module)
        if record.cd_exact is not None:
            print(record.cd_exact)
        else:
            print(f"[{record.cd_lower}, {record.cd_upper}]")
    elif op == "pd":
        print(pd_via_resolution(ideal))
    elif op == "aprime":
        if by is None:
            raise ValueError("aprime needs --by (the linking regular sequence)")
        witness = RegularSequenceWitness(tuple(by.gens))
        print(show_ideal(aprime_construct(ideal, by, module, witness)))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown operation {op}")
    return 0


def _cmd_gen(args):
    text = generate_instances(args.seed, args.profile, args.count, args.vars)
    _write_output(text, args.out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liaison",
        description="Linkage calculus over polynomial rings: run instance "
        "files, compute single invariants, generate corpora.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run every check in an instance file")
    run_p.add_argument("file")
    run_p.add_argument("--format", choices=("json", "md"), default="md")
    run_p.add_argument("--out", default=None)
    run_p.add_argument("--jobs", type=int, default=1)
    run_p.add_argument("--degree-cap", type=int, default=None)

    compute_p = sub.add_parser("compute", help="one-off computations")
    compute_p.add_argument(
        "operation",
        choices=("gb", "colon", "intersect", "grade", "cd", "pd", "aprime"),
    )
    compute_p.add_argument("--ring", required=True, help='e.g. "QQ[x,y] grevlex"')
    compute_p.add_argument("--ideal", required=True, help="comma-separated generators")
    compute_p.add_argument("--by", default=None, help="second ideal / sequence")
    compute_p.add_argument(
        "--module", default=None, help="generators of J for M = R/J (default M = R)"
    )

    gen_p = sub.add_parser("gen", help="emit a deterministic instance file")
    gen_p.add_argument("--seed", type=int, required=True)
    gen_p.add_argument("--profile", choices=PROFILES, required=True)
    gen_p.add_argument("--count", type=int, default=5)
    gen_p.add_argument("--vars", type=int, default=4)
    gen_p.add_argument("--out", default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "compute":
            return _cmd_compute(args)
        return _cmd_gen(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return 3
    except (LiaisonError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
