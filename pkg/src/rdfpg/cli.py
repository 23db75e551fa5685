"""Command-line interface.

Subcommands:
  convert    Turtle RDF -> property graph JSON (dep or indep mode)
  invert     property graph JSON -> Turtle RDF
  validate   check an instance against a schema (rdf or pg)
  roundtrip  generate databases, convert, invert and compare

Exit codes: 0 success, 1 validation problems, 2 usage or processing errors.
Set RDFPG_COLOR=1 to colorize diagnostics.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from dataclasses import dataclass

from . import schema_dependent as dep
from . import schema_independent as indep
from .errors import RdfPgError, ValidityWarning
from .generator import GeneratorConfig, gen_rdf_database, gen_rdf_graph
from .pg_graph import validate_pg
from .pg_json import parse_pg, parse_pg_schema, serialize_pg, serialize_pg_schema
from .rdf_graph import (
    build_rdf_graph,
    build_rdf_schema,
    complete_partial_schema,
    rdf_equal,
    rdf_graph_to_triples,
    rdf_schema_to_triples,
    validate_rdf,
)
from .report import ValidationReport
from .turtle import parse_turtle, parse_turtle_raw, serialize_turtle, skolemize


def _color_enabled() -> bool:
    return os.environ.get("RDFPG_COLOR", "").lower() in ("1", "true", "yes", "always")


def _paint(text: str, code: str) -> str:
    if _color_enabled():
        return f"\x1b[{code}m{text}\x1b[0m"
    return text


def _print_report(report: ValidationReport, out) -> None:
    if report.valid:
        print(_paint("valid", "32"), file=out)
    else:
        print(_paint(f"invalid: {len(report.violations)} violation(s)", "31"), file=out)
        for v in report.violations:
            print(f"  {_paint('[' + v.rule + ']', '31')} {v.element}: {v.message}", file=out)


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _load_turtle(path: str, skolemize_blanks: bool):
    text = _read_text(path)
    if skolemize_blanks:
        return skolemize(parse_turtle_raw(text))
    return parse_turtle(text)


def _cmd_convert(args) -> int:
    instance_triples = _load_turtle(args.rdf, args.skolemize)
    if args.mode == "dep":
        schema_triples = _load_turtle(args.schema, args.skolemize)
        schema = build_rdf_schema(complete_partial_schema(schema_triples))
        graph = build_rdf_graph(instance_triples, first_type=args.first_type)
        report = validate_rdf(graph, schema)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ValidityWarning)
            pg_schema, pg = dep.map_database(schema, graph)
    else:
        graph = build_rdf_graph(instance_triples, first_type=args.first_type)
        report = None
        pg_schema, pg = indep.map_database(graph)
    _write_text(args.out_pg, serialize_pg(pg))
    _write_text(args.out_pg_schema, serialize_pg_schema(pg_schema))
    print(f"wrote {args.out_pg} and {args.out_pg_schema}")
    if report is None:
        print("input validation: skipped (no schema in this mode)")
        return 0
    print("input validation:", end=" ")
    _print_report(report, sys.stdout)
    return 0 if report.valid else 1


def _cmd_invert(args) -> int:
    pg = parse_pg(_read_text(args.pg))
    if args.mode == "dep":
        pg_schema = parse_pg_schema(_read_text(args.pg_schema))
        schema, graph = dep.invert_database(pg_schema, pg)
        _write_text(args.out_rdf, serialize_turtle(rdf_graph_to_triples(graph)))
        _write_text(args.out_rdf_schema, serialize_turtle(rdf_schema_to_triples(schema)))
        print(f"wrote {args.out_rdf} and {args.out_rdf_schema}")
    else:
        if args.pg_schema:  # optional cross-check against the generic schema
            parse_pg_schema(_read_text(args.pg_schema))
        graph = indep.invert_graph(pg)
        _write_text(args.out_rdf, serialize_turtle(rdf_graph_to_triples(graph)))
        print(f"wrote {args.out_rdf}")
    return 0


def _cmd_validate(args) -> int:
    if args.kind == "rdf":
        schema = build_rdf_schema(complete_partial_schema(parse_turtle(_read_text(args.schema))))
        graph = build_rdf_graph(parse_turtle(_read_text(args.rdf)), first_type=args.first_type)
        report = validate_rdf(graph, schema)
    else:
        pg_schema = parse_pg_schema(_read_text(args.pg_schema))
        pg = parse_pg(_read_text(args.pg))
        report = validate_pg(pg, pg_schema)
    _print_report(report, sys.stdout)
    return 0 if report.valid else 1


@dataclass
class RoundtripResult:
    passed: int
    failed: int
    semantics_failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0


def run_roundtrip(
    mode: str,
    seed: int,
    count: int,
    config: GeneratorConfig | None = None,
    out=None,
) -> RoundtripResult:
    """Generate `count` databases, convert, invert and compare each one.

    Every produced property graph must validate against its produced schema,
    and the inverse mapping must recover the original exactly. The first
    failure dumps both serializations for diffing; the seed and case index
    identify the case completely.
    """
    out = out if out is not None else sys.stdout
    base = config or GeneratorConfig()
    passed = failed = semantics_failures = 0
    for index in range(count):
        case = base.with_seed(seed + index)
        if mode == "dep":
            schema, graph = gen_rdf_database(case)
            pg_schema, pg = dep.map_database(schema, graph)
            semantics_ok = validate_pg(pg, pg_schema).valid
            schema_back, graph_back = dep.invert_database(pg_schema, pg)
            ok = (
                semantics_ok
                and rdf_equal(schema, schema_back)
                and rdf_equal(graph, graph_back)
            )
        else:
            graph = gen_rdf_graph(case)
            pg_schema, pg = indep.map_database(graph)
            semantics_ok = validate_pg(pg, pg_schema).valid
            schema_back = None
            graph_back = indep.invert_graph(pg)
            ok = semantics_ok and rdf_equal(graph, graph_back)
        if not semantics_ok:
            semantics_failures += 1
        if ok:
            passed += 1
            continue
        failed += 1
        if failed == 1:
            print(f"case {index} (seed {seed + index}) failed; dumps follow", file=out)
            if not semantics_ok:
                print("produced graph does not validate against produced schema", file=out)
            print("--- original instance ---", file=out)
            print(serialize_turtle(rdf_graph_to_triples(graph)), file=out)
            print("--- recovered instance ---", file=out)
            print(serialize_turtle(rdf_graph_to_triples(graph_back)), file=out)
            if mode == "dep":
                print("--- original schema ---", file=out)
                print(serialize_turtle(rdf_schema_to_triples(schema)), file=out)
                print("--- recovered schema ---", file=out)
                print(serialize_turtle(rdf_schema_to_triples(schema_back)), file=out)
    print(f"{passed}/{count} round-trips passed", file=out)
    return RoundtripResult(passed, failed, semantics_failures)


def _cmd_roundtrip(args) -> int:
    config = GeneratorConfig(
        max_classes=args.max_classes,
        max_properties=args.max_properties,
        max_resources=args.max_resources,
        max_triples=args.max_triples,
    )
    result = run_roundtrip(args.mode, args.seed, args.count, config)
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdfpg",
        description="Convert RDF databases to property graph databases and back.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser("convert", help="Turtle RDF to property graph JSON")
    convert.add_argument("--mode", choices=("dep", "indep"), required=True,
                         help="dep: derive the PG schema from an RDF schema; "
                              "indep: use the built-in generic schema")
    convert.add_argument("--rdf", required=True, metavar="TTL", help="instance Turtle file")
    convert.add_argument("--schema", metavar="TTL", help="schema Turtle file (dep mode)")
    convert.add_argument("--out-pg", required=True, metavar="JSON")
    convert.add_argument("--out-pg-schema", required=True, metavar="JSON")
    convert.add_argument("--skolemize", action="store_true",
                         help="replace blank nodes with IRIs instead of rejecting them")
    convert.add_argument("--first-type", choices=("lexicographic",),
                         help="tie-break subjects with several type triples")
    convert.set_defaults(handler=_cmd_convert)

    invert = sub.add_parser("invert", help="property graph JSON back to Turtle RDF")
    invert.add_argument("--mode", choices=("dep", "indep"), required=True)
    invert.add_argument("--pg", required=True, metavar="JSON")
    invert.add_argument("--pg-schema", metavar="JSON")
    invert.add_argument("--out-rdf", required=True, metavar="TTL")
    invert.add_argument("--out-rdf-schema", metavar="TTL")
    invert.set_defaults(handler=_cmd_invert)

    validate = sub.add_parser("validate", help="check an instance against a schema")
    validate.add_argument("kind", choices=("rdf", "pg"))
    validate.add_argument("--rdf", metavar="TTL")
    validate.add_argument("--schema", metavar="TTL")
    validate.add_argument("--pg", metavar="JSON")
    validate.add_argument("--pg-schema", metavar="JSON")
    validate.add_argument("--first-type", choices=("lexicographic",))
    validate.set_defaults(handler=_cmd_validate)

    roundtrip = sub.add_parser("roundtrip", help="machine-check the conversion properties")
    roundtrip.add_argument("--mode", choices=("dep", "indep"), required=True)
    roundtrip.add_argument("--seed", type=int, default=0)
    roundtrip.add_argument("--count", type=int, required=True)
    roundtrip.add_argument("--max-classes", type=int, default=10)
    roundtrip.add_argument("--max-properties", type=int, default=15)
    roundtrip.add_argument("--max-resources", type=int, default=30)
    roundtrip.add_argument("--max-triples", type=int, default=100)
    roundtrip.set_defaults(handler=_cmd_roundtrip)
    return parser


def _check_usage(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "convert" and args.mode == "dep" and not args.schema:
        parser.error("convert --mode dep requires --schema")
    if args.command == "invert" and args.mode == "dep":
        if not args.pg_schema or not args.out_rdf_schema:
            parser.error("invert --mode dep requires --pg-schema and --out-rdf-schema")
    if args.command == "validate":
        if args.kind == "rdf" and not (args.rdf and args.schema):
            parser.error("validate rdf requires --rdf and --schema")
        if args.kind == "pg" and not (args.pg and args.pg_schema):
            parser.error("validate pg requires --pg and --pg-schema")
    if args.command == "roundtrip" and args.count < 1:
        parser.error("--count must be at least 1")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_usage(parser, args)
    try:
        return args.handler(args)
    except (RdfPgError, OSError, ValueError) as exc:
        print(_paint(f"error: {exc}", "31"), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
