"""Command-line entry point: ``owarank weights|aggregate|evaluate|compare``.

Exit codes: 0 success, 1 validation or usage failure, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .aggregation import AggregatedRanking, PasConfig, parse_method
from .dataset import ParseError, load_dataset, load_ground_truths, validate_dataset
from .harness import (
    PAPER_METHODS,
    aggregate_dataset,
    compare,
    comparison_markdown,
    dumps,
    evaluate_ranking,
    evaluation_markdown,
)

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default; 2 is reserved for I/O failures here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _method(args, token=None):
    try:
        return parse_method(token or args.method, PasConfig(step=args.pas_step), getattr(args, "quantifier", None))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_valid_dataset(path: str):
    ds = load_dataset(path)
    problems = validate_dataset(ds)
    if problems:
        raise UsageError("invalid dataset:\n  " + "\n  ".join(problems))
    return ds


def cmd_weights(args) -> int:
    spec = _method(args)
    if spec.kind == "pas":
        raise UsageError("pas is unweighted; choose mpf or quantifier:<name>")
    count = args.rankers or args.criteria
    if count is None:
        raise UsageError("give --rankers or --criteria")
    w = spec.weights(count)
    if args.format == "json":
        data = {"method": spec.label, "weights": [round(float(x), 6) for x in w.exact]}
        if spec.kind == "mpf":
            data["exact"] = [str(x) for x in w.exact]
        sys.stdout.write(dumps(data))
    else:
        for k, x in enumerate(w.exact, start=1):
            line = f"W{k} = {float(x):.6f}"
            if spec.kind == "mpf":
                line += f"  ({x.numerator}/{x.denominator})"
            print(line)
    return EXIT_OK


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("_") or "course"


def cmd_aggregate(args) -> int:
    spec = _method(args)
    ds = _load_valid_dataset(args.input)
    rankings = aggregate_dataset(ds, spec)
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for r in rankings:
            (out / f"{_slug(r.course)}.json").write_text(dumps(r.to_dict()), encoding="utf-8")
        return EXIT_OK
    if args.format == "markdown":
        for r in rankings:
            print(f"## {r.course} ({r.method})\n\n| rank | item | score |\n|---|---|---|")
            for i, (item, score) in enumerate(r.entries, start=1):
                print(f"| {i} | {item} | {score:.6g} |")
            print()
    else:
        sys.stdout.write(dumps([r.to_dict() for r in rankings]))
    return EXIT_OK


def _load_predictions(path: str) -> list[AggregatedRanking]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        items = data if isinstance(data, list) else [data]
        return [AggregatedRanking.from_dict(d) for d in items]
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed aggregated ranking: {exc!r}") from exc


def cmd_evaluate(args) -> int:
    predictions = _load_predictions(args.input)
    truths = {t.course: t for t in load_ground_truths(args.truth)}
    reports = []
    for p in predictions:
        if p.course not in truths:
            raise UsageError(f"no ground truth for course {p.course!r} (have: {', '.join(truths) or 'none'})")
        try:
            reports.append(evaluate_ranking(p, truths[p.course], args.k))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    payload = dumps([r.to_dict() for r in reports] if len(reports) != 1 else reports[0].to_dict())
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    sys.stdout.write(evaluation_markdown(reports) if args.format == "markdown" or args.output else payload)
    return EXIT_OK


def cmd_compare(args) -> int:
    tokens = [t for t in args.methods.split(",") if t.strip()] if args.methods else list(PAPER_METHODS)
    specs = [_method(args, t) for t in tokens]
    ds = _load_valid_dataset(args.input)
    truths = load_ground_truths(args.truth)
    try:
        report = compare(ds, truths, specs, args.proposed, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = comparison_markdown(report) if args.format == "markdown" else dumps(report.to_dict())
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="owarank", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, method_default="mpf"):
        p.add_argument("--method", default=method_default, help="pas | mpf | quantifier:<name> | quantifier:a=<x>,b=<y>")
        p.add_argument("--quantifier", help="custom quantifier a=<x>,b=<y> (with --method quantifier)")
        p.add_argument("--pas-step", type=float, default=0.0625, help="positional score step (default 1/16)")
        p.add_argument("--format", choices=("json", "markdown"), default="json")

    p = sub.add_parser("weights", help="print an OWA weight vector")
    common(p)
    p.add_argument("--rankers", type=_positive_int, help="number of rankers u")
    p.add_argument("--criteria", type=_positive_int, help="number of criteria m")
    p.set_defaults(func=cmd_weights, format="markdown")

    p = sub.add_parser("aggregate", help="aggregate every course of a dataset")
    common(p)
    p.add_argument("--input", required=True, help="dataset .json or .csv")
    p.add_argument("--output", help="directory receiving one JSON file per course")
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("evaluate", help="score aggregated rankings against ground truth")
    p.add_argument("--input", required=True, help="aggregated ranking JSON (object or array)")
    p.add_argument("--truth", required=True, help="ground truth JSON (object or array)")
    p.add_argument("--k", type=_positive_int, default=10)
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--format", choices=("json", "markdown"), default="json")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("compare", help="evaluate several methods and report improvements")
    common(p)
    p.add_argument("--input", required=True)
    p.add_argument("--truth", required=True)
    p.add_argument("--methods", help=f"comma-separated methods (default {','.join(PAPER_METHODS)})")
    p.add_argument("--proposed", default="mpf", help="label of the method to compare against the rest")
    p.add_argument("--k", type=_positive_int, default=10)
    p.add_argument("--output")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "pas_step", None) is not None:
            PasConfig(step=args.pas_step)
        return args.func(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"owarank {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"owarank {args.command}: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
