"""Command-line interface: ``procmatch translate|match|rank|check``.

Exit codes: 0 success, 1 domain error (bad input content, unsound net),
2 usage error (bad flags, unreadable input file), 3 inconclusive soundness.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from procmatch import __version__
from procmatch.embeddings import EmbeddingTable, load_embeddings
from procmatch.errors import ProcMatchError
from procmatch.matcher import DEFAULT_THRESHOLD, DEFAULT_WEIGHT, MatchReport, match, rank_references
from procmatch.model_io import (
    dumps_net,
    export_dot,
    load_net,
    load_reference_library,
    report_to_json,
    save_net,
)
from procmatch.petri import PetriNet, check_soundness, validate_workflow
from procmatch.translator import translate

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3

EMBEDDINGS_ENV = "PROCMATCH_EMBEDDINGS"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    embeddings_path: Path | None = None
    threshold: float = DEFAULT_THRESHOLD
    weight: float = DEFAULT_WEIGHT
    soundness_bound: int = 10_000
    out: Path | None = None
    dot: Path | None = None

    def __post_init__(self) -> None:
        for name in ("threshold", "weight"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise UsageError(f"{name} must lie in [0, 1], got {value}")
        if self.soundness_bound < 1:
            raise UsageError("bound must be >= 1")


def _unit_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _err(message: str) -> None:
    print(f"procmatch: {message}", file=sys.stderr)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_net_arg(path: str) -> PetriNet:
    if not Path(path).is_file():
        raise UsageError(f"no such file: {path}")
    net, _ = load_net(path)
    return net


def _embeddings(config: RunConfig) -> EmbeddingTable:
    if config.embeddings_path is None:
        raise UsageError(f"no embeddings file: pass --embeddings or set {EMBEDDINGS_ENV}")
    if not config.embeddings_path.is_file():
        raise UsageError(f"no such file: {config.embeddings_path}")
    return load_embeddings(config.embeddings_path)


def _config(args: argparse.Namespace) -> RunConfig:
    embeddings = getattr(args, "embeddings", None) or os.environ.get(EMBEDDINGS_ENV) or None
    return RunConfig(
        embeddings_path=Path(embeddings) if embeddings else None,
        threshold=getattr(args, "threshold", DEFAULT_THRESHOLD),
        weight=getattr(args, "weight", DEFAULT_WEIGHT),
        soundness_bound=getattr(args, "bound", 10_000),
        out=Path(args.out) if getattr(args, "out", None) else None,
        dot=Path(args.dot) if getattr(args, "dot", None) else None,
    )


def cmd_translate(args: argparse.Namespace) -> int:
    config = _config(args)
    text = _read_input(args.input)
    default_name = "business" if args.input == "-" else Path(args.input).stem
    result = translate(text, name=args.name or default_name)
    for warning in result.warnings:
        _err(f"warning: {warning}")
    if config.out:
        save_net(result.net, config.out)
    else:
        sys.stdout.write(dumps_net(result.net))
    if config.dot:
        with open(config.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export_dot(result.net))
    labels = [result.net.label(t) for t in result.net.visible_transitions()]
    print(
        f"translated {len(labels)} actions into {len(result.net.places)} places: {', '.join(labels)}",
        file=sys.stderr,
    )
    return EXIT_OK


def _format_report(report: MatchReport) -> str:
    lines = [
        f"business:  {report.business_name}",
        f"reference: {report.reference_name}",
        f"  embedding similarity  {report.embedding_similarity:.4f}",
        f"  structure similarity  {report.structure_similarity:.4f}"
        f"  (nodes {report.node_ratio:.4f}, edges {report.edge_ratio:.4f})",
        f"  combined (w={report.weight:g})    {report.combined:.4f}",
        f"pairs (threshold {report.alignment.threshold:g}):",
    ]
    pairs = report.alignment.pairs
    bl, rl = report.business_labels, report.reference_labels
    w = [max([len(s) for s in col] + [1]) for col in (
        [p.business for p in pairs], [bl[p.business] for p in pairs],
        [p.reference for p in pairs], [rl[p.reference] for p in pairs],
    )]
    for pair in pairs:
        lines.append(
            f"  {pair.business:<{w[0]}}  {bl[pair.business]:<{w[1]}}  ->  "
            f"{pair.reference:<{w[2]}}  {rl[pair.reference]:<{w[3]}}  {pair.score:.4f}"
        )
    if not report.alignment.pairs:
        lines.append("  (none)")
    for side, ids, labels in (
        ("business", report.alignment.unmatched_business, report.business_labels),
        ("reference", report.alignment.unmatched_reference, report.reference_labels),
    ):
        shown = ", ".join(f"{t} ({labels[t]})" for t in ids) or "-"
        lines.append(f"unmatched {side}: {shown}")
    return "\n".join(lines) + "\n"


def cmd_match(args: argparse.Namespace) -> int:
    config = _config(args)
    business = _load_net_arg(args.business)
    reference = _load_net_arg(args.reference)
    table = _embeddings(config)
    report = match(business, reference, table, config.weight, config.threshold)
    if args.json:
        sys.stdout.write(report_to_json(report.to_dict()))
    else:
        sys.stdout.write(_format_report(report))
    return EXIT_OK


def cmd_rank(args: argparse.Namespace) -> int:
    config = _config(args)
    business = _load_net_arg(args.business)
    if not Path(args.refs).is_dir():
        raise UsageError(f"not a directory: {args.refs}")
    table = _embeddings(config)
    references, errors = load_reference_library(args.refs)
    for error in errors:
        _err(f"skipped {error}")
    if not references:
        _err(f"no reference models loaded from {args.refs}")
        return EXIT_DOMAIN
    reports = rank_references(
        business, references, table, config.weight, config.threshold, workers=args.workers
    )
    if args.top:
        reports = reports[: args.top]
    if args.json:
        payload = {
            "schema_version": "1",
            "business": business.name,
            "ranking": [
                {
                    "rank": i,
                    "reference": r.reference_name,
                    "embedding_similarity": r.embedding_similarity,
                    "structure_similarity": r.structure_similarity,
                    "combined": r.combined,
                }
                for i, r in enumerate(reports, start=1)
            ],
        }
        sys.stdout.write(report_to_json(payload))
        return EXIT_OK
    width = max(len("reference"), *(len(r.reference_name) for r in reports))
    print(f"{'rank':>4}  {'reference':<{width}}  {'embedding':>9}  {'structure':>9}  {'combined':>8}")
    for i, r in enumerate(reports, start=1):
        print(
            f"{i:>4}  {r.reference_name:<{width}}  {r.embedding_similarity:>9.4f}  "
            f"{r.structure_similarity:>9.4f}  {r.combined:>8.4f}"
        )
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    config = _config(args)
    net = _load_net_arg(args.net)
    diagnostics = validate_workflow(net)
    print(f"net: {net.name}")
    if not diagnostics.is_workflow_net:
        print("workflow net: no")
        for violation in diagnostics.violations:
            print(f"  - {violation}")
        return EXIT_DOMAIN
    print(f"workflow net: yes (source {diagnostics.source}, sink {diagnostics.sink})")
    report = check_soundness(net, config.soundness_bound)
    print(f"soundness: {report.status} ({report.explored} markings explored, bound {report.bound})")
    for finding in report.findings:
        print(f"  - {finding}")
    if report.status == "inconclusive":
        return EXIT_INCONCLUSIVE
    return EXIT_OK if report.sound else EXIT_DOMAIN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="procmatch",
        description="Translate process descriptions into workflow nets and match them against reference models.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("translate", help="turn a text description into a net document")
    p.add_argument("input", help="UTF-8 text file, or - for stdin")
    p.add_argument("--out", help="write the net document here instead of stdout")
    p.add_argument("--dot", help="also write a Graphviz DOT rendering")
    p.add_argument("--name", help="net name (default: input file stem)")
    p.set_defaults(func=cmd_translate)

    def matching_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--embeddings", help=f"word-vector text file (default: ${EMBEDDINGS_ENV})")
        p.add_argument("--threshold", type=_unit_float, default=DEFAULT_THRESHOLD,
                       help="minimum cosine for a task pair (default: %(default)s)")
        p.add_argument("--weight", type=_unit_float, default=DEFAULT_WEIGHT,
                       help="weight of embedding similarity in the combined score (default: %(default)s)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("match", help="compare a business net with one reference net")
    p.add_argument("business")
    p.add_argument("reference")
    matching_flags(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("rank", help="rank a directory of reference nets")
    p.add_argument("business")
    p.add_argument("--refs", required=True, help="directory of *.net.json reference models")
    p.add_argument("--top", type=_positive_int, help="show only the best k")
    p.add_argument("--workers", type=_positive_int, default=None, help="score references in parallel")
    matching_flags(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("check", help="validate a net and check soundness")
    p.add_argument("net")
    p.add_argument("--bound", type=_positive_int, default=10_000,
                   help="maximum markings to explore (default: %(default)s)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except ProcMatchError as exc:
        _err(f"error: {exc}")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
