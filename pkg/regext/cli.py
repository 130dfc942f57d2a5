"""
Command line for regext.

Subcommands print JSON on standard output; diagnostics go to standard error.
Exit codes: 0 when every check passes, 1 when a non-vacuous check fails,
2 on usage or input errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError

from regext import __version__
from regext.config import EngineSettings, load_settings
from regext.data.corpus import CorpusParams, generate_corpus, load_corpus, save_corpus
from regext.tools.module_tools import describe_ext, summarize_module
from regext.tools.verification import (
    analyze_instance,
    build_document,
    options_from_settings,
    verify_corpus,
    write_csv,
    write_report,
)
from regext.utils.cohomology import ext_into_ring, ext_module
from regext.utils.degrees import hdeg
from regext.utils.presentation_io import read_presentation
from regext.utils.ring import AlgebraError

logger = logging.getLogger("regext.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad command-line input detected after argument parsing."""
    pass


def parse_window(text: str) -> Tuple[int, int]:
    """'a..b' -> (a, b): margins below indeg and above reg."""
    low, separator, high = text.partition("..")
    if not separator:
        raise argparse.ArgumentTypeError(f"window must look like a..b, got {text!r}")
    try:
        return int(low), int(high)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window bounds must be integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regext", description="Regularity, Ext and homological degree of graded modules.")
    parser.add_argument("--version", action="version", version=f"regext {__version__}")
    parser.add_argument("--log-level", default=None, help="Logging level (default: REGEXT_LOG_LEVEL or WARNING)")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="Invariants, Hilbert data and Betti table as JSON")
    compute.add_argument("file", type=Path)

    ext = sub.add_parser("ext", help="Ext^i(M, R) or Ext^i(M, N)")
    ext.add_argument("file", type=Path)
    ext.add_argument("--i", type=int, required=True, dest="index", help="Cohomological index")
    ext.add_argument("--against", type=Path, default=None, help="Presentation file of N")

    hdeg_parser = sub.add_parser("hdeg", help="Homological degree with its breakdown")
    hdeg_parser.add_argument("file", type=Path)
    hdeg_parser.add_argument("--seed", type=int, default=None)

    verify = sub.add_parser("verify", help="Run every bound check on one module")
    verify.add_argument("file", type=Path)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--window", type=parse_window, default=None, help="Margins a..b around indeg and reg")
    verify.add_argument("--report", type=Path, default=None, help="Write the JSON report here instead of stdout")
    verify.add_argument("--csv", type=Path, default=None, help="Also write the reports as CSV")

    corpus = sub.add_parser("corpus", help="Write a seeded corpus of presentation files")
    corpus.add_argument("--n", type=int, required=True)
    corpus.add_argument("--max-deg", type=int, required=True)
    corpus.add_argument("--count", type=int, required=True)
    corpus.add_argument("--seed", type=int, default=None)
    corpus.add_argument("--num-gens", type=int, default=2)
    corpus.add_argument("--num-rels", type=int, default=3)
    corpus.add_argument("--out", type=Path, required=True)

    verify_corpus_parser = sub.add_parser("verify-corpus", help="Verify every presentation file of a directory")
    verify_corpus_parser.add_argument("directory", type=Path)
    verify_corpus_parser.add_argument("--report", type=Path, required=True)
    verify_corpus_parser.add_argument("--jobs", type=int, default=None)
    verify_corpus_parser.add_argument("--seed", type=int, default=None)
    verify_corpus_parser.add_argument("--window", type=parse_window, default=None)
    verify_corpus_parser.add_argument("--csv", type=Path, default=None)
    verify_corpus_parser.add_argument("--no-pairs", action="store_true", help="Skip Ext checks on pairs of modules")
    return parser


def _print_json(payload: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _settings(args: argparse.Namespace) -> EngineSettings:
    window = getattr(args, "window", None) or (None, None)
    settings = load_settings(
        seed=getattr(args, "seed", None),
        window_low=window[0],
        window_high=window[1],
        jobs=getattr(args, "jobs", None),
    )
    if args.log_level:
        settings = EngineSettings(**{**settings.model_dump(), "log_level": args.log_level})
    return settings


def run_compute(args: argparse.Namespace, settings: EngineSettings) -> int:
    _print_json(summarize_module(read_presentation(args.file)))
    return EXIT_OK


def run_ext(args: argparse.Namespace, settings: EngineSettings) -> int:
    M = read_presentation(args.file)
    if args.against is not None:
        ext = ext_module(M, read_presentation(args.against), args.index)
    else:
        ext = ext_into_ring(M, args.index)
    _print_json(describe_ext(ext, settings.window_low, settings.window_high))
    return EXIT_OK


def run_hdeg(args: argparse.Namespace, settings: EngineSettings) -> int:
    M = read_presentation(args.file)
    payload: Dict[str, Any] = {"label": M.label, "seed": settings.seed}
    if M.is_zero():
        payload.update({"hdeg": 0, "degree": 0, "dim": 0, "terms": []})
    else:
        result = hdeg(M)
        payload.update({"hdeg": result.value, **result.model_dump(mode="json", exclude={"value"})})
    _print_json(payload)
    return EXIT_OK


def _finish(args: argparse.Namespace, document) -> int:
    if args.report is not None:
        write_report(document, args.report)
    else:
        sys.stdout.write(document.to_json())
    if args.csv is not None:
        write_csv([*document.reports, *document.consistency], args.csv)
    failed = [report for report in [*document.reports, *document.consistency] if report.failed]
    for report in failed:
        logger.warning(f"FAILED {report.identifier.value} on {report.instance_id}: {report.lhs} {report.relation.value} {report.rhs}")
    return EXIT_FAILED if failed else EXIT_OK


def run_verify(args: argparse.Namespace, settings: EngineSettings) -> int:
    M = read_presentation(args.file)
    summary, reports = analyze_instance(M, options_from_settings(settings), M.label or "module")
    return _finish(args, build_document(settings, [summary], reports))


def run_corpus(args: argparse.Namespace, settings: EngineSettings) -> int:
    params = CorpusParams(
        n=args.n,
        max_deg=args.max_deg,
        count=args.count,
        num_gens=args.num_gens,
        num_rels=args.num_rels,
        prime=settings.prime,
    )
    paths = save_corpus(generate_corpus(params, settings.seed), args.out)
    _print_json({"directory": str(args.out), "seed": settings.seed, "files": [path.name for path in paths]})
    return EXIT_OK


def run_verify_corpus(args: argparse.Namespace, settings: EngineSettings) -> int:
    if not args.directory.is_dir():
        raise UsageError(f"Not a directory: {args.directory}")
    entries = load_corpus(args.directory)
    if not entries:
        raise UsageError(f"No presentation files in {args.directory}")
    summaries, reports = verify_corpus(
        entries, options_from_settings(settings), jobs=settings.jobs, with_pairs=not args.no_pairs
    )
    return _finish(args, build_document(settings, summaries, reports))


COMMANDS = {
    "compute": run_compute,
    "ext": run_ext,
    "hdeg": run_hdeg,
    "verify": run_verify,
    "corpus": run_corpus,
    "verify-corpus": run_verify_corpus,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = _settings(args)
    except (ValueError, ValidationError) as e:
        sys.stderr.write(f"regext: invalid configuration: {e}\n")
        return EXIT_USAGE
    logging.basicConfig(level=settings.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        return COMMANDS[args.command](args, settings)
    except (AlgebraError, UsageError, FileNotFoundError, ValidationError, ValueError) as e:
        sys.stderr.write(f"regext: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
