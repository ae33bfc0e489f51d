"""Command-line front end.

Exit status: 0 on success, 1 when input violates a probabilistic
precondition, 2 when a file cannot be read or parsed.  Errors are written
to stderr as a single JSON line ``{"error": <class>, "message": <text>}``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .analysis import search_pointwise_increase
from .errors import InfolabError, ParseError, ValidationError
from .io import parse_rational_arg, read_joint, read_model_doc
from .otp import build_model
from .reports import (
    SECTIONS,
    Report,
    check_report,
    entropy_report,
    otp_report,
    reproduce_examples,
    search_report,
)

FORMATS = ("table", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    command: str
    fmt: str = "table"
    seed: int = 0
    out: Path | None = None
    path: Path | None = None
    rows: int = 2
    cols: int = 2
    step: Fraction = Fraction(1, 10)
    samples: int = 0
    ciphertext: int = 0
    blend: Fraction | None = None
    section: str = "all"


def _rational(text: str) -> Fraction:
    try:
        return parse_rational_arg(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="table")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", type=Path, default=None,
                        help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="infolab",
        description="Exact discrete entropy calculations and inequality checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common],
                       help="entropies of a joint distribution file")
    p.add_argument("path", type=Path)

    p = sub.add_parser("check", parents=[common],
                       help="chain rule, subadditivity and conditioning verdicts")
    p.add_argument("path", type=Path)

    p = sub.add_parser("search", parents=[common],
                       help="exhaustive grid search for pointwise entropy increase")
    p.add_argument("--rows", type=int, default=2)
    p.add_argument("--cols", type=int, default=2)
    p.add_argument("--step", type=_rational, default=Fraction(1, 10))
    p.add_argument("--samples", type=int, default=0,
                   help="also certify this many seeded random joints")

    p = sub.add_parser("otp", parents=[common], help="one-time pad posterior analysis")
    p.add_argument("--model", dest="path", type=Path, required=True)
    p.add_argument("--ciphertext", type=int, required=True)
    p.add_argument("--blend", type=_rational, default=None,
                   help="weight of the uniform belief mixed into the prior")

    p = sub.add_parser("reproduce", parents=[common],
                       help="rerun the embedded worked examples")
    p.add_argument("section", nargs="?", default="all", choices=(*SECTIONS, "all"))
    return parser


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    return RunConfig(**fields)


def execute(config: RunConfig) -> Report:
    c = config
    if c.command == "entropy":
        return entropy_report(read_joint(c.path), c.seed)
    if c.command == "check":
        return check_report(read_joint(c.path), c.seed)
    if c.command == "search":
        result = search_pointwise_increase(c.rows, c.cols, c.step, c.samples, c.seed)
        return search_report(result, c.seed)
    if c.command == "otp":
        prior, key = read_model_doc(c.path)
        return otp_report(build_model(prior, key), c.ciphertext, c.blend, c.seed)
    if c.command == "reproduce":
        return reproduce_examples(c.section, c.seed)
    raise ValueError(f"unknown command {c.command!r}")


def _fail(exc: Exception, status: int) -> int:
    line = json.dumps({"error": type(exc).__name__, "message": str(exc)})
    print(line, file=sys.stderr)
    return status


def run(config: RunConfig) -> int:
    try:
        text = execute(config).render(config.fmt)
    except ValidationError as exc:
        return _fail(exc, 1)
    except InfolabError as exc:
        return _fail(exc, 2)
    try:
        if config.out is None:
            sys.stdout.write(text)
        else:
            config.out.write_text(text, encoding="utf-8")
    except OSError as exc:
        return _fail(exc, 2)
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        config = config_from_args(argv)
    except SystemExit as exc:
        # argparse already printed usage; bad arguments count as parse errors
        return 2 if exc.code else 0
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
