"""The ``res`` command line tool.

Every subcommand reads one structure document, optionally overrides its
options, and answers one query::

    res check hominids.res
    res condition example1.res --given "!e1 & !e2"
    res compare example1.res --given "!e1 & !e2" "{Al1}" "{Al2, Al3}"
    res rank hominids.res --given "e1 & e12 & !e2 & !e23 & !e13"
    res plausible example1.res --given "e1 & !e2" Al1
    res diagram example1.res --given "!e1 & !e2" --format dot
    res explain example1.res --given "!e1 & !e2" Al2 Al3

Exit codes: 0 on success, 1 on usage, parse or declaration errors, 2 when
``check`` finds consistency violations.
"""

from __future__ import annotations

import argparse
import dataclasses
import re
import sys

from . import render
from .conditioning import condition
from .decision import candidate_sentences, explain, is_plausible, hasse, rank
from .dsl import StructureDocument, parse_document
from .errors import ParseError, ResError
from .order import build_closure, check_consistency
from .semantics import (
    ConclusionFrame,
    ConclusionSentence,
    build_sentence,
    conclusion_of,
    parse_conclusion,
)
from .structure import OPTION_FIELDS, parse_option_value

_BARE_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

_CONCLUSION_HELP = (
    "a conclusion literal such as '{Al1, Al2}' or '!{Al3}'; "
    "a bare alternative name means its singleton"
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="res",
        description="Query evidence structures: order arguments by relative "
        "strength, condition on observations, and compare conclusions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def subcommand(name, help_text, *, given=True, formats=("text", "json")):
        sub = commands.add_parser(name, help=help_text, description=help_text)
        sub.add_argument("file", help="path to a structure document (.res)")
        if given:
            sub.add_argument(
                "--given",
                required=True,
                metavar="FORMULA",
                help="the observed evidence, a formula over the declared atoms",
            )
        sub.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="OPTION=VALUE",
            help="override a document option (repeatable)",
        )
        sub.add_argument("--format", choices=formats, default="text")
        return sub

    subcommand(
        "check",
        "validate a document and audit its declared relations for consistency",
        given=False,
    )
    subcommand("condition", "list the arguments the observed evidence triggers")

    sub = subcommand("compare", "compare two conclusions under the evidence")
    sub.add_argument("left", help=_CONCLUSION_HELP)
    sub.add_argument("right", help=_CONCLUSION_HELP)

    sub = subcommand(
        "plausible",
        "is the conclusion strictly more believable than its complement?",
    )
    sub.add_argument("sentence", help=_CONCLUSION_HELP)

    for name, help_text, formats in (
        ("rank", "pairwise verdicts and maximal elements over candidate "
         "conclusions", ("text", "json")),
        ("diagram", "the believability ordering as equivalence classes and "
         "covering edges", ("text", "json", "dot")),
    ):
        sub = subcommand(name, help_text, formats=formats)
        sub.add_argument(
            "--candidates",
            choices=("singletons", "singletons+complements", "all"),
            default="singletons",
            help="which candidate conclusions to rank when none are listed",
        )
        sub.add_argument(
            "operands", nargs="*", metavar="conclusion", help=_CONCLUSION_HELP
        )

    sub = subcommand(
        "explain",
        "compare two conclusions and show the argument matching behind "
        "the verdict",
    )
    sub.add_argument("left", help=_CONCLUSION_HELP)
    sub.add_argument("right", help=_CONCLUSION_HELP)
    return parser


def _conclusion_operand(frame: ConclusionFrame, text: str) -> ConclusionSentence:
    stripped = text.strip()
    if _BARE_NAME.match(stripped):
        return conclusion_of(frame, [stripped])
    return parse_conclusion(frame, stripped)


def _apply_overrides(document: StructureDocument, overrides: list[str]) -> None:
    values = {}
    for item in overrides:
        name, separator, raw = item.partition("=")
        name = name.strip()
        if not separator or name not in OPTION_FIELDS:
            known = ", ".join(sorted(OPTION_FIELDS))
            raise ResError(
                f"bad --set {item!r}: expected OPTION=VALUE with OPTION "
                f"one of {known}"
            )
        values[name] = parse_option_value(name, raw.strip())
    if values:
        document.options = dataclasses.replace(document.options, **values)


def _load(args) -> "StructureDocument":
    with open(args.file, encoding="utf-8") as handle:
        text = handle.read()
    document = parse_document(text)
    _apply_overrides(document, args.overrides)
    return document


def _emit(args, text_output: str | None, payload: dict | None) -> None:
    if args.format == "json":
        print(render.to_json(payload))
    else:
        print(text_output)


def _run(args) -> int:
    document = _load(args)
    structure = document.to_structure()

    if args.command == "check":
        validation = structure.validate()
        closure = build_closure(structure)
        consistency = check_consistency(closure, structure)
        _emit(
            args,
            render.check_text(structure, validation, consistency),
            render.check_json(structure, validation, consistency),
        )
        return 0 if consistency.ok else 2

    closure = build_closure(structure)
    given = build_sentence(structure.evidence_frame, args.given)
    conditioned = condition(structure, closure, given)

    if args.command == "condition":
        _emit(
            args,
            render.condition_text(conditioned),
            render.condition_json(conditioned),
        )
        return 0

    frame = structure.conclusion_frame
    if args.command in ("compare", "explain"):
        left = _conclusion_operand(frame, args.left)
        right = _conclusion_operand(frame, args.right)
        trace = explain(conditioned, left, right)
        if args.command == "compare":
            _emit(
                args,
                render.compare_text(trace),
                render.compare_json(conditioned, trace),
            )
        else:
            _emit(
                args,
                render.explain_text(conditioned, trace),
                render.explain_json(conditioned, trace),
            )
        return 0

    if args.command == "plausible":
        sentence = _conclusion_operand(frame, args.sentence)
        result = is_plausible(conditioned, sentence)
        _emit(
            args,
            render.plausible_text(sentence, result),
            render.plausible_json(conditioned, sentence, result),
        )
        return 0

    # rank and diagram share their candidate handling
    if args.operands:
        candidates = [_conclusion_operand(frame, item) for item in args.operands]
    else:
        candidates = candidate_sentences(frame, args.candidates)

    if args.command == "rank":
        result = rank(conditioned, candidates)
        _emit(
            args,
            render.rank_text(conditioned, result),
            render.rank_json(conditioned, result),
        )
        return 0

    diagram = hasse(conditioned, candidates)
    if args.format == "dot":
        print(render.diagram_dot(diagram))
    else:
        _emit(
            args,
            render.diagram_text(conditioned, diagram),
            render.diagram_json(conditioned, diagram),
        )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        # parse_known_args so conclusion operands may follow options such
        # as --given; argparse alone refuses positionals after optionals.
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exit_request:
        # argparse exits with 2 on bad usage; keep 2 for consistency
        # violations and report usage problems as 1.
        return 0 if exit_request.code in (0, None) else 1
    if extra:
        if hasattr(args, "operands") and not any(
            item.startswith("-") for item in extra
        ):
            args.operands = [*args.operands, *extra]
        else:
            print(
                f"res: error: unrecognized arguments: {' '.join(extra)}",
                file=sys.stderr,
            )
            return 1
    try:
        return _run(args)
    except ParseError as err:
        for located in err.errors:
            print(f"{args.file}:{located}", file=sys.stderr)
        return 1
    except ResError as err:
        print(f"res: error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"res: error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
