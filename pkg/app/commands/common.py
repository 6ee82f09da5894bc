import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from pydantic import ValidationError

from app.models.election import Election, parse_party_reference
from app.models.schemas import QueryReport
from app.utils.config import MAX_SCHEMES
from app.utils.errors import (
    CapExceededError,
    CentristPreconditionError,
    ElectionValidationError,
    InvariantViolation,
    NotPaspError,
    UnknownFixtureError,
)
from app.utils.generators import FIXTURE_NAMES, load_fixture
from app.utils.logging_utils import logger
from app.utils.profile_io import FORMATS, TEXT, decode_profile, parse_profile, serialize_report

EXIT_ANSWERED = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3
EXIT_INVARIANT_VIOLATION = 4


@dataclass
class CommandResult:
    report: Optional[QueryReport] = None
    payload: Optional[str] = None
    exit_code: int = EXIT_ANSWERED


Handler = Callable[[argparse.Namespace], CommandResult]


def common_arguments() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    source = parent.add_mutually_exclusive_group()
    source.add_argument("--input", help="Profile file ('-' reads stdin)")
    source.add_argument("--fixture", choices=FIXTURE_NAMES, help="Use a built-in fixture instead of a file")
    parent.add_argument("--output", help="Write the result here instead of stdout")
    parent.add_argument("--format", choices=FORMATS, default=TEXT, dest="output_format")
    parent.add_argument("--max-schemes", type=int, default=MAX_SCHEMES, help="Cap for exhaustive scheme searches")
    parent.add_argument("--verbose", action="store_true", help="Log solver steps")
    return parent


def add_party_argument(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument("--party", required=required, help="Party name or zero-based index")


def party_from_args(election: Election, raw: Optional[str]) -> Optional[int]:
    if raw is None:
        return None
    reference = int(raw) if raw.isdigit() and raw not in election.party_names else raw
    try:
        return parse_party_reference(election, reference)
    except KeyError as exc:
        raise ElectionValidationError(str(exc.args[0])) from exc


def load_election(args: argparse.Namespace) -> Election:
    if getattr(args, "fixture", None):
        return load_fixture(args.fixture)
    source = getattr(args, "input", None)
    if not source:
        raise ElectionValidationError("either --input or --fixture is required")
    if source == "-":
        stream = getattr(sys.stdin, "buffer", None)
        text = decode_profile(stream.read()) if stream is not None else sys.stdin.read()
        return parse_profile(text)
    path = Path(source)
    if not path.exists():
        raise ElectionValidationError(f"profile file not found: {source}")
    return parse_profile(decode_profile(path.read_bytes()))


def emit(args: argparse.Namespace, result: CommandResult) -> None:
    if result.payload is not None:
        text = result.payload
    elif result.report is not None:
        text = serialize_report(result.report, args.output_format)
    else:
        return
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run_command(args: argparse.Namespace) -> int:
    if getattr(args, "verbose", False):
        logger.setLevel(logging.DEBUG)
    try:
        result = args.handler(args)
    except CapExceededError as exc:
        logger.warning("Cap exceeded: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except InvariantViolation as exc:
        logger.error("Invariant violation: %s", exc)
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT_VIOLATION
    except (
        ElectionValidationError,
        NotPaspError,
        UnknownFixtureError,
        CentristPreconditionError,
        ValidationError,
        json.JSONDecodeError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    emit(args, result)
    return result.exit_code
