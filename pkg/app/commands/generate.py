import argparse
import json
from pathlib import Path
from typing import List

from app.models.schemas import EuclideanSpec
from app.utils.errors import ElectionValidationError
from app.utils.generators import euclidean_election, load_fixture, random_pasp, random_profile, random_sp_pasp
from app.utils.profile_io import serialize_profile

from .common import CommandResult

KINDS = ("pasp", "sp-pasp", "euclidean", "fixture", "random")


def _sizes(raw: str) -> List[int]:
    try:
        sizes = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise ElectionValidationError(f"party sizes must look like '2,2,1', got '{raw}'") from exc
    if not sizes:
        raise ElectionValidationError("at least one party size is required")
    return sizes


def handle_generate(args: argparse.Namespace) -> CommandResult:
    kind = args.kind
    if kind == "fixture":
        if not args.name:
            raise ElectionValidationError("generate fixture needs --name")
        return CommandResult(payload=serialize_profile(load_fixture(args.name)))

    if kind == "euclidean":
        if not args.spec:
            raise ElectionValidationError("generate euclidean needs --spec FILE")
        raw = json.loads(Path(args.spec).read_text(encoding="utf-8"))
        election = euclidean_election(EuclideanSpec.model_validate(raw))
        return CommandResult(payload=serialize_profile(election))

    sizes = _sizes(args.sizes)
    if kind == "pasp":
        election, axis = random_pasp(args.seed, sizes, args.voters)
        header = f"# party axis: {' '.join(axis.names(election))}\n"
    elif kind == "sp-pasp":
        election, candidate_axis = random_sp_pasp(args.seed, sizes, args.voters)
        header = f"# candidate axis: {' '.join(election.candidates[c] for c in candidate_axis)}\n"
    else:
        election = random_profile(args.seed, sizes, args.voters)
        header = ""
    return CommandResult(payload=header + serialize_profile(election))


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("generate", parents=[parent], help="Write a generated or built-in profile")
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--sizes", default="2,2,2", help="Comma separated party sizes")
    parser.add_argument("--voters", type=int, default=5)
    parser.add_argument("--name", help="Fixture name for 'generate fixture'")
    parser.add_argument("--spec", help="JSON Euclidean specification for 'generate euclidean'")
    parser.set_defaults(handler=handle_generate)
