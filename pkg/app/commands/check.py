import argparse

from app.models.schemas import QueryReport
from app.services.check_service import cross_validate
from app.services.recognition_service import recognize
from app.utils.profile_io import axis_names

from .common import (
    EXIT_ANSWERED,
    EXIT_INVARIANT_VIOLATION,
    CommandResult,
    add_party_argument,
    load_election,
    party_from_args,
)


def handle_check(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    if not args.cross_validate:
        axis = recognize(election)
        report = QueryReport(
            query="check",
            answer="valid",
            axis=axis_names(election, axis),
            notes=[f"{election.n_candidates} candidates, {election.n_parties} parties, {election.n_voters} voters"],
        )
        return CommandResult(report=report)

    party = party_from_args(election, args.party)
    checks = cross_validate(election, None if party is None else [party], args.max_schemes)
    agreed = all(check.agrees for check in checks)
    report = QueryReport(
        query="check",
        answer="agree" if agreed else "disagree",
        oracle="agrees" if agreed else "disagrees",
        notes=[check.describe() for check in checks],
    )
    return CommandResult(report=report, exit_code=EXIT_ANSWERED if agreed else EXIT_INVARIANT_VIOLATION)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("check", parents=[parent], help="Validate a profile or cross-check solvers")
    parser.add_argument("--cross-validate", action="store_true", help="Compare every solver with its oracle")
    add_party_argument(parser)
    parser.set_defaults(handler=handle_check)
