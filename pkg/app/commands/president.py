import argparse

from app.models.schemas import QueryReport
from app.services.president_service import necessary_president, possible_president, possible_president_excluding
from app.services.recognition_service import resolve_axis
from app.utils.profile_io import axis_names

from .common import EXIT_ANSWERED, EXIT_NEGATIVE, CommandResult, add_party_argument, load_election, party_from_args


def handle_possible(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    axis = resolve_axis(election)
    party = party_from_args(election, args.party)
    excluded = party_from_args(election, args.exclude)
    if excluded is None:
        witness = possible_president(election, party, axis)
    else:
        witness = possible_president_excluding(election, party, excluded, axis)
    report = QueryReport(
        query="possible",
        party=election.party_names[party],
        answer="yes" if witness is not None else "no",
        witness=None if witness is None else list(witness.scheme.names(election)),
        score=None if witness is None else witness.score,
        axis=axis_names(election, axis),
    )
    if excluded is not None:
        report.notes.append(f"{election.party_names[excluded]} must not win")
    return CommandResult(report=report, exit_code=EXIT_ANSWERED if witness is not None else EXIT_NEGATIVE)


def handle_necessary(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    axis = resolve_axis(election)
    party = party_from_args(election, args.party)
    answer = necessary_president(election, party, axis)
    report = QueryReport(
        query="necessary",
        party=election.party_names[party],
        answer="yes" if answer else "no",
        axis=axis_names(election, axis),
    )
    return CommandResult(report=report, exit_code=EXIT_ANSWERED if answer else EXIT_NEGATIVE)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    possible = subparsers.add_parser("possible", parents=[parent], help="Can the party win under some scheme?")
    add_party_argument(possible, required=True)
    possible.add_argument("--exclude", help="Party that must lose in the witness")
    possible.set_defaults(handler=handle_possible)

    necessary = subparsers.add_parser("necessary", parents=[parent], help="Does the party win under every scheme?")
    add_party_argument(necessary, required=True)
    necessary.set_defaults(handler=handle_necessary)
