import argparse

from app.models.schemas import QueryReport
from app.services.equilibrium_service import centrist_equilibrium, equilibrium_exists, equilibrium_president
from app.services.recognition_service import resolve_axis
from app.utils.election import reduced_scores
from app.utils.profile_io import axis_names, score_table_rows

from .common import EXIT_ANSWERED, EXIT_NEGATIVE, CommandResult, add_party_argument, load_election, party_from_args


def handle_equilibrium(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    if args.centrist_axis:
        scheme = centrist_equilibrium(election, args.centrist_axis.split())
        scores = reduced_scores(election, scheme)
        report = QueryReport(
            query="centrist",
            answer="found",
            witness=list(scheme.names(election)),
            score=scores.maximum,
            score_table=score_table_rows(election),
        )
        return CommandResult(report=report)

    axis = resolve_axis(election)
    party = party_from_args(election, args.party)
    if party is None:
        witness = equilibrium_exists(election, axis)
    else:
        witness = equilibrium_president(election, party, axis)
    report = QueryReport(
        query="equilibrium",
        answer="found" if witness is not None else "none",
        party=None if party is None else election.party_names[party],
        witness=None if witness is None else list(witness.scheme.names(election)),
        score=None if witness is None else witness.score,
        axis=axis_names(election, axis),
        score_table=score_table_rows(election),
    )
    if witness is not None and party is None:
        report.notes.append(f"winning party {election.party_names[witness.party]}")
    return CommandResult(report=report, exit_code=EXIT_ANSWERED if witness is not None else EXIT_NEGATIVE)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("equilibrium", parents=[parent], help="Find a pure Nash equilibrium")
    add_party_argument(parser)
    parser.add_argument(
        "--centrist-axis",
        help="Space separated candidate axis; builds the centrist equilibrium of a single-peaked profile",
    )
    parser.set_defaults(handler=handle_equilibrium)
