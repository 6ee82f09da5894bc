import argparse

from app.models.schemas import QueryReport
from app.services.oracle_service import (
    brute_equilibria,
    brute_equilibrium_president,
    brute_necessary_president,
    brute_possible_president,
    brute_recognize_pasp,
)
from app.utils.errors import ElectionValidationError
from app.utils.profile_io import axis_names

from .common import EXIT_ANSWERED, EXIT_NEGATIVE, CommandResult, add_party_argument, load_election, party_from_args

QUERIES = ("recognize", "equilibrium", "possible", "necessary")


def handle_brute(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    party = party_from_args(election, args.party)
    query = args.query
    if query == "recognize":
        axis = brute_recognize_pasp(election)
        report = QueryReport(
            query="brute-recognize",
            answer="pasp" if axis is not None else "not-pasp",
            axis=axis_names(election, axis),
        )
        return CommandResult(report=report, exit_code=EXIT_ANSWERED if axis is not None else EXIT_NEGATIVE)

    if query == "equilibrium" and party is None:
        equilibria = brute_equilibria(election, args.max_schemes)
        report = QueryReport(
            query="brute-equilibrium",
            answer="found" if equilibria else "none",
            witness=list(equilibria[0].names(election)) if equilibria else None,
        )
        report.notes.extend(" ".join(scheme.names(election)) for scheme in equilibria)
        return CommandResult(report=report, exit_code=EXIT_ANSWERED if equilibria else EXIT_NEGATIVE)

    if party is None:
        raise ElectionValidationError(f"brute {query} needs --party")
    name = election.party_names[party]
    if query == "necessary":
        answer = brute_necessary_president(election, party, args.max_schemes)
        report = QueryReport(query="brute-necessary", party=name, answer="yes" if answer else "no")
        return CommandResult(report=report, exit_code=EXIT_ANSWERED if answer else EXIT_NEGATIVE)

    if query == "possible":
        scheme = brute_possible_president(election, party, args.max_schemes)
        positive = "yes"
    else:
        scheme = brute_equilibrium_president(election, party, args.max_schemes)
        positive = "found"
    report = QueryReport(
        query=f"brute-{query}",
        party=name,
        answer=positive if scheme is not None else ("no" if query == "possible" else "none"),
        witness=None if scheme is None else list(scheme.names(election)),
    )
    return CommandResult(report=report, exit_code=EXIT_ANSWERED if scheme is not None else EXIT_NEGATIVE)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("brute", parents=[parent], help="Exhaustive reference answers")
    parser.add_argument("query", choices=QUERIES)
    add_party_argument(parser)
    parser.set_defaults(handler=handle_brute)
