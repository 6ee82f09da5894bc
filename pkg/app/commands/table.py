import argparse

from app.models.schemas import QueryReport
from app.utils.election import scheme_count
from app.utils.errors import CapExceededError
from app.utils.profile_io import score_table_rows

from .common import CommandResult, load_election


def handle_table(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    total = scheme_count(election)
    if total > args.max_schemes:
        raise CapExceededError(f"{total} nomination schemes exceed the cap of {args.max_schemes}")
    rows = score_table_rows(election, limit=args.max_schemes)
    report = QueryReport(query="table", answer=str(total), score_table=rows)
    return CommandResult(report=report)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("table", parents=[parent], help="Scores and winners of every scheme")
    parser.set_defaults(handler=handle_table)
