import argparse

from app.models.schemas import QueryReport
from app.services.recognition_service import recognize
from app.utils.profile_io import axis_names

from .common import EXIT_ANSWERED, EXIT_NEGATIVE, CommandResult, load_election


def handle_recognize(args: argparse.Namespace) -> CommandResult:
    election = load_election(args)
    axis = recognize(election)
    report = QueryReport(
        query="recognize",
        answer="pasp" if axis is not None else "not-pasp",
        axis=axis_names(election, axis),
    )
    return CommandResult(report=report, exit_code=EXIT_ANSWERED if axis is not None else EXIT_NEGATIVE)


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("recognize", parents=[parent], help="Find a party axis for the profile")
    parser.set_defaults(handler=handle_recognize)
