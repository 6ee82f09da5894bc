import argparse
from typing import Optional, Sequence

from dotenv import load_dotenv

from .commands import register_commands, run_command

load_dotenv()


def create_app() -> argparse.ArgumentParser:
    """Application factory that wires every subcommand onto one parser."""
    parser = argparse.ArgumentParser(
        prog="nomination",
        description="Strategic candidate nomination under Plurality for party-aligned single-peaked profiles.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_commands(subparsers)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = create_app().parse_args(argv)
    return run_command(args)


__all__ = ["create_app", "run"]
