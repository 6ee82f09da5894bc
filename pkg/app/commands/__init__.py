from . import brute, check, equilibrium, generate, president, recognize, table
from .common import CommandResult, common_arguments, run_command


def register_commands(subparsers) -> None:
    """Attach every subcommand to the CLI parser."""
    parent = common_arguments()
    recognize.register(subparsers, parent)
    equilibrium.register(subparsers, parent)
    president.register(subparsers, parent)
    brute.register(subparsers, parent)
    generate.register(subparsers, parent)
    check.register(subparsers, parent)
    table.register(subparsers, parent)


__all__ = ["register_commands", "run_command", "CommandResult"]
