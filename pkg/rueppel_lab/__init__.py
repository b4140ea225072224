"""
Parent package that wires the interface layer onto the services. The command
line is the only interface; if another one is added, create it here too.
"""


def create_cli():
    """
    Wires the subcommands together into one argument parser

    :return:        An argparse parser with every subcommand registered
    """
    from rueppel_lab.cli import create_parser
    return create_parser()
