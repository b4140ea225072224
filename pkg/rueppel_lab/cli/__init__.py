"""
Initializer for the command line interface. This creates the argument parser,
registers every subcommand, applies configuration and logging, and converts
raised exceptions into exit codes and structured error payloads.
"""
import argparse
import json
import logging
import os
import sys

from rueppel_lab.cli.utils import FORMATS, PLAIN, compose_error, render

logger = logging.getLogger(__name__)

EXIT_OK = 0
RINGS = ('int', 'rat', 'poly-bc')
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def _global_options(parser, defaults):
    from rueppel_lab.services.verify import PROFILES

    parser.add_argument('--format', choices=FORMATS, default=defaults.get('format'),
                        help='output format')
    parser.add_argument('--ring', choices=RINGS, default=defaults.get('ring'),
                        help='coefficient ring of series results')
    parser.add_argument('--depth-profile', choices=PROFILES,
                        default=defaults.get('depth_profile'),
                        help='depths used by verify when -d is not given')
    parser.add_argument('--config', default=defaults.get('config'),
                        help='configuration file (default ./rueppel-lab.toml when present)')
    parser.add_argument('--jobs', type=int, default=defaults.get('jobs'),
                        help='worker processes for determinants and checks')
    parser.add_argument('-v', '--verbose', action='count', default=defaults.get('verbose'),
                        help='log at INFO (-v) or DEBUG (-vv)')


def create_parser():
    """
    Creates the parser with its subcommands. Global options are accepted both
    before and after the subcommand name.

    :return:        An argparse.ArgumentParser
    """
    from rueppel_lab.cli.commands import COMMANDS
    from rueppel_lab.services.verify import DEFAULT

    parser = argparse.ArgumentParser(
        prog='rueppel-lab',
        description='Hankel transforms, continued fractions and Riordan arrays '
                    'of Rueppel- and Catalan-type sequences.')
    _global_options(parser, {'format': PLAIN, 'depth_profile': DEFAULT, 'verbose': 0})

    # repeated on every subcommand without defaults, so they never override the above
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    _global_options(common, dict.fromkeys(('format', 'ring', 'depth_profile', 'config',
                                           'jobs', 'verbose'), argparse.SUPPRESS))

    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def setup_logging(verbosity=0):
    """
    Sends log records to stderr at Config.LOG_LEVEL, raised by -v flags.
    """
    from rueppel_lab.config import Config

    level = {0: Config.LOG_LEVEL, 1: 'INFO'}.get(verbosity, 'DEBUG')
    logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)


def configure(args):
    """
    Applies the configuration file, then the command line flags, onto Config.
    """
    from rueppel_lab.config import Config
    from rueppel_lab.utils import load_config_file

    config_file = args.config
    if config_file is None and os.path.exists(Config.CONFIG_FILE):
        config_file = Config.CONFIG_FILE
    if config_file is not None:
        load_config_file(config_file)
    if args.jobs is not None:
        Config.JOBS = args.jobs
    setup_logging(args.verbose)


def main(argv=None):
    """
    Parses argv, runs one subcommand and prints its output record.

    :param argv:    Arguments without the program name (defaults to sys.argv[1:])
    :return:        Exit code: 0 success, 1 computation error, 2 usage error,
                    3 failed verification
    """
    from rueppel_lab import create_cli
    from rueppel_lab.exceptions import LabException, VerificationFailure

    parser = create_cli()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        configure(args)
        record = args.handler(args)
        print(render(record, args.format))
        return EXIT_OK
    except VerificationFailure as e:
        logger.error(e)
        if e.report is not None:
            try:
                print(render(e.report, args.format))
            except LabException:
                print(render(e.report, PLAIN))
        print(json.dumps(compose_error(e, e)), file=sys.stderr)
        return e.exit_code
    except Exception as e:
        if not isinstance(e, LabException):
            exc = LabException('Internal error', internal_details=str(e))
            logger.exception(e)
        else:
            exc = e
        logger.error(exc)
        print(json.dumps(compose_error(exc, e)), file=sys.stderr)
        return exc.exit_code
