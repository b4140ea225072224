"""
The expand subcommand: coefficients of a generating-function expression.
"""
from rueppel_lab.cli.expressions import parse_gf
from rueppel_lab.cli.utils import apply_ring, check_null_input, sequence_record
from rueppel_lab.config import Config


def register(subparsers, parents):
    parser = subparsers.add_parser('expand', parents=parents,
                                   help='expand a generating function')
    parser.add_argument('expression', help="e.g. '1 - x + x^2*r(x^2)'")
    parser.add_argument('-n', type=int, default=None,
                        help='number of coefficients (default SERIES_ORDER)')
    parser.set_defaults(handler=expand)


def expand(args):
    """
    Expands the expression to n coefficients.

    :return: sequence record with the coefficients from index 0
    """
    check_null_input((args.expression, 'generating function'))
    N = Config.SERIES_ORDER if args.n is None else args.n
    series = apply_ring(parse_gf(args.expression, N), args.ring)
    return sequence_record('expand', {'expression': args.expression, 'n': N},
                           series.to_sequence())
