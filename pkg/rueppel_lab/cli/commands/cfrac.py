"""
The cfrac subcommand: S- or J-fraction parameters of an expression.
"""
from rueppel_lab.cli.expressions import parse_gf
from rueppel_lab.cli.utils import apply_ring, fraction_record
from rueppel_lab.exceptions import UsageException
from rueppel_lab.services.cfrac import jacobi_expand, required_coefficients, stieltjes_expand


def register(subparsers, parents):
    parser = subparsers.add_parser('cfrac', parents=parents,
                                   help='continued-fraction parameters')
    parser.add_argument('expression', help="e.g. 'r' or '1 - x*c'")
    parser.add_argument('--kind', choices=('s', 'j'), default='s',
                        help='Stieltjes (s) or Jacobi (j) fraction')
    parser.add_argument('-d', '--depth', type=int, default=10, help='number of parameters')
    parser.add_argument('--strict', action='store_true',
                        help='fail on a finite J-fraction instead of reporting it')
    parser.set_defaults(handler=cfrac)


def cfrac(args):
    """
    Expands the expression into a continued fraction of the requested depth.

    :return: cfrac record with a0, the alphas and (for J-fractions) the betas
    """
    if args.depth < 0:
        raise UsageException('Depth must be non-negative')
    series = apply_ring(parse_gf(args.expression, required_coefficients(args.depth)),
                        args.ring)
    if args.kind == 's':
        fraction = stieltjes_expand(series, args.depth)
    else:
        fraction = jacobi_expand(series, args.depth, strict=args.strict)
    return fraction_record('cfrac', {'expression': args.expression, 'kind': args.kind,
                                     'depth': args.depth}, fraction, args.kind)
