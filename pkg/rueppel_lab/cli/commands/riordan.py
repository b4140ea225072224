"""
The riordan subcommand: matrix of a Riordan array, or its action on a series.
"""
from rueppel_lab.cli.expressions import parse_gf
from rueppel_lab.cli.utils import apply_ring, check_null_input, matrix_record, sequence_record
from rueppel_lab.services.riordan import riordan_apply, riordan_build, strip_first_row


def register(subparsers, parents):
    parser = subparsers.add_parser('riordan', parents=parents, help='Riordan arrays')
    parser.add_argument('--g', dest='g', help='g(x), with g(0) != 0')
    parser.add_argument('--f', dest='f', help='f(x), with f(0) = 0')
    parser.add_argument('-n', type=int, default=8, help='matrix order (default 8)')
    parser.add_argument('--strip-first-row', action='store_true',
                        help='drop row 0 (build n+1 rows first)')
    parser.add_argument('--apply', dest='h', default=None,
                        help='print (g, f) applied to this series instead of the matrix')
    parser.set_defaults(handler=riordan)


def riordan(args):
    """
    Builds the n x n matrix of (g, f), or g h(f) to n terms with --apply. The
    series are coerced into the --ring ring first.

    :return: matrix record, or sequence record with --apply
    """
    check_null_input((args.g, 'g series (--g)'), (args.f, 'f series (--f)'))
    parameters = {'g': args.g, 'f': args.f, 'n': args.n}
    N = args.n + 1 if args.strip_first_row else args.n
    g = apply_ring(parse_gf(args.g, N), args.ring)
    f = apply_ring(parse_gf(args.f, N), args.ring)
    if args.h is not None:
        parameters['apply'] = args.h
        h = apply_ring(parse_gf(args.h, N), args.ring)
        return sequence_record('riordan', parameters, riordan_apply(g, f, h).to_sequence())
    matrix = riordan_build(g, f, N)
    if args.strip_first_row:
        parameters['strip_first_row'] = True
        matrix = strip_first_row(matrix)
    return matrix_record('riordan', parameters, matrix)
