"""
The hankel subcommand: Hankel transform of an expression or a catalog sequence.
"""
from rueppel_lab.cli.expressions import parse_gf
from rueppel_lab.cli.utils import apply_ring, sequence_record
from rueppel_lab.config import Config
from rueppel_lab.exceptions import UsageException
from rueppel_lab.services.catalog import catalog_terms
from rueppel_lab.services.hankel import hankel_transform
from rueppel_lab.utils import A_NUMBER


def register(subparsers, parents):
    parser = subparsers.add_parser('hankel', parents=parents,
                                   help='Hankel transform of a sequence')
    parser.add_argument('source', help='generating-function expression or A-number')
    parser.add_argument('-n', type=int, default=10, help='largest order (default 10)')
    parser.add_argument('--shift', type=int, default=0,
                        help='drop the first k terms before transforming')
    parser.set_defaults(handler=hankel)


def _terms(source, count, ring):
    if A_NUMBER.match(source.upper()):
        return list(catalog_terms(source, count))
    return list(apply_ring(parse_gf(source, count), ring))


def hankel(args):
    """
    Computes h_0..h_n of the source sequence, after dropping --shift terms.

    :return: sequence record of the determinants
    """
    if args.n < 0 or args.shift < 0:
        raise UsageException('-n and --shift must be non-negative')
    terms = _terms(args.source, 2 * args.n + 1 + args.shift, args.ring)[args.shift:]
    transform = hankel_transform(terms, n_max=args.n, jobs=Config.JOBS)
    parameters = {'source': args.source, 'n': args.n, 'shift': args.shift}
    if A_NUMBER.match(args.source.upper()):
        parameters['seq_id'] = args.source.upper()
    return sequence_record('hankel', parameters, transform.values)
