"""
The compare subcommand: a catalog generator against its OEIS b-file.
"""
from rueppel_lab.cli.utils import comparison_record
from rueppel_lab.services.catalog import catalog_terms, get_entry
from rueppel_lab.services.oeis import FIXTURE_ONLY, MODES, compare as compare_bfile, fetch_bfile


def register(subparsers, parents):
    parser = subparsers.add_parser('compare', parents=parents,
                                   help='compare a catalog sequence with its b-file')
    parser.add_argument('seq_id', help='A-number, e.g. A088567')
    parser.add_argument('--mode', choices=MODES, default=FIXTURE_ONLY,
                        help='read the fixture only, or fetch and cache from OEIS')
    parser.add_argument('--shift', type=int, default=0,
                        help='compare local n with b-file n + shift')
    parser.add_argument('-n', type=int, default=64, help='number of local terms (default 64)')
    parser.set_defaults(handler=compare)


def compare(args):
    entry = get_entry(args.seq_id)
    report = compare_bfile(catalog_terms(entry.seq_id, args.n),
                           fetch_bfile(entry.seq_id, mode=args.mode), args.shift)
    return comparison_record('compare', {'seq_id': entry.seq_id, 'mode': args.mode,
                                         'shift': args.shift, 'n': args.n}, report)
