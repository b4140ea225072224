"""
The catalog subcommand: terms of a catalog sequence.
"""
from rueppel_lab.cli.utils import sequence_record
from rueppel_lab.services.catalog import catalog_terms, get_entry


def register(subparsers, parents):
    parser = subparsers.add_parser('catalog', parents=parents, help='catalog sequences')
    parser.add_argument('seq_id', help='A-number, e.g. A005811')
    parser.add_argument('-n', type=int, default=32, help='number of terms (default 32)')
    parser.set_defaults(handler=catalog)


def catalog(args):
    entry = get_entry(args.seq_id)
    return sequence_record('catalog', {'seq_id': entry.seq_id, 'name': entry.name, 'n': args.n},
                           catalog_terms(entry.seq_id, args.n))
