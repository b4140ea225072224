"""
Regenerates the b-file fixtures from the catalog. Printed reference prefixes
are written as they are; every other line comes from the entry's generator,
and the header comments record which lines came from where.
"""
import argparse
import logging

from rueppel_lab.services.catalog import CATALOG, catalog_terms, get_entry
from rueppel_lab.services.oeis import fixture_path, render_bfile
from rueppel_lab.services.series import Sequence
from rueppel_lab.utils import atomic_write

logger = logging.getLogger('refresh_fixtures')

DEFAULT_TERMS = 100
# J-fraction parameters over the rationals get slow past this
TERMS = {'A110036': 64}


def _ranges(indices):
    """'0, 18-99' style description of a sorted index list."""
    spans = []
    for n in indices:
        if spans and n == spans[-1][1] + 1:
            spans[-1][1] = n
        else:
            spans.append([n, n])
    return ', '.join('%d' % a if a == b else '%d-%d' % (a, b) for a, b in spans)


def fixture_text(seq_id, N=None):
    """
    b-file text of a catalog sequence with provenance comments.

    :param seq_id:  A-number
    :param N:       Number of terms from the entry's offset
    :return:        The fixture content
    """
    entry = get_entry(seq_id)
    N = N or TERMS.get(entry.seq_id, DEFAULT_TERMS)
    terms = catalog_terms(entry.seq_id, N)
    printed = entry.printed_sequence()
    values = dict(terms.items())
    values.update(printed.items())

    indices = sorted(values)
    reference = [n for n in indices if n in set(printed.indices())]
    generated = [n for n in indices if n not in set(reference)]
    comments = ['%s %s' % (entry.seq_id, entry.name), 'offset %d' % entry.offset]
    if reference:
        comments.append('indices %s: reference prefix' % _ranges(reference))
    if generated:
        comments.append('indices %s: %s generator' % (_ranges(generated), entry.generator))
    return render_bfile(Sequence([values[n] for n in indices], indices[0]), comments=comments)


def refresh(seq_ids):
    for seq_id in seq_ids:
        entry = get_entry(seq_id)
        atomic_write(fixture_path(entry.seq_id), fixture_text(entry.seq_id))
        logger.info('Wrote %s', fixture_path(entry.seq_id))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument('seq_ids', nargs='*', help='A-numbers (default: the whole catalog)')
    args = parser.parse_args()
    logging.basicConfig(level='INFO')
    refresh(args.seq_ids or list(CATALOG))
