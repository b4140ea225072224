"""
OEIS b-file client. Every sequence in the catalog ships as a fixture, so the
network is only used when explicitly requested and never when
OEIS_OFFLINE is set.
"""
import fcntl
import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional

import requests

from rueppel_lab.config import Config
from rueppel_lab.exceptions import (EmptyOverlap,
                                    FixtureMissing,
                                    NetworkUnavailable,
                                    ParseError)
from rueppel_lab.services.catalog import get_entry
from rueppel_lab.services.series import Sequence
from rueppel_lab.utils import atomic_write, get_oeis_url

logger = logging.getLogger(__name__)

FIXTURE_ONLY = 'fixture-only'
NETWORK_WITH_CACHE = 'network-with-cache'
MODES = (FIXTURE_ONLY, NETWORK_WITH_CACHE)

SOURCE_FIXTURE = 'fixture'
SOURCE_NETWORK = 'network'

###########################
#        Utilities        #
###########################


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) pairs with strictly increasing indices."""

    seq_id: str
    entries: tuple
    source: str = SOURCE_FIXTURE

    def __post_init__(self):
        object.__setattr__(self, 'entries', tuple((int(i), int(v)) for i, v in self.entries))

    def __len__(self):
        return len(self.entries)

    def as_dict(self):
        return dict(self.entries)

    def derived(self, func):
        """Same indices with func applied to every value."""
        return BFile(self.seq_id, [(i, func(v)) for i, v in self.entries], self.source)

    def to_sequence(self):
        """Values of the leading run of consecutive indices."""
        if not self.entries:
            return Sequence(())
        start = self.entries[0][0]
        values = []
        for position, (index, value) in enumerate(self.entries):
            if index != start + position:
                break
            values.append(value)
        return Sequence(values, start)


@dataclass(frozen=True)
class ComparisonReport:
    """Termwise comparison of a local sequence against a b-file."""

    seq_id: str
    offset_shift: int
    first_index: int
    last_index: int
    compared: int
    first_mismatch: Optional[tuple] = None

    @property
    def matched(self):
        return self.first_mismatch is None

    def to_dict(self):
        return {
            'seq_id': self.seq_id,
            'offset_shift': self.offset_shift,
            'overlap': [self.first_index, self.last_index],
            'compared': self.compared,
            'matched': self.matched,
            'first_mismatch': list(self.first_mismatch) if self.first_mismatch else None,
        }


def parse_bfile(text, seq_id='', source=SOURCE_FIXTURE):
    """
    Parses "index value" lines, skipping blank lines and '#' comments.

    :param text:    b-file content
    :param seq_id:  A-number recorded on the result
    :param source:  Where the text came from
    :return:        A BFile
    :raises ParseError: with the 1-based physical line number of a bad line
    """
    entries = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(number, internal_details=line)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(number, internal_details=line)
        if entries and index <= entries[-1][0]:
            raise ParseError(number, internal_details='index %d is not increasing' % index)
        entries.append((index, value))
    return BFile(seq_id, entries, source)


def render_bfile(sequence, seq_id='', comments=()):
    """
    Renders a sequence in b-file format.

    :param sequence:    Sequence of integers
    :param seq_id:      A-number for the header comment
    :param comments:    Extra comment lines
    :return:            b-file text
    """
    lines = []
    if seq_id:
        lines.append('# %s' % seq_id)
    lines.extend('# %s' % comment for comment in comments)
    lines.extend('%d %d' % (index, value) for index, value in sequence.items())
    return '\n'.join(lines) + '\n'


def fixture_path(seq_id):
    return os.path.join(Config.FIXTURE_DIR, '%s.txt' % seq_id)


def cache_path(seq_id):
    return os.path.join(Config.OEIS_CACHE_DIR, '%s.txt' % seq_id)


@contextmanager
def cache_lock(seq_id):
    """Exclusive advisory lock on the cache entry of one A-number."""
    os.makedirs(Config.OEIS_CACHE_DIR, exist_ok=True)
    with open(cache_path(seq_id) + '.lock', 'w') as handle:
        fcntl.flock(handle, fcntl.LOCK_EX)
        try:
            yield
        finally:
            fcntl.flock(handle, fcntl.LOCK_UN)


def _read_fixture(seq_id):
    file_path = fixture_path(seq_id)
    if not os.path.exists(file_path):
        raise FixtureMissing(seq_id, internal_details=file_path)
    with open(file_path, encoding='ascii') as f:
        return parse_bfile(f.read(), seq_id, SOURCE_FIXTURE)


def _read_cache(seq_id):
    file_path = cache_path(seq_id)
    if not os.path.exists(file_path):
        return None
    try:
        with open(file_path, encoding='ascii') as f:
            bfile = parse_bfile(f.read(), seq_id, SOURCE_NETWORK)
    except (OSError, UnicodeDecodeError, ParseError) as e:
        logger.warning('Ignoring unreadable cache entry %s: %s', file_path, e)
        return None
    return bfile if len(bfile) else None


def _download(seq_id):
    url = get_oeis_url(seq_id)
    logger.info('Fetching %s', url)
    try:
        response = requests.request('GET', url, timeout=Config.OEIS_TIMEOUT)
    except Exception as e:
        raise NetworkUnavailable('Unable to reach OEIS for %s' % seq_id, internal_details=str(e))

    if response.status_code != 200:
        raise NetworkUnavailable('OEIS answered %d for %s' % (response.status_code, seq_id),
                                 internal_details=url)
    return response.text


###########################
#        Services         #
###########################


def fetch_bfile(seq_id, mode=FIXTURE_ONLY):
    """
    Loads the b-file of a catalog sequence.

    :param seq_id:  A-number of a catalog sequence
    :param mode:    'fixture-only' or 'network-with-cache'
    :return:        A BFile
    """
    seq_id = get_entry(seq_id).seq_id
    if mode not in MODES:
        raise ValueError('Unknown fetch mode %s' % mode)

    if mode == FIXTURE_ONLY:
        return _read_fixture(seq_id)
    if Config.OEIS_OFFLINE:
        logger.info('OEIS_OFFLINE is set, reading the %s fixture', seq_id)
        return _read_fixture(seq_id)

    cached = _read_cache(seq_id)
    if cached is not None:
        logger.debug('Cache hit for %s', seq_id)
        return cached

    with cache_lock(seq_id):
        cached = _read_cache(seq_id)
        if cached is not None:
            return cached
        text = _download(seq_id)
        bfile = parse_bfile(text, seq_id, SOURCE_NETWORK)
        atomic_write(cache_path(seq_id), text)
    logger.info('Cached %d entries of %s', len(bfile), seq_id)
    return bfile


def compare(local, bfile, offset_shift=0):
    """
    Compares local[n] with the b-file entry at index n + offset_shift.

    :param local:           Sequence with its own offset
    :param bfile:           BFile
    :param offset_shift:    Index shift applied to the local sequence
    :return:                ComparisonReport; indices are those of `local`
    """
    reference = bfile.as_dict()
    overlap = [n for n in local.indices() if n + offset_shift in reference]
    if not overlap:
        raise EmptyOverlap(internal_details='%s with shift %d' % (bfile.seq_id, offset_shift))

    first_mismatch = None
    for n in overlap:
        expected = reference[n + offset_shift]
        if local[n] != expected:
            first_mismatch = (n, expected, local[n])
            break
    report = ComparisonReport(bfile.seq_id, offset_shift, overlap[0], overlap[-1],
                              len(overlap), first_mismatch)
    logger.debug('Compared %s over %d terms: %s', bfile.seq_id, len(overlap),
                 'match' if report.matched else 'mismatch at %d' % first_mismatch[0])
    return report
