"""
Named integer sequences. Each entry has a primary generator and, where one
exists, an independent second derivation used as an oracle, together with
the reference prefix its values are known to start with.
"""
import logging
from collections import OrderedDict, namedtuple
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Optional

from rueppel_lab.exceptions import LabException, UnknownSequence
from rueppel_lab.services.cfrac import jacobi_expand
from rueppel_lab.services.series import (Sequence,
                                         catalan_series,
                                         geometric_series,
                                         motzkin_series,
                                         rueppel_series,
                                         x_series)

logger = logging.getLogger(__name__)

DIRECT_RULE = 'direct-rule'
GF_DERIVED = 'gf-derived'
RELATION_DERIVED = 'relation-derived'

BinaryRuns = namedtuple('BinaryRuns', ['total_runs', 'runs_of_ones', 'digit_alternations'])
JosephusPipeline = namedtuple('JosephusPipeline', ['marked', 'partial1', 'doubled', 'partial2'])


###########################
#     Digit utilities     #
###########################


def binary_runs(n):
    """
    Run statistics of the binary expansion of n.

    :param n:   Non-negative integer (0 has no digits)
    :return:    BinaryRuns(total_runs, runs_of_ones, digit_alternations)
    """
    if n < 0:
        raise ValueError('binary_runs needs n >= 0')
    if n == 0:
        return BinaryRuns(0, 0, 0)
    digits = bin(n)[2:]
    alternations = sum(1 for a, b in zip(digits, digits[1:]) if a != b)
    ones = sum(1 for i, d in enumerate(digits) if d == '1' and (i == 0 or digits[i - 1] == '0'))
    return BinaryRuns(alternations + 1, ones, alternations)


def paperfold(n):
    """
    Regular paper-folding sequence at offset 0: 1 iff the odd part of n+1 is 1 mod 4.
    """
    m = n + 1
    while m % 2 == 0:
        m //= 2
    return 1 if m % 4 == 1 else 0


def _floor_log2(n):
    return n.bit_length() - 1


def josephus_closed_form(n):
    """3 + 2(n - 2^floor(log2(n+1))), indexed from the first printed term."""
    return 3 + 2 * (n - 2 ** _floor_log2(n + 1))


def a062050_closed_form(n):
    """2 + n - 2^floor(log2(n+1)), indexed from the first printed term."""
    return 2 + n - 2 ** _floor_log2(n + 1)


def calibrate_index_shift(printed, formula, candidates=(0, 1, -1, 2, -2, 3, -3)):
    """
    Finds the shift s with formula(k + s) == printed[k] for every printed k
    where k + s >= 0.

    :param printed:     Reference values indexed from 0
    :param formula:     Function of a non-negative index
    :param candidates:  Shifts to try, in order
    :return:            The first matching shift, or None
    """
    printed = list(printed)
    for shift in candidates:
        compared = [k for k in range(len(printed)) if k + shift >= 0]
        if len(compared) < 2:
            continue
        if all(formula(k + shift) == printed[k] for k in compared):
            logger.debug('Calibrated index shift %d', shift)
            return shift
    return None


###########################
#       Generators        #
###########################


def _series_terms(s, N):
    return list(s.coefficients[:N])


def _catalan(N):
    return _series_terms(catalan_series(N), N)


def _catalan_binomial(N):
    return [comb(2 * n, n) // (n + 1) for n in range(N)]


def _runs(N):
    return [binary_runs(n).total_runs for n in range(N)]


def _runs_recurrence(N):
    a = [0]
    for n in range(1, N):
        half = a[n // 2]
        if n % 2 == 0:
            a.append(half + (1 if (n // 2) % 2 else 0))
        else:
            a.append(half + (0 if (n // 2) % 2 else 1))
    return a[:N]


def _josephus(N):
    if N <= 0:
        return []
    return [0] + josephus_pipeline(max(N - 1, 4)).partial2.to_list()[:N - 1]


def _josephus_direct(N):
    return [0] + [2 * (n - 2 ** _floor_log2(n)) + 1 for n in range(1, N)]


def _paperfold(N):
    return [paperfold(n) for n in range(N)]


def _paperfold_recurrence(N):
    # one-based: a(2m) = a(m), a(4m+1) = 1, a(4m+3) = 0; P(n) = a(n+1)
    a = [None]
    for m in range(1, N + 1):
        if m % 2 == 0:
            a.append(a[m // 2])
        else:
            a.append(1 if m % 4 == 1 else 0)
    return a[1:]


def _two_power_minus_three(N):
    s = geometric_series(N, 2) - 3 * geometric_series(N, 1)
    return _series_terms(s, N)


def _two_power_minus_three_direct(N):
    return [2 ** n - 3 for n in range(N)]


def _rueppel(N):
    return [1 if ((n + 1) & n) == 0 else 0 for n in range(N)]


def _catalan_mod_two(N):
    return [c % 2 for c in _catalan(N)]


def _alternations(N):
    return [binary_runs(n).digit_alternations for n in range(1, N + 1)]


def _alternations_from_runs(N):
    return [binary_runs(n).total_runs - 1 for n in range(1, N + 1)]


def _complement(N):
    return [len(set(bin(n)[2:])) - 1 for n in range(N)]


def _complement_of_rueppel(N):
    return [1 - r for r in _rueppel(N)]


def _runs_one_mod_four(N):
    found = []
    n = 1
    while len(found) < N:
        if binary_runs(n).total_runs % 4 == 1:
            found.append(n)
        n += 1
    return found


def _a062050(N):
    return josephus_pipeline(max(N, 4)).partial1.to_list()[:N]


def _a062050_direct(N):
    return [n - 2 ** _floor_log2(n) + 1 for n in range(1, N + 1)]


def _non_squashing_gf(N):
    """
    Expansion of 1/(1-x) + sum_k x^(3*2^(k-1)-2) / prod_{j=0..k} (1 - x^(2^j)),
    which lists the terms from index 2 on; the two leading ones are prepended.
    """
    M = max(N - 2, 1)
    total = geometric_series(M)
    k = 1
    while 3 * 2 ** (k - 1) - 2 < M:
        term = x_series(M, 3 * 2 ** (k - 1) - 2)
        for j in range(k + 1):
            term = term * (1 - x_series(M, 2 ** j)).recip()
        total = total + term
        k += 1
    return ([1, 1] + _series_terms(total, M))[:N]


def _non_squashing_direct(N):
    a = []
    for n in range(N):
        value = sum(a[m] for m in range(n // 2 + 1)) if n else 1
        if n and n % 2 == 0:
            value -= 1
        a.append(value)
    return a


def _a088748(N):
    a = [1]
    for n in range(1, N):
        a.append(a[-1] + 2 * paperfold(n - 1) - 1)
    return a[:N]


def _a088748_recurrence(N):
    return a088748_terms(N).to_list()


def _jacobi_alpha_negated(N):
    fraction = jacobi_expand(rueppel_series(2 * N + 2), N)
    return [-alpha for alpha in fraction.alphas][:N]


def _contracted_non_squashing(N):
    # S-parameters s_k = 2 (A088567(k+1) mod 2) - 1 contract to J alphas
    # alpha_0 = s_1, alpha_n = s_2n + s_2n+1
    a = _non_squashing_direct(2 * N + 2)
    s = [None] + [2 * (a[k + 1] % 2) - 1 for k in range(1, 2 * N + 1)]
    alphas = [s[1]] + [s[2 * n] + s[2 * n + 1] for n in range(1, N)]
    return [-alpha for alpha in alphas][:N]


def _inverse_of(series_factory, N):
    x = x_series(N)
    return _series_terms((1 + x * series_factory(N)).recip(), N)


def _convolution_inverse(coefficients, N):
    # a = 1 / (1 + x g): a_n = -sum_{k<n} g_k a_{n-1-k}
    a = [1]
    for n in range(1, N):
        a.append(-sum(coefficients[k] * a[n - 1 - k] for k in range(n)))
    return a[:N]


def _a126983(N):
    return _inverse_of(catalan_series, N)


def _a126983_convolution(N):
    return _convolution_inverse(_catalan_binomial(N), N)


def _parity_of_one_runs(N):
    return [binary_runs(n).runs_of_ones % 2 for n in range(N)]


def _parity_from_total_runs(N):
    return [((binary_runs(n).total_runs + 1) // 2) % 2 for n in range(N)]


def _a339422(N):
    return _inverse_of(rueppel_series, N)


def _a339422_convolution(N):
    return _convolution_inverse(_rueppel(N), N)


###########################
#        Registry         #
###########################


@dataclass(frozen=True)
class NamedSequence:
    """
    A catalog entry. `rule(N)` and `oracle(N)` return the first N terms from
    `offset`; `printed` starts at absolute index `printed_start`.
    """

    seq_id: str
    name: str
    offset: int
    generator: str
    rule: Callable
    oracle: Optional[Callable] = None
    printed: tuple = field(default_factory=tuple)
    printed_start: Optional[int] = None

    def terms(self, N):
        return catalog_terms(self.seq_id, N)

    def oracle_terms(self, N):
        if self.oracle is None:
            return None
        return Sequence(self.oracle(N)[:N], self.offset)

    def printed_sequence(self):
        start = self.offset if self.printed_start is None else self.printed_start
        return Sequence(self.printed, start)


def _entry(seq_id, name, offset, generator, rule, oracle=None, printed=(), printed_start=None):
    return seq_id, NamedSequence(seq_id, name, offset, generator, rule, oracle,
                                 tuple(printed), printed_start)


CATALOG = OrderedDict([
    _entry('A000108', 'Catalan numbers', 0, GF_DERIVED, _catalan, _catalan_binomial,
           (1, 1, 2, 5, 14, 42)),
    _entry('A005811', 'number of runs in binary expansion of n', 0, DIRECT_RULE,
           _runs, _runs_recurrence, (0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 4, 3, 2)),
    _entry('A006257', 'Josephus problem, every second element', 0, RELATION_DERIVED,
           _josephus, _josephus_direct,
           (1, 1, 3, 1, 3, 5, 7, 1, 3, 5, 7, 9, 11, 13, 15, 1, 3), 1),
    _entry('A014577', 'regular paper-folding sequence', 0, DIRECT_RULE,
           _paperfold, _paperfold_recurrence),
    _entry('A036563', '2^n - 3', 0, GF_DERIVED, _two_power_minus_three,
           _two_power_minus_three_direct,
           (1, 5, 13, 29, 61, 125, 253, 509, 1021, 2045, 4093), 2),
    _entry('A036987', '1 iff n+1 is a power of 2', 0, DIRECT_RULE, _rueppel,
           _catalan_mod_two, (1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0)),
    _entry('A037834', 'number of adjacent unequal binary digit pairs of n', 1, DIRECT_RULE,
           _alternations, _alternations_from_runs),
    _entry('A043545', 'number of distinct binary digits of n, minus 1', 0, DIRECT_RULE,
           _complement, _complement_of_rueppel, (0, 0, 1, 0, 1, 1, 1, 0)),
    _entry('A043725', 'n whose binary run count is congruent to 1 mod 4', 1, DIRECT_RULE,
           _runs_one_mod_four),
    _entry('A062050', 'n - 2^floor(log2(n)) + 1', 1, RELATION_DERIVED, _a062050,
           _a062050_direct, (1, 1, 2, 1, 2, 3, 4, 1, 2, 3, 4, 5, 6, 7, 8, 1, 2)),
    _entry('A088567', 'non-squashing partitions', 0, GF_DERIVED, _non_squashing_gf,
           _non_squashing_direct, (1, 1, 1, 2, 2, 3, 4, 5, 6, 7, 9, 10, 13, 14, 18)),
    _entry('A088748', '1 + partial sums of 2P(k) - 1', 0, DIRECT_RULE, _a088748,
           _a088748_recurrence, (1, 2, 3, 2, 3, 4, 3, 2)),
    _entry('A110036', 'negated J-fraction alpha parameters of the Rueppel generating function',
           1, RELATION_DERIVED, _jacobi_alpha_negated, _contracted_non_squashing,
           (-1, 2, 0, 0, -2, 0, 2, 0, -2, 2, 0)),
    _entry('A126983', 'expansion of 1/(1 + x c(x))', 0, GF_DERIVED, _a126983,
           _a126983_convolution, (1, -1, 0, -1, -2, -6, -18, -57)),
    _entry('A268411', 'parity of the number of runs of 1s in binary n', 0, DIRECT_RULE,
           _parity_of_one_runs, _parity_from_total_runs),
    _entry('A339422', 'expansion of 1/(1 + x r(x))', 0, GF_DERIVED, _a339422,
           _a339422_convolution, (1, -1, 0, 1, -2, 2, 0, -3, 4, -2, -2, 6)),
])


def get_entry(seq_id):
    try:
        return CATALOG[seq_id.upper()]
    except (KeyError, AttributeError):
        raise UnknownSequence(seq_id, user_details='Known sequences: %s' % ', '.join(CATALOG))


###########################
#        Services         #
###########################


@lru_cache(maxsize=64)
def _cached_terms(seq_id, N):
    return tuple(CATALOG[seq_id].rule(N)[:N])


def catalog_terms(seq_id, N):
    """
    First N terms of a catalog sequence at its declared offset.

    :param seq_id:  A-number
    :param N:       Number of terms
    :return:        Sequence starting at the entry's offset
    """
    entry = get_entry(seq_id)
    if N < 0:
        raise ValueError('Number of terms must be non-negative')
    return Sequence(_cached_terms(entry.seq_id, N), entry.offset)


def josephus_pipeline(N):
    """
    Builds the four sequences leading from the Rueppel complement to the
    Josephus numbers.

    :param N:   Number of terms (at least 4)
    :return:    JosephusPipeline of Sequences, each indexed from 0
    """
    if N < 4:
        raise ValueError('The Josephus pipeline needs N >= 4')
    r = rueppel_series(N + 2)
    marked = [1, 0]
    for i in range(N - 2):
        value = 1 - r[i + 2]
        marked.append(-((i + 1) // 2) if value == 0 else value)
    marked = Sequence(marked)
    partial1 = marked.partial_sums()
    doubled = Sequence([v if n == 0 else 2 * v for n, v in enumerate(marked)])
    partial2 = doubled.partial_sums()
    return JosephusPipeline(marked, partial1, doubled, partial2)


def motzkin_terms(N):
    return Sequence(motzkin_series(N).coefficients)


def a088748_terms(N):
    """
    A088748 from the one-based paper-folding recurrence, independent of the
    catalog rule: a(0) = 1, a(n) = a(n-1) + 2 P(n-1) - 1.
    """
    folds = _paperfold_recurrence(N)
    terms = [1]
    for n in range(1, N):
        terms.append(terms[-1] + 2 * folds[n - 1] - 1)
    return Sequence(terms[:N])


def cross_check(seq_id, N):
    """
    Compares the primary generator with the second derivation.

    :return:    Index of the first disagreement, or None when they agree
                (or no second derivation exists)
    """
    entry = get_entry(seq_id)
    oracle = entry.oracle_terms(N)
    if oracle is None:
        return None
    terms = catalog_terms(seq_id, N)
    for index, value in terms.items():
        if oracle[index] != value:
            logger.info('%s disagrees with its second derivation at %d', seq_id, index)
            return index
    return None


def printed_mismatch(seq_id):
    """
    Index of the first term differing from the reference prefix, or None.
    """
    entry = get_entry(seq_id)
    printed = entry.printed_sequence()
    if not len(printed):
        return None
    terms = catalog_terms(seq_id, printed.last_index - entry.offset + 1)
    for index, value in printed.items():
        if terms[index] != value:
            return index
    return None


def calibrated_closed_forms():
    """
    Index shifts at which the Josephus and A062050 closed forms reproduce
    their reference prefixes.
    """
    shifts = OrderedDict()
    for seq_id, formula in (('A006257', josephus_closed_form),
                            ('A062050', a062050_closed_form)):
        shift = calibrate_index_shift(get_entry(seq_id).printed, formula)
        if shift is None:
            raise LabException('No index shift reproduces the %s prefix' % seq_id)
        shifts[seq_id] = shift
    return shifts
