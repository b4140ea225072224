"""
Hankel matrices, exact determinants over integral domains and Hankel
transforms, plus the closed products that express a Hankel transform
through continued-fraction parameters.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from rueppel_lab.config import Config
from rueppel_lab.exceptions import (InsufficientTerms,
                                    LabException,
                                    NonSquare,
                                    RingMismatch)
from rueppel_lab.services.rings import (INT, POLY, RAT, RATFUNC,
                                        ring_arith,
                                        ring_of,
                                        simplify)
from rueppel_lab.services.series import Sequence, catalan_series, x_series
from rueppel_lab.utils import map_jobs

logger = logging.getLogger(__name__)

###########################
#         Utilities       #
###########################


class HankelMatrix(object):
    """
    The (n+1)x(n+1) matrix (a_{i+j}) of a sequence.
    """

    def __init__(self, terms, n):
        terms = tuple(terms)
        if len(terms) < 2 * n + 1:
            raise InsufficientTerms('Order %d Hankel matrix needs %d terms, got %d'
                                    % (n, 2 * n + 1, len(terms)))
        self.order = n + 1
        self.terms = terms[:2 * n + 1]

    def entry(self, i, j):
        return self.terms[i + j]

    def rows(self):
        return [[self.terms[i + j] for j in range(self.order)] for i in range(self.order)]

    def has_constant_antidiagonals(self):
        rows = self.rows()
        for i in range(1, self.order):
            for j in range(self.order - 1):
                if rows[i][j] != rows[i - 1][j + 1]:
                    return False
        return True

    def determinant(self):
        return det_fraction_free(self.rows())


@dataclass(frozen=True)
class HankelTransform:
    """Determinants h_0..h_{n_max} of a sequence's Hankel matrices."""

    values: Sequence
    ring: str = INT

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def to_list(self):
        return self.values.to_list()


def _bareiss_int(M):
    n = len(M)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                quotient, remainder = divmod(pivot * row_i[j] - lead * row_k[j], previous)
                if remainder:
                    raise ArithmeticError('Bareiss step is not exact')
                row_i[j] = quotient
        previous = pivot
    return sign * M[n - 1][n - 1]


def _bareiss(M):
    n = len(M)
    sign = 1
    previous = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            lead = M[i][k]
            for j in range(k + 1, n):
                value = pivot * M[i][j] - lead * M[k][j]
                M[i][j] = value if previous == 1 else ring_arith(value, previous, 'exact_div')
        previous = pivot
    return sign * M[n - 1][n - 1]


###########################
#        Services         #
###########################


def det_fraction_free(M):
    """
    Exact determinant by fraction-free elimination with row pivoting.

    :param M:   Square matrix (list of rows) over the integers, rationals or Poly2
    :return:    The determinant in the entries' ring
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise NonSquare()
    if n == 0:
        return 1

    rings = set(ring_of(v) for row in M for v in row)
    if RATFUNC in rings:
        raise RingMismatch('Determinants of rational-function matrices are not supported')
    if rings == {INT}:
        return _bareiss_int([list(row) for row in M])
    if RAT in rings:
        if POLY in rings:
            raise RingMismatch('Matrix mixes rational and polynomial entries')
        scale = 1
        for row in M:
            for v in row:
                scale = lcm(scale, Fraction(v).denominator)
        scaled = [[(Fraction(v) * scale).numerator for v in row] for row in M]
        return simplify(Fraction(_bareiss_int(scaled), scale ** n))
    return _bareiss([list(row) for row in M])


def hankel_determinant(terms, n):
    """
    Determinant of the order-n Hankel matrix |a_{i+j}|, 0 <= i, j <= n.
    """
    return HankelMatrix(terms, n).determinant()


def hankel_transform(a, n_max=None, jobs=1):
    """
    Computes every Hankel determinant h_0..h_{n_max} independently.

    :param a:       Sequence, Series or list of terms starting at a_0
    :param n_max:   Largest order (defaults depend on the coefficient ring)
    :param jobs:    Worker processes used for the determinants
    :return:        A HankelTransform
    """
    terms = list(a)
    ring = INT
    for v in terms:
        kind = ring_of(v)
        if kind != INT:
            ring = kind
            if kind in (POLY, RATFUNC):
                break
    if n_max is None:
        n_max = Config.HANKEL_DEPTH_POLY if ring in (POLY, RATFUNC) else Config.HANKEL_DEPTH_INT
    if len(terms) < 2 * n_max + 1:
        raise InsufficientTerms('Hankel transform to order %d needs %d terms, got %d'
                                % (n_max, 2 * n_max + 1, len(terms)))

    terms = tuple(terms[:2 * n_max + 1])
    logger.debug('Hankel transform to order %d over %s with %d jobs', n_max, ring, jobs)
    values = map_jobs([(hankel_determinant, terms, n) for n in range(n_max + 1)], jobs)
    return HankelTransform(Sequence([simplify(v) for v in values]), ring)


def hankel_from_jacobi(a0, betas, n_max):
    """
    h_n = a0^(n+1) * prod_{k=1..n} beta_k^(n+1-k); the J-fraction alphas do not enter.

    :param a0:      Constant term of the series
    :param betas:   beta_1, beta_2, ...
    :param n_max:   Largest order
    :return:        A HankelTransform
    """
    betas = list(betas)
    if len(betas) < n_max:
        raise InsufficientTerms('Need %d beta parameters, got %d' % (n_max, len(betas)))
    values = []
    running = 1
    beta_product = 1
    for n in range(n_max + 1):
        if n:
            beta_product = beta_product * betas[n - 1]
            running = running * beta_product
        values.append(simplify(a0 ** (n + 1) * running))
    return HankelTransform(Sequence(values))


def _printed_exponents(n):
    # n for the first pair, then n-2, n-3, ..., 1
    if n < 2:
        return []
    return [n] + [n - k for k in range(2, n)]


def _shifted_exponents(n):
    # n-1, n-2, ..., 1
    return [n - k for k in range(1, n)]


STIELTJES_EXPONENT_PATTERNS = (
    ('as-printed', _printed_exponents),
    ('n-minus-k', _shifted_exponents),
)


def stieltjes_product(a0, alphas, n, exponents):
    value = a0 ** n
    for k, e in enumerate(exponents(n), start=1):
        value = value * (alphas[2 * k - 2] * alphas[2 * k - 1]) ** e
    return simplify(value)


@lru_cache(maxsize=None)
def calibrated_stieltjes_pattern(max_n=6):
    """
    Chooses the exponent pattern of the Stieltjes product that reproduces
    the determinants of c(x) and 1 - x c(x).

    :return:    Name of the first pattern matching every case
    """
    from rueppel_lab.services.cfrac import stieltjes_expand

    N = 4 * max_n + 4
    catalan = catalan_series(N)
    cases = [catalan, 1 - x_series(N) * catalan]
    for name, exponents in STIELTJES_EXPONENT_PATTERNS:
        matched = True
        for s in cases:
            fraction = stieltjes_expand(s, 2 * max_n)
            for n in range(1, max_n + 1):
                expected = hankel_determinant(list(s), n - 1)
                if stieltjes_product(fraction.a0, fraction.alphas, n, exponents) != expected:
                    matched = False
                    break
            if not matched:
                break
        if matched:
            logger.info('Stieltjes product calibrated to the %s exponent pattern', name)
            return name
    raise LabException('No exponent pattern reproduces the Hankel determinants')


def hankel_from_stieltjes(a0, alphas, n):
    """
    Order-(n-1) Hankel determinant a0^n prod_k (alpha_{2k-1} alpha_{2k})^(e_k),
    with the exponents e_k taken from the calibrated pattern.

    :param a0:      Constant term
    :param alphas:  alpha_1, alpha_2, ...
    :param n:       Number of rows of the matrix
    :return:        The determinant
    """
    alphas = list(alphas)
    if len(alphas) < 2 * n - 2:
        raise InsufficientTerms('Need %d alpha parameters, got %d' % (2 * n - 2, len(alphas)))
    exponents = dict(STIELTJES_EXPONENT_PATTERNS)[calibrated_stieltjes_pattern()]
    return stieltjes_product(a0, alphas, n, exponents)
