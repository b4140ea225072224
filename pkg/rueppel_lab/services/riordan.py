"""
Riordan arrays m_{n,k} = [x^n] g(x) f(x)^k, including stretched arrays
where f vanishes to order greater than one, their action on series and the
INVERT transform.
"""
import logging
from dataclasses import dataclass

from rueppel_lab.exceptions import BadLeadingTerm, BadOrder, TooSmall, UnexpectedVariable
from rueppel_lab.services.rings import Poly2, RatFunc, simplify
from rueppel_lab.services.series import Sequence, Series, x_series

logger = logging.getLogger(__name__)

###########################
#        Utilities        #
###########################


def _check_pair(g, f):
    if g.order == 0 or g[0] == 0:
        raise BadOrder('Riordan arrays need g(0) != 0')
    if f.order == 0 or f[0] != 0:
        raise BadOrder('Riordan arrays need f(0) = 0')


class RiordanPair(object):
    """
    The pair (g, f) with its matrix built column by column on demand.
    """

    def __init__(self, g, f, N=None):
        _check_pair(g, f)
        self.N = min(g.order, f.order) if N is None else N
        self.g = g.truncate(self.N)
        self.f = f.truncate(self.N)
        self._columns = [self.g]

    @property
    def stretch(self):
        """Order of f; arrays with stretch > 1 are stretched."""
        return self.f.valuation()

    def column(self, k):
        while len(self._columns) <= k:
            self._columns.append(self._columns[-1] * self.f)
        return self._columns[k]

    def entry(self, n, k):
        return self.column(k)[n]

    def matrix(self):
        columns = [self.column(k) for k in range(self.N)]
        return [[columns[k][n] for k in range(self.N)] for n in range(self.N)]

    def apply(self, h):
        """
        Fundamental theorem: (g, f) . h = g h(f).
        """
        order = min(self.N, h.order)
        return (self.g.truncate(order) * h.compose(self.f.truncate(order))).truncate(order)

    def __mul__(self, other):
        """
        (g, f) * (h, l) = (g h(f), l(f))
        """
        N = min(self.N, other.N)
        f = self.f.truncate(N)
        return RiordanPair(self.g.truncate(N) * other.g.compose(f), other.f.compose(f), N)

    def __repr__(self):
        return 'RiordanPair(g=[%s], f=[%s], N=%d)' % (self.g, self.f, self.N)


@dataclass(frozen=True)
class CoeffArray:
    """Row n holds the coefficients of b^0, b^1, ... of term n of a family."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(tuple(row) for row in self.rows))

    def __len__(self):
        return len(self.rows)

    def entry(self, n, k):
        row = self.rows[n]
        return row[k] if k < len(row) else 0

    @property
    def width(self):
        return max((len(row) for row in self.rows), default=0)

    def block(self, n_rows=None, n_cols=None):
        """Rectangular zero-padded block of the array."""
        n_rows = len(self.rows) if n_rows is None else n_rows
        n_cols = self.width if n_cols is None else n_cols
        return [[self.entry(n, k) for k in range(n_cols)] for n in range(n_rows)]


###########################
#        Services         #
###########################


def riordan_build(g, f, N):
    """
    N x N matrix of the Riordan array (g, f).

    :param g:   Series with g(0) != 0
    :param f:   Series with f(0) = 0
    :param N:   Matrix order
    :return:    List of rows
    """
    return RiordanPair(g, f, N).matrix()


def riordan_apply(g, f, h):
    """
    Action of (g, f) on h, equal to the matrix times the coefficient vector of h.
    """
    return RiordanPair(g, f).apply(h)


def coeff_array(family, max_deg=None):
    """
    Coefficient array of a series whose terms are polynomials in b alone.

    :param family:  Series (or list) of ints / Poly2 in b
    :param max_deg: Keep the coefficients of b^0..b^max_deg only
    :return:        A CoeffArray
    """
    rows = []
    for value in family:
        value = simplify(value)
        if isinstance(value, RatFunc):
            raise UnexpectedVariable('Term %s is not a polynomial' % value)
        row = Poly2.promote(value).coefficients_in_b()
        if max_deg is not None:
            row = row[:max_deg + 1]
        rows.append(row)
    return CoeffArray(rows)


def invert_transform(a, t):
    """
    INVERT(t): the sequence with generating function A / (1 - t x A).

    :param a:   Sequence starting with 1
    :param t:   Integer or rational parameter
    :return:    Sequence of the same length and offset
    """
    terms = list(a)
    if not terms or terms[0] != 1:
        raise BadLeadingTerm()
    A = Series(terms)
    result = A * (1 - t * (x_series(len(terms)) * A)).recip()
    return Sequence([simplify(v) for v in result], getattr(a, 'offset', 0))


def strip_first_row(M):
    if len(M) < 2:
        raise TooSmall()
    return [list(row) for row in M[1:]]


def bivariate_gf(g, f, N):
    """
    g / (1 - y f) to order N as a series in x over Poly2, with y carried by b.
    Coefficient n is sum_k m_{n,k} b^k.
    """
    _check_pair(g, f)
    y = Poly2.monomial(1, 0)
    g = g.truncate(N)
    f = f.truncate(N)
    result = g * (1 - y * f).recip()
    logger.debug('Bivariate generating function built to order %d', N)
    return result
