"""
Truncated formal power series over the coefficient rings, and the finite
integer sequences read off them. A Series carries the number of trusted
coefficients (its order); results of arithmetic are trusted only as far as
every input is, and reading past that point raises instead of guessing.
"""
from dataclasses import dataclass

from rueppel_lab.config import Config
from rueppel_lab.exceptions import (BadOrder,
                                    InsufficientTruncation,
                                    NonUnitConstantTerm,
                                    RingMismatch)
from rueppel_lab.services.rings import (B, C, INT, POLY,
                                        coerce,
                                        format_value,
                                        inverse,
                                        is_unit,
                                        join_rings,
                                        ring_of,
                                        to_field)

###########################
#        Sequence         #
###########################


@dataclass(frozen=True)
class Sequence:
    """
    Finite run of terms a_offset, a_offset+1, ... with an explicit offset.
    Indexing is by absolute index.
    """

    terms: tuple
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple(self.terms))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self.terms[index]
        position = index - self.offset
        if position < 0 or position >= len(self.terms):
            raise IndexError('Index %d outside %d..%d' % (index, self.offset, self.last_index))
        return self.terms[position]

    @property
    def last_index(self):
        return self.offset + len(self.terms) - 1

    def indices(self):
        return range(self.offset, self.offset + len(self.terms))

    def items(self):
        return zip(self.indices(), self.terms)

    def prefix(self, n):
        return Sequence(self.terms[:n], self.offset)

    def shifted(self, k):
        """Term n of the result is term n+k of this sequence, same offset."""
        if k >= 0:
            return Sequence(self.terms[k:], self.offset)
        return Sequence((0,) * -k + self.terms, self.offset)

    def reindexed(self, offset):
        return Sequence(self.terms, offset)

    def map(self, func):
        return Sequence([func(v) for v in self.terms], self.offset)

    def termwise(self, other, func):
        start = max(self.offset, other.offset)
        stop = min(self.last_index, other.last_index)
        return Sequence([func(self[i], other[i]) for i in range(start, stop + 1)], start)

    def partial_sums(self):
        sums = []
        total = 0
        for value in self.terms:
            total = total + value
            sums.append(total)
        return Sequence(sums, self.offset)

    def to_series(self, order=None, ring=None):
        if self.offset < 0:
            raise InsufficientTruncation('Sequences with negative offset have no series')
        coefficients = (0,) * self.offset + self.terms
        return Series(coefficients, order or len(coefficients), ring)

    def to_list(self):
        return list(self.terms)

    def __str__(self):
        return ', '.join(format_value(v) for v in self.terms)


###########################
#         Series          #
###########################


def _infer_ring(coefficients):
    ring = INT
    for value in coefficients:
        kind = ring_of(value)
        if kind != ring:
            ring = join_rings(ring, kind)
    return ring


class Series(object):
    """
    Power series truncated at `order`: coefficients 0..order-1 are trusted.
    """

    __slots__ = ('coefficients', 'order', 'ring')

    def __init__(self, coefficients, order=None, ring=None):
        coefficients = list(coefficients)
        if order is None:
            order = len(coefficients)
        if order < 0:
            raise ValueError('Negative truncation order')
        if len(coefficients) < order:
            coefficients.extend([0] * (order - len(coefficients)))
        coefficients = coefficients[:order]
        inferred = _infer_ring(coefficients)
        if ring is None:
            ring = inferred
        elif join_rings(inferred, ring) != ring:
            raise RingMismatch('Coefficients in %s do not fit the %s ring' % (inferred, ring))
        self.coefficients = tuple(coefficients)
        self.order = order
        self.ring = ring

    def __getstate__(self):
        return (self.coefficients, self.order, self.ring)

    def __setstate__(self, state):
        self.coefficients, self.order, self.ring = state

    @classmethod
    def promote(cls, item, order, ring=None):
        if isinstance(item, Series):
            return item
        try:
            ring_of(item)
        except TypeError:
            return None
        return cls([item], order, ring)

    # access

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coefficients[n]
        if n < 0:
            raise IndexError('Negative coefficient index')
        if n >= self.order:
            raise InsufficientTruncation('Coefficient %d is beyond the trusted order %d'
                                         % (n, self.order))
        return self.coefficients[n]

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coefficients, other.coefficients))

    __hash__ = None

    def agrees_with(self, other, n=None):
        """Compares the first n coefficients (default: the shared trusted range)."""
        limit = min(self.order, len(other)) if n is None else n
        return all(self[i] == other[i] for i in range(limit))

    def valuation(self):
        for i, value in enumerate(self.coefficients):
            if value != 0:
                return i
        return None

    def is_zero(self):
        return self.valuation() is None

    # arithmetic

    def _binary(self, other, func):
        other_series = Series.promote(other, self.order)
        if other_series is None:
            return NotImplemented
        return func(self, other_series)

    def __add__(self, other):
        return self._binary(other, lambda s, t: series_arith(s, t, 'add'))

    def __radd__(self, other):
        return self._binary(other, lambda s, t: series_arith(t, s, 'add'))

    def __sub__(self, other):
        return self._binary(other, lambda s, t: series_arith(s, t, 'sub'))

    def __rsub__(self, other):
        return self._binary(other, lambda s, t: series_arith(t, s, 'sub'))

    def __mul__(self, other):
        if not isinstance(other, Series):
            try:
                ring = join_rings(self.ring, ring_of(other))
            except TypeError:
                return NotImplemented
            return Series([other * v for v in self.coefficients], self.order, ring)
        return series_arith(self, other, 'mul')

    __rmul__ = __mul__

    def __neg__(self):
        return Series([-v for v in self.coefficients], self.order, self.ring)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.recip()
        if not is_unit(other):
            other = to_field(other)
        return self * inverse(other)

    def __rtruediv__(self, other):
        other_series = Series.promote(other, self.order)
        if other_series is None:
            return NotImplemented
        return other_series * self.recip()

    def __pow__(self, n):
        if n < 0:
            return self.recip() ** -n
        result = Series([1], self.order, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # structure

    def recip(self):
        return series_recip(self)

    def compose_xk(self, k):
        return series_compose_xk(self, k)

    def shift(self, k):
        return series_shift(self, k)

    def divide_by_x(self, k=1):
        """
        Exact division by x^k; the k lowest coefficients must vanish.
        """
        for i in range(min(k, self.order)):
            if self.coefficients[i] != 0:
                raise NonUnitConstantTerm('Division by x^%d leaves a negative power' % k)
        return series_shift(self, -k)

    def compose(self, f):
        """
        Substitutes the series f, with f(0) = 0, into this series.
        """
        if f.order and f[0] != 0:
            raise BadOrder('Composition needs a series without constant term')
        v = f.valuation()
        if v is None:
            return Series([self[0] if self.order else 0], f.order, join_rings(self.ring, f.ring))
        order = min(f.order, self.order * v)
        f = f.truncate(order)
        terms = min(self.order, (order - 1) // v + 1) if order else 0
        result = Series([], order, join_rings(self.ring, f.ring))
        for i in reversed(range(terms)):
            result = result * f + Series([self.coefficients[i]], order)
        return result

    def truncate(self, n):
        if n > self.order:
            raise InsufficientTruncation('Cannot extend a series from order %d to %d'
                                         % (self.order, n))
        return Series(self.coefficients[:n], n, self.ring)

    def map_coefficients(self, func, ring=None):
        return Series([func(v) for v in self.coefficients], self.order, ring)

    def coerce(self, ring):
        return Series([coerce(v, ring) for v in self.coefficients], self.order, ring)

    def to_sequence(self, offset=0):
        return Sequence(self.coefficients, offset)

    def __str__(self):
        return ', '.join(format_value(v) for v in self.coefficients)

    def __repr__(self):
        return 'Series([%s], order=%d, ring=%s)' % (self, self.order, self.ring)


###########################
#        Services         #
###########################


def _default_order(N):
    return Config.SERIES_ORDER if N is None else N


def series_arith(s, t, op):
    """
    Exact truncated ring operation on two series.

    :param s:   Left series
    :param t:   Right series
    :param op:  One of 'add', 'sub', 'mul'
    :return:    A series trusted to the smaller of the two orders
    """
    ring = join_rings(s.ring, t.ring)
    order = min(s.order, t.order)
    a = s.coefficients
    b = t.coefficients

    if op == 'add':
        return Series([a[i] + b[i] for i in range(order)], order, ring)
    if op == 'sub':
        return Series([a[i] - b[i] for i in range(order)], order, ring)
    if op != 'mul':
        raise ValueError('Unknown series operation %s' % op)

    product = [0] * order
    for i in range(order):
        if a[i] == 0:
            continue
        ai = a[i]
        for j in range(order - i):
            if b[j] != 0:
                product[i + j] = product[i + j] + ai * b[j]
    return Series(product, order, ring)


def series_recip(s):
    """
    Reciprocal of a series whose constant term is a unit.

    :param s:   Series with invertible constant term
    :return:    1/s to the same order
    """
    if s.order == 0:
        return s
    a = s.coefficients
    constant = coerce(a[0], s.ring)
    if not is_unit(constant):
        raise NonUnitConstantTerm(internal_details='constant term %s' % format_value(a[0]))
    head = inverse(constant)
    result = [head]
    for m in range(1, s.order):
        total = 0
        for i in range(1, m + 1):
            if a[i] != 0:
                total = total + a[i] * result[m - i]
        result.append(-head * total)
    return Series(result, s.order, join_rings(s.ring, ring_of(head)))


def series_compose_xk(s, k):
    """
    Substitutes x^k for x.

    :param s:   Input series of order N
    :param k:   Positive integer
    :return:    Series of order k*N
    """
    if k < 1:
        raise ValueError('Substitution x -> x^k needs k >= 1')
    result = [0] * (s.order * k)
    for n, value in enumerate(s.coefficients):
        result[n * k] = value
    return Series(result, s.order * k, s.ring)


def series_shift(s, k):
    """
    Positive k multiplies by x^k (order grows by k); negative k drops the
    first |k| coefficients (order shrinks by |k|).
    """
    if k >= 0:
        return Series([0] * k + list(s.coefficients), s.order + k, s.ring)
    k = -k
    if k > s.order:
        raise InsufficientTruncation('Cannot drop %d coefficients from order %d' % (k, s.order))
    return Series(s.coefficients[k:], s.order - k, s.ring)


def constant_series(value, N=None):
    return Series([value], _default_order(N))


def x_series(N=None, k=1):
    N = _default_order(N)
    coefficients = [0] * N
    if k < N:
        coefficients[k] = 1
    return Series(coefficients, N)


def geometric_series(N=None, ratio=1):
    N = _default_order(N)
    return Series([ratio ** n for n in range(N)], N)


def catalan_series(N=None):
    """
    Catalan numbers from c = 1 + x c^2, solved coefficient by coefficient.
    """
    N = _default_order(N)
    c = [1]
    for m in range(1, N):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return Series(c[:N], N)


def motzkin_series(N=None):
    """
    Motzkin numbers from M_{n+1} = M_n + sum_k M_k M_{n-1-k}.
    """
    N = _default_order(N)
    m = [1, 1]
    while len(m) < N:
        n = len(m) - 1
        m.append(m[n] + sum(m[k] * m[n - 1 - k] for k in range(n)))
    return Series(m[:N], N)


def _power_of_two_positions(N):
    k = 1
    while k - 1 < N:
        yield k - 1
        k *= 2


def rueppel_series(N=None):
    N = _default_order(N)
    coefficients = [0] * N
    for position in _power_of_two_positions(N):
        coefficients[position] = 1
    return Series(coefficients, N)


def rueppel_bc_series(N=None, b=B, c=C):
    """
    1 + c x + b (x^3 + x^7 + x^15 + ...) over Poly2. Passing other values
    for b and c gives the specialized families.
    """
    N = _default_order(N)
    coefficients = [0] * N
    for position in _power_of_two_positions(N):
        if position == 0:
            coefficients[0] = 1
        elif position == 1:
            coefficients[1] = c
        else:
            coefficients[position] = b
    return Series(coefficients, N, POLY)
