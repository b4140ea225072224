"""
Coefficient rings used by every other service. Integers are Python ints,
rationals are `fractions.Fraction`, polynomials in the indeterminates b and c
are `Poly2` and their quotients are `RatFunc`. All values are immutable.
"""
import logging
from fractions import Fraction
from math import gcd

from rueppel_lab.config import Config
from rueppel_lab.exceptions import (DegreeBoundExceeded,
                                    DivisionByZero,
                                    InexactDivision,
                                    RingMismatch,
                                    UnexpectedVariable,
                                    ZeroDenominator)

logger = logging.getLogger(__name__)

INT = 'int'
RAT = 'rat'
POLY = 'poly'
RATFUNC = 'ratfunc'

# join of two rings; pairs missing from the table have no exact common ring
_JOIN = {
    (INT, INT): INT,
    (INT, RAT): RAT,
    (INT, POLY): POLY,
    (INT, RATFUNC): RATFUNC,
    (RAT, RAT): RAT,
    (RAT, RATFUNC): RATFUNC,
    (POLY, POLY): POLY,
    (POLY, RATFUNC): RATFUNC,
    (RATFUNC, RATFUNC): RATFUNC,
}

_FIELD = {INT: RAT, RAT: RAT, POLY: RATFUNC, RATFUNC: RATFUNC}


def _order_key(monomial):
    # graded lexicographic, b before c
    return (monomial[0] + monomial[1], monomial[0], monomial[1])


def _format_monomial(i, j):
    parts = []
    for name, exp in (('b', i), ('c', j)):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append('%s^%d' % (name, exp))
    return '*'.join(parts)


###########################
#          Poly2          #
###########################


class Poly2(object):
    """
    Sparse integer polynomial in b and c. Coefficients are kept in a dict
    keyed by exponent pairs (i, j) meaning b^i c^j; zero coefficients are
    never stored.
    """

    __slots__ = ('cs',)

    def __init__(self, cs=None):
        coefs = {}
        bound = Config.DEGREE_BOUND
        for key, value in (cs or {}).items():
            if value == 0:
                continue
            i, j = key
            if i < 0 or j < 0:
                raise ValueError('Negative exponent in %r' % (key,))
            if i > bound or j > bound:
                raise DegreeBoundExceeded('Exponent %r exceeds the degree bound %d' % (key, bound))
            coefs[(i, j)] = int(value)
        self.cs = coefs

    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i, j, coefficient=1):
        return cls({(i, j): coefficient})

    @classmethod
    def promote(cls, item):
        if isinstance(item, Poly2):
            return item
        if isinstance(item, Fraction) and item.denominator == 1:
            return cls.constant(item.numerator)
        if isinstance(item, int):
            return cls.constant(item)
        return None

    def __getstate__(self):
        return (self.cs,)

    def __setstate__(self, state):
        self.cs = state[0]

    # comparison

    def __eq__(self, other):
        other = self.promote(other)
        if other is None:
            return NotImplemented
        return self.cs == other.cs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self.cs.items()))

    def __bool__(self):
        return bool(self.cs)

    # arithmetic

    def __add__(self, other):
        promoted = self.promote(other)
        if promoted is None:
            return _lift_binary(self, other, '__add__')
        cs = dict(self.cs)
        for key, value in promoted.cs.items():
            cs[key] = cs.get(key, 0) + value
        return Poly2(cs)

    __radd__ = __add__

    def __neg__(self):
        return Poly2(dict((key, -value) for key, value in self.cs.items()))

    def __sub__(self, other):
        promoted = self.promote(other)
        if promoted is None:
            return _lift_binary(self, other, '__sub__')
        return self + (-promoted)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly2(dict((key, other * value) for key, value in self.cs.items()))
        promoted = self.promote(other)
        if promoted is None:
            return _lift_binary(self, other, '__mul__')
        cs = {}
        for (i1, j1), v1 in self.cs.items():
            for (i2, j2), v2 in promoted.cs.items():
                key = (i1 + i2, j1 + j2)
                cs[key] = cs.get(key, 0) + v1 * v2
        return Poly2(cs)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RatFunc(self) / other

    def __rtruediv__(self, other):
        return RatFunc.promote(other) / RatFunc(self)

    def __pow__(self, n):
        if n < 0:
            return RatFunc(self) ** n
        result = Poly2.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, other):
        """
        Divides by another polynomial whose quotient is known to be a
        polynomial, by repeated leading-term cancellation.

        :param other:   Divisor, a Poly2 or int.
        :return:        The quotient; InexactDivision when a remainder is left.
        """
        divisor = self.promote(other)
        if divisor is None:
            raise TypeError('Cannot divide a Poly2 by %r' % (other,))
        if not divisor:
            raise DivisionByZero()

        lead = divisor.leading_monomial()
        lead_coefficient = divisor.cs[lead]
        remainder = dict(self.cs)
        quotient = {}
        while remainder:
            top = max(remainder, key=_order_key)
            value = remainder[top]
            di, dj = top[0] - lead[0], top[1] - lead[1]
            if di < 0 or dj < 0 or value % lead_coefficient:
                raise InexactDivision(internal_details='%s / %s' % (self, divisor))
            q = value // lead_coefficient
            quotient[(di, dj)] = q
            for (i, j), w in divisor.cs.items():
                key = (i + di, j + dj)
                updated = remainder.get(key, 0) - q * w
                if updated:
                    remainder[key] = updated
                else:
                    remainder.pop(key, None)
        return Poly2(quotient)

    # structure

    def leading_monomial(self):
        if not self.cs:
            return None
        return max(self.cs, key=_order_key)

    def leading_coefficient(self):
        if not self.cs:
            return 0
        return self.cs[self.leading_monomial()]

    def is_constant(self):
        return all(key == (0, 0) for key in self.cs)

    def constant_term(self):
        return self.cs.get((0, 0), 0)

    def degree(self, variable=None):
        if not self.cs:
            return -1
        if variable == 'b':
            return max(i for i, _ in self.cs)
        if variable == 'c':
            return max(j for _, j in self.cs)
        return max(i + j for i, j in self.cs)

    def variables(self):
        found = set()
        for i, j in self.cs:
            if i:
                found.add('b')
            if j:
                found.add('c')
        return found

    def content(self):
        """
        Integer content and monomial content of the polynomial.

        :return:    (positive gcd of the coefficients, (min b exponent, min c exponent))
        """
        if not self.cs:
            return 0, (0, 0)
        g = 0
        for value in self.cs.values():
            g = gcd(g, value)
        mi = min(i for i, _ in self.cs)
        mj = min(j for _, j in self.cs)
        return g, (mi, mj)

    def divide_content(self, integer, monomial):
        mi, mj = monomial
        return Poly2(dict(((i - mi, j - mj), value // integer)
                          for (i, j), value in self.cs.items()))

    def coefficients_in_b(self):
        """
        Coefficients of b^0, b^1, ... for a polynomial in b alone.
        """
        if 'c' in self.variables():
            raise UnexpectedVariable('Polynomial %s depends on c' % self)
        if not self.cs:
            return []
        row = [0] * (self.degree('b') + 1)
        for (i, _), value in self.cs.items():
            row[i] = value
        return row

    def evaluate(self, b_val, c_val):
        b_val = Fraction(b_val)
        c_val = Fraction(c_val)
        total = Fraction(0)
        for (i, j), value in self.cs.items():
            total += value * b_val ** i * c_val ** j
        return total

    def subs(self, b=None, c=None):
        """
        Substitutes ring elements for b and/or c.
        """
        b = Poly2.monomial(1, 0) if b is None else b
        c = Poly2.monomial(0, 1) if c is None else c
        total = Poly2()
        for (i, j), value in self.cs.items():
            total = total + (b ** i) * (c ** j) * value
        return total

    def __str__(self):
        if not self.cs:
            return '0'
        out = ''
        for key in sorted(self.cs, key=_order_key, reverse=True):
            value = self.cs[key]
            monomial = _format_monomial(*key)
            magnitude = abs(value)
            if not monomial:
                term = str(magnitude)
            elif magnitude == 1:
                term = monomial
            else:
                term = '%d*%s' % (magnitude, monomial)
            if not out:
                out = ('-' if value < 0 else '') + term
            else:
                out += (' - ' if value < 0 else ' + ') + term
        return out

    def __repr__(self):
        return 'Poly2(%r)' % str(self)


B = Poly2.monomial(1, 0)
C = Poly2.monomial(0, 1)


###########################
#         RatFunc         #
###########################


def _as_poly(item):
    if isinstance(item, Poly2):
        return item
    if isinstance(item, int):
        return Poly2.constant(item)
    raise TypeError('Expected a polynomial, got %r' % (item,))


def _reduce(num, den):
    if not num:
        return Poly2(), Poly2.constant(1)

    g_num, (ni, nj) = num.content()
    g_den, (di, dj) = den.content()
    g = gcd(g_num, g_den)
    common = (min(ni, di), min(nj, dj))
    if g != 1 or common != (0, 0):
        num = num.divide_content(g, common)
        den = den.divide_content(g, common)

    if not den.is_constant() or den.constant_term() != 1:
        try:
            num, den = num.exact_div(den), Poly2.constant(1)
        except InexactDivision:
            if not num.is_constant():
                try:
                    num, den = Poly2.constant(1), den.exact_div(num)
                except InexactDivision:
                    pass

    if den.leading_coefficient() < 0:
        num, den = -num, -den
    return num, den


class RatFunc(object):
    """
    Quotient of two Poly2 values, kept with integer and monomial content
    removed and a positive leading denominator coefficient. Two quotients
    compare equal when their cross products agree.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den:
            raise ZeroDenominator()
        self.num, self.den = _reduce(num, den)

    @classmethod
    def from_parts(cls, num, den):
        """Quotient kept exactly as given, without reduction."""
        result = cls.__new__(cls)
        result.num, result.den = _as_poly(num), _as_poly(den)
        return result

    @classmethod
    def promote(cls, item):
        if isinstance(item, RatFunc):
            return item
        if isinstance(item, Fraction):
            return cls(item.numerator, item.denominator)
        if isinstance(item, (int, Poly2)):
            return cls(item)
        return None

    def __getstate__(self):
        return (self.num, self.den)

    def __setstate__(self, state):
        self.num, self.den = state

    __hash__ = None

    def __eq__(self, other):
        other = self.promote(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = self.promote(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return ratfunc_normalize(RatFunc.from_parts(self.num + other.num, self.den))
        return ratfunc_normalize(RatFunc.from_parts(self.num * other.den + other.num * self.den,
                                                    self.den * other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc.from_parts(-self.num, self.den)

    def __sub__(self, other):
        other = self.promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self.promote(other)
        if other is None:
            return NotImplemented
        return ratfunc_normalize(RatFunc.from_parts(self.num * other.num, self.den * other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self.promote(other)
        if other is None:
            return NotImplemented
        if not other:
            raise DivisionByZero()
        return ratfunc_normalize(RatFunc.from_parts(self.num * other.den, self.den * other.num))

    def __rtruediv__(self, other):
        return self.promote(other) / self

    def __pow__(self, n):
        if n < 0:
            return RatFunc(1) / (self ** -n)
        return ratfunc_normalize(RatFunc.from_parts(self.num ** n, self.den ** n))

    def is_polynomial(self):
        return self.den == 1

    def as_poly(self):
        if not self.is_polynomial():
            raise InexactDivision('%s is not a polynomial' % self)
        return self.num

    def evaluate(self, b_val, c_val):
        den = self.den.evaluate(b_val, c_val)
        if den == 0:
            raise DivisionByZero(internal_details='%s at b=%s, c=%s' % (self, b_val, c_val))
        return self.num.evaluate(b_val, c_val) / den

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num.cs) > 1:
            num = '(%s)' % num
        if len(self.den.cs) > 1 or '*' in den:
            den = '(%s)' % den
        return '%s/%s' % (num, den)

    def __repr__(self):
        return 'RatFunc(%r)' % str(self)


def _lift_binary(poly, other, method):
    lifted = RatFunc.promote(other)
    if lifted is None:
        return NotImplemented
    return getattr(RatFunc(poly), method)(lifted)


###########################
#        Services         #
###########################


def ring_of(value):
    """
    Classifies a ring element.

    :param value:   int, Fraction, Poly2 or RatFunc
    :return:        One of INT, RAT, POLY, RATFUNC
    """
    if isinstance(value, bool):
        raise TypeError('Booleans are not ring elements')
    if isinstance(value, int):
        return INT
    if isinstance(value, Fraction):
        return RAT
    if isinstance(value, Poly2):
        return POLY
    if isinstance(value, RatFunc):
        return RATFUNC
    raise TypeError('Not a ring element: %r' % (value,))


def join_rings(first, second):
    try:
        return _JOIN[(first, second)] if (first, second) in _JOIN else _JOIN[(second, first)]
    except KeyError:
        raise RingMismatch('No exact common ring for %s and %s' % (first, second))


def field_of(ring):
    return _FIELD[ring]


def coerce(value, ring):
    """
    Lifts a ring element into a larger ring.

    :param value:   Ring element
    :param ring:    Target ring name
    :return:        The element as a member of the target ring
    """
    source = ring_of(value)
    if source == ring:
        return value
    if join_rings(source, ring) != ring:
        raise RingMismatch('Cannot coerce %s value %s into %s' % (source, value, ring))
    if ring == RAT:
        return Fraction(value)
    if ring == POLY:
        return Poly2.constant(value)
    return RatFunc.promote(value)


def to_field(value):
    return coerce(value, field_of(ring_of(value)))


def is_unit(value):
    ring = ring_of(value)
    if ring == INT:
        return value in (1, -1)
    if ring == POLY:
        return value.is_constant() and value.constant_term() in (1, -1)
    return bool(value)


def inverse(value):
    """
    Multiplicative inverse of a unit, kept in the element's own ring.
    """
    if not is_unit(value):
        raise DivisionByZero(internal_details='%s is not a unit' % (value,))
    ring = ring_of(value)
    if ring in (INT, POLY):
        return value
    return 1 / value


def simplify(value):
    """
    Moves an element to the smallest ring holding it: Fractions with
    denominator 1 become ints, polynomial RatFuncs become Poly2, constant
    Poly2 become ints.
    """
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    if isinstance(value, RatFunc):
        if value.is_polynomial():
            value = value.num
        elif value.num.is_constant() and value.den.is_constant():
            return simplify(Fraction(value.num.constant_term(), value.den.constant_term()))
    if isinstance(value, Poly2) and value.is_constant():
        return value.constant_term()
    return value


def format_value(value):
    return str(simplify(value))


def ring_arith(x, y, op):
    """
    Exact ring operation.

    :param x:   Left operand
    :param y:   Right operand
    :param op:  One of 'add', 'sub', 'mul', 'exact_div'
    :return:    The exact result
    """
    if op == 'add':
        return x + y
    if op == 'sub':
        return x - y
    if op == 'mul':
        return x * y
    if op != 'exact_div':
        raise ValueError('Unknown ring operation %s' % op)

    if y == 0:
        raise DivisionByZero()
    ring = join_rings(ring_of(x), ring_of(y))
    if ring == INT:
        quotient, remainder = divmod(x, y)
        if remainder:
            raise InexactDivision(internal_details='%d / %d' % (x, y))
        return quotient
    if ring == POLY:
        return Poly2.promote(x).exact_div(y)
    if ring == RAT:
        return Fraction(x) / Fraction(y)
    return RatFunc.promote(x) / RatFunc.promote(y)


def poly2_eval(p, b_val, c_val=1):
    """
    Evaluates a polynomial at rational values of b and c.
    """
    return _as_poly(p).evaluate(b_val, c_val)


def ratfunc_normalize(f):
    """
    Canonical representative of a rational function: integer and monomial
    content removed, exact quotients carried out and the leading denominator
    coefficient positive. Every RatFunc operation returns its result through here.

    :param f:   RatFunc, reduced or not
    :return:    RatFunc in canonical form
    """
    if not f.den:
        raise ZeroDenominator()
    num, den = _reduce(f.num, f.den)
    return RatFunc.from_parts(num, den)
