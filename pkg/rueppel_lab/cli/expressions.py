"""
Generating-function expressions for the command line. The grammar is
sympy's expression syntax restricted to:

    atoms        c, r, rbc, motzkin (the Catalan, Rueppel, r_{b,c} and Motzkin
                 generating functions) and x
    literals     integers and rationals
    operators    + - * / and integer powers (^ or **)
    substitution atom(x^k), e.g. r(x^2)
    invert       invert(f, t), the INVERT transform f / (1 - t x f)

Division by x^k is exact division: the rest of the product must vanish to
order k.
"""
import logging
import re
from fractions import Fraction
from tokenize import TokenError

import sympy
from sympy.core.function import AppliedUndef
from sympy.parsing.sympy_parser import parse_expr

from rueppel_lab.exceptions import UsageException
from rueppel_lab.services.series import (Series,
                                         catalan_series,
                                         motzkin_series,
                                         rueppel_bc_series,
                                         rueppel_series,
                                         x_series)

logger = logging.getLogger(__name__)

X = sympy.Symbol('x')
INVERT = sympy.Function('invert')

ATOMS = {
    'c': catalan_series,
    'r': rueppel_series,
    'rbc': rueppel_bc_series,
    'motzkin': motzkin_series,
}
FUNCTIONS = dict((name, sympy.Function(name)) for name in ATOMS)

BARE_ATOM = re.compile(r'\b(%s)\b(?!\s*\()' % '|'.join(sorted(ATOMS, key=len, reverse=True)))

###########################
#        Utilities        #
###########################


def _usage(message, text, details=None):
    return UsageException(message, user_details='%s in "%s"' % (message, text),
                          internal_details=details)


def _x_power(node):
    """Exponent k when node is x^k with k >= 1, else None."""
    if node == X:
        return 1
    if node.is_Pow and node.base == X and node.exp.is_Integer and node.exp > 0:
        return int(node.exp)
    return None


def _atom_series(name, k, N):
    """atom(x^k) to N coefficients."""
    factory = ATOMS[name]
    return factory(-(-N // k)).compose_xk(k).truncate(N)


def _evaluate(node, N, text):
    if node == X:
        return x_series(N)
    if node.is_Integer:
        return Series([int(node)], N)
    if node.is_Rational:
        return Series([Fraction(int(node.p), int(node.q))], N)
    if node.is_Symbol:
        raise _usage('Unknown symbol %s' % node, text)

    if node.is_Add:
        result = Series([], N)
        for term in node.args:
            result = result + _evaluate(term, N, text)
        return result

    if node.is_Mul:
        # negative powers of x divide exactly, so the rest is built k terms longer
        shift = 0
        factors = []
        for factor in node.args:
            if factor.is_Pow and factor.base == X and factor.exp.is_Integer and factor.exp < 0:
                shift -= int(factor.exp)
            else:
                factors.append(factor)
        result = Series([1], N + shift)
        for factor in factors:
            result = result * _evaluate(factor, N + shift, text)
        return result.divide_by_x(shift) if shift else result

    if node.is_Pow:
        if not node.exp.is_Integer:
            raise _usage('Only integer powers are supported', text, str(node))
        if node.base == X and node.exp < 0:
            return Series([1], N + int(-node.exp)).divide_by_x(int(-node.exp))
        return _evaluate(node.base, N, text) ** int(node.exp)

    if isinstance(node, AppliedUndef):
        name = node.func.__name__
        if name == 'invert':
            if len(node.args) != 2 or not node.args[1].is_Rational:
                raise _usage('invert takes a series and a rational parameter', text)
            f = _evaluate(node.args[0], N, text)
            t = node.args[1]
            t = int(t) if t.is_Integer else Fraction(int(t.p), int(t.q))
            return f * (1 - t * (x_series(N) * f)).recip()
        if name in ATOMS:
            k = _x_power(node.args[0]) if len(node.args) == 1 else None
            if k is None:
                raise _usage('Atoms only accept x^k as argument', text, str(node))
            return _atom_series(name, k, N)

    raise _usage('Unsupported expression %s' % node, text)


###########################
#        Services         #
###########################


def parse_gf(text, N):
    """
    Evaluates a generating-function expression to N coefficients.

    :param text:    Expression such as '1 - x*r' or 'x + 1/r(x^2)'
    :param N:       Number of coefficients
    :return:        Series of order N
    """
    if text is None or not text.strip():
        raise UsageException('You must specify a generating function')
    source = BARE_ATOM.sub(r'\1(x)', text.replace('^', '**'))
    local_dict = dict(FUNCTIONS, x=X, invert=INVERT)
    try:
        node = parse_expr(source, local_dict=local_dict)
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise _usage('Cannot parse the expression', text, str(e))
    logger.debug('Parsed %s as %s', text, node)
    return _evaluate(node, N, text)
