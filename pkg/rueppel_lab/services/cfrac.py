"""
Stieltjes and Jacobi continued fractions of power series. Parameters live in
the fraction field of the series' coefficient ring: rationals for integer
series, rational functions in b and c for Poly2 series.

Both expansions track the tails as ratios g_k = F_{k+1} / F_k of series with
constant term 1, starting from F_0 = 1 and F_1 = s / s(0). Each step is then
a linear combination of the two latest series, with no reciprocals:

    S:  F_{k+1} = (F_k - F_{k-1}) / (alpha_k x)
    J:  F_{k+2} = ((1 - alpha_k x) F_{k+1} - F_k) / (beta_{k+1} x^2)
"""
import logging
from dataclasses import dataclass
from typing import Optional

from rueppel_lab.exceptions import (InsufficientDepth,
                                    InsufficientTruncation,
                                    JFractionTermination,
                                    NonUnitConstantTerm,
                                    SFractionBreakdown)
from rueppel_lab.services.rings import coerce, field_of, inverse, simplify
from rueppel_lab.services.series import Series, x_series

logger = logging.getLogger(__name__)

###########################
#        Utilities        #
###########################


@dataclass(frozen=True)
class SFraction:
    """a0 / (1 - alpha_1 x / (1 - alpha_2 x / ...))"""

    a0: object
    alphas: tuple
    terminated: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'alphas', tuple(self.alphas))
        if any(alpha == 0 for alpha in self.alphas):
            raise ValueError('S-fraction parameters must be nonzero')

    @property
    def depth(self):
        return len(self.alphas)


@dataclass(frozen=True)
class JFraction:
    """a0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - beta_2 x^2 / ...))"""

    a0: object
    alphas: tuple
    betas: tuple
    terminated_at: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, 'alphas', tuple(self.alphas))
        object.__setattr__(self, 'betas', tuple(self.betas))
        if any(beta == 0 for beta in self.betas):
            raise ValueError('J-fraction betas must be nonzero')

    @property
    def depth(self):
        return len(self.alphas)


def required_coefficients(depth):
    return 2 * depth + 2


def _initial_tails(s, depth):
    """
    F_0 = 1 and F_1 = s / s(0) as coefficient lists over the fraction field.
    """
    needed = required_coefficients(depth)
    if s.order < needed:
        raise InsufficientTruncation('Depth %d needs %d trusted coefficients, series has %d'
                                     % (depth, needed, s.order))
    if s[0] == 0:
        raise NonUnitConstantTerm('Continued fractions need a nonzero constant term')
    field = field_of(s.ring)
    a0 = coerce(s[0], field)
    one = coerce(1, field)
    zero = coerce(0, field)
    first = [one] + [zero] * (needed - 1)
    second = [coerce(v, field) / a0 for v in s.coefficients[:needed]]
    return first, second


###########################
#        Services         #
###########################


def stieltjes_expand(s, depth):
    """
    Expands s = a0 / (1 - alpha_1 x / (1 - alpha_2 x / ...)) to `depth` parameters.

    :param s:       Series with nonzero constant term
    :param depth:   Number of alpha parameters
    :return:        An SFraction, marked terminated when the fraction is finite
    """
    previous, current = _initial_tails(s, depth)

    alphas = []
    terminated = False
    for k in range(depth):
        D = [current[i + 1] - previous[i + 1] for i in range(len(current) - 1)]
        if all(d == 0 for d in D):
            terminated = True
            break
        alpha = D[0]
        if alpha == 0:
            raise SFractionBreakdown(k + 1)
        alphas.append(simplify(alpha))
        previous, current = current[:len(D)], [d / alpha for d in D]

    logger.debug('S-fraction expanded to depth %d (terminated: %s)', len(alphas), terminated)
    return SFraction(simplify(s[0]), alphas, terminated)


def jacobi_expand(s, depth, strict=False):
    """
    Expands s = a0 / (1 - alpha_0 x - beta_1 x^2 / (1 - alpha_1 x - ...)) to
    `depth` levels. A vanishing beta ends the expansion: the returned fraction
    records where, or JFractionTermination is raised when `strict` is set.

    :param s:       Series with nonzero constant term
    :param depth:   Number of alpha parameters (and betas)
    :param strict:  Raise on a finite J-fraction instead of returning it
    :return:        A JFraction
    """
    previous, current = _initial_tails(s, depth)

    alphas = []
    betas = []
    terminated_at = None
    for k in range(depth):
        alpha = current[1] - previous[1]
        alphas.append(simplify(alpha))
        # E = (1 - alpha x) F_{k+1} - F_k vanishes to order 2
        E = [current[i] - alpha * current[i - 1] - previous[i] for i in range(2, len(current))]
        beta = E[0]
        if beta == 0:
            terminated_at = k + 1
            if strict:
                raise JFractionTermination(terminated_at)
            break
        betas.append(simplify(beta))
        previous, current = current[:len(E)], [e / beta for e in E]

    logger.debug('J-fraction expanded to depth %d', len(alphas))
    return JFraction(simplify(s[0]), alphas, betas, terminated_at)


def stieltjes_eval(f, N):
    """
    Bottom-up evaluation of a truncated S-fraction to N coefficients.
    """
    if not f.terminated and f.depth < N - 1:
        raise InsufficientDepth('S-fraction of depth %d determines %d coefficients, %d requested'
                                % (f.depth, f.depth + 1, N))
    x = x_series(N)
    g = Series([1], N)
    for alpha in reversed(f.alphas[:max(N - 1, 0)]):
        g = (1 - alpha * (x * g)).recip()
    return g * f.a0


def jacobi_eval(j, N):
    """
    Bottom-up evaluation of a truncated J-fraction to N coefficients.
    """
    if j.terminated_at is None and 2 * j.depth + 1 < N:
        raise InsufficientDepth('J-fraction of depth %d determines %d coefficients, %d requested'
                                % (j.depth, 2 * j.depth + 1, N))
    x = x_series(N)
    x2 = x_series(N, 2)
    g = Series([1], N)
    for k in reversed(range(j.depth)):
        beta = j.betas[k] if k < len(j.betas) else 0
        g = (1 - j.alphas[k] * x - beta * (x2 * g)).recip()
    return g * j.a0


def tail_series(s):
    """
    The series g1 with s = 1 / (1 - alpha_1 x g1).

    :param s:   Series with s(0) = 1 and a nonzero linear coefficient
    :return:    g1, over the fraction field of s
    """
    if s[0] != 1:
        raise NonUnitConstantTerm('Tail extraction needs s(0) = 1')
    field = field_of(s.ring)
    alpha = coerce(s[1], field)
    if alpha == 0:
        raise SFractionBreakdown(1)
    quotient = (s - 1).divide_by_x(1) * s.recip()
    g1 = quotient * inverse(alpha)
    return g1.map_coefficients(simplify, field)
