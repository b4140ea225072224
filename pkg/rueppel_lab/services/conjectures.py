"""
The registered checks. Each one reproduces a printed prefix exactly and then
tests its claim to the requested depth. Reference sequences are read from the
b-file fixtures, so a corrupted fixture fails exactly the checks that use it.
"""
import logging
import random
from fractions import Fraction
from math import comb, isqrt

from rueppel_lab.services.catalog import (CATALOG,
                                          a088748_terms,
                                          calibrated_closed_forms,
                                          catalog_terms,
                                          cross_check,
                                          josephus_pipeline,
                                          printed_mismatch)
from rueppel_lab.services.cfrac import (JFraction,
                                        jacobi_eval,
                                        jacobi_expand,
                                        required_coefficients,
                                        stieltjes_expand,
                                        tail_series)
from rueppel_lab.services.hankel import (calibrated_stieltjes_pattern,
                                         hankel_from_jacobi,
                                         hankel_from_stieltjes,
                                         hankel_transform)
from rueppel_lab.services.oeis import compare, fetch_bfile
from rueppel_lab.services.riordan import (RiordanPair,
                                          bivariate_gf,
                                          coeff_array,
                                          invert_transform,
                                          riordan_build,
                                          strip_first_row)
from rueppel_lab.services.rings import B, C, RatFunc
from rueppel_lab.services.series import (Sequence,
                                         Series,
                                         catalan_series,
                                         geometric_series,
                                         motzkin_series,
                                         rueppel_bc_series,
                                         rueppel_series,
                                         x_series)
from rueppel_lab.services.verify import (CFRAC_POLY,
                                         HANKEL_POLY,
                                         check,
                                         same_value,
                                         sign_profile)

logger = logging.getLogger(__name__)

RANDOM_SEED = 20210

###########################
#     Printed prefixes    #
###########################

C1_HANKEL = (1, 0, -1, 0, 1, 2, -1, 0, 1, 2, 3, -2, 1, 2, -1, 0, 1, 2, 3, -2, -3)
C1_EXPANSION = (1, -1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0)

C2_HANKEL = (1, -1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, -1, 1, 1, 1, -1, 1, -1, -1, 1)
C2_SIGNED = (0, 1, -1, -1, 1, 0, -1, -1, 1, 0, 0, 0, 1, 0, -1, -1)

C3_PERIOD = (1, -1, -1, 0)
C3_HANKEL = C3_PERIOD * 5
C3_EXPANSION = (1, -1, 0, 1, 0, -1, 0, 2, 0, -3, 0, 4, 0, -6, 0, 10, 0)

MOD2_PERIOD = (1, 0, 1, 1, 1, 1, 0, 1)
C3B_HANKEL = (1, -2, -1, -1, 7, 11, 38, 51, 115, 144, 269)
C4_HANKEL = (1, -2, -1, 1, 1, 1, -2, 1, 1, 2, 1, -1, 1, 1, -2, 1, 1, 2, 1, -1, -1, -1)

C5_HANKEL = (1, -2, -1, 2, -3, -2, -1, 2, -3, 4, 3, 2, -3)
C5_EXPANSION = (1, 1, -1, 0, 1, 0, -2, 0, 3, 0, -4, 0, 6, 0)

C6_HANKEL = (1, 0, -1, -2, 1, 2, 3, -2, 1, 2, 3)
C6_EXPANSION = (1, -1, 1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0, 18, 0, 31, 0)

C7_A = (1, 1, 0, 0, -1, -1, 0, 0, -1, -1, 0)
C7_B = (0, -1, -1, -2, 2, 3, 3, -2, 2, 3, 3)
C7_S_ZERO = (1, 1, 0, 0, -1, -1, 0, 0, -1, -1, 0, 0, 1, -1, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0)
C7_CATALAN_A = (1, 1, 0, 0, -1, -1, -2, -2, -3, -3, -4)
C7_CATALAN_B = (0, -1, -1, -2, -2, -3, -3, -4, -4, -5, -5)
S_VALUES = (-1, 2, -2, 3)

CJ_ALPHAS = (1, -2, 2, 0, 0, -2, 0, 2, 0, -2, 2)
CJ_EXPANSION = (1, 1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0, 18, 0, 31)

C8_EXPANSION = (1, 1, 0, 2, 0, 3, 0, 6, 0, 10, 0, 18, 0, 31, 0, 56, 0, 98, 0, 174, 0)
C8_CATALAN_EXPANSION = (1, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0)
C8_HANKEL = (1, -1, -4, 1, 9, -1, -4, 1, 9, -1, -16, 1, 9, -1, -4, 1, 9, -1, -16, 1, 25)
C8_CATALAN_HANKEL = (1, -1, -4, 1, 9, -1, -16, 1, 25, -1, -36, 1, 49)
C8_ROOTS = (1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 5, 4, 3, 4, 3, 2, 3)

RB1_PARAMETERS = (1, -1, -B, B, -1, 1, -1 / B, 1 / B, 1, -1, B, -B, -1, 1, -1 / B, 1 / B,
                  1, -1, -B, B, -1)
RB_PARAMETERS = (B, -B, -1 / B, 1 / B, -B, B, -1 / B, 1 / B, B, -B, 1 / B, -1 / B, -B, B,
                 -1 / B, 1 / B, B, -B, -1 / B, 1 / B)
RBC_TAIL = (1, -C, (B + C ** 3) / C, -2 * B - C ** 3)
RBC_HANKEL = (1, -C ** 2, -B ** 2, B ** 4, B ** 4, -B ** 4 * C ** 2, -B ** 6, B ** 8, B ** 8,
              -B ** 8 * C ** 2, -B ** 10, B ** 12, B ** 12)

P1_PLAIN = (1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5)
P1_ALTERNATED = (1, -2, 3, 2, -3, 4, 3, 2, -3, 4, -5, -4, -3, 4, 3, 2)
P1_ORDER = 12

RB_TAIL = (1, -B, B ** 2 + 1, -B * (B ** 2 + 2), B ** 2 * (B ** 2 + 3),
           -B * (B ** 4 + 4 * B ** 2 + 1), B ** 6 + 5 * B ** 4 + 3 * B ** 2 + 1)
P2_ROWS = ((1,), (0, -1), (1, 0, 1), (0, -2, 0, -1), (0, 0, 3, 0, 1), (0, -1, 0, -4, 0, -1),
           (1, 0, 3, 0, 5, 0, 1), (0, -2, 0, -6, 0, -6, 0, -1), (0, 0, 4, 0, 10, 0, 7, 0, 1))
ROW_SUMS = (1, -1, 2, -3, 4, -6, 10, -15, 22, -34, 52)
ROW_SUM_HANKEL = (1, 1, -1, -1, -1, 1, -1, -1, -1, -1, 1, -1, -1, 1)

RB1_TAIL = (1, -1, B + 1, -2 * B - 1, 3 * B + 1, -B ** 2 - 4 * B - 1, 3 * B ** 2 + 6 * B + 1,
            -6 * B ** 2 - 8 * B - 1, B ** 3 + 10 * B ** 2 + 10 * B + 1)
P3_ROWS = ((1,), (-1,), (1, 1), (-1, -2), (1, 3), (-1, -4, -1), (1, 6, 3), (-1, -8, -6),
           (1, 10, 10, 1))

MARKED_PRINTED = (1, 0, 1, -1, 1, 1, 1, -3, 1, 1, 1, 1, 1, 1, 1, -7, 1, 1, 1, 1, 1, 1, 1)
DOUBLED_PRINTED = (1, 0, 2, -2, 2, 2, 2, -6, 2, 2, 2, 2, 2, 2, 2, -14, 2, 2, 2, 2, 2)
FIXTURE_TERMS = 64

###########################
#        Utilities        #
###########################


def _order(n_max):
    """Coefficients needed for Hankel determinants up to order n_max."""
    return 2 * n_max + 2


def _at_power(factory, N, k):
    """f(x^k) to N coefficients."""
    return factory(-(-N // k)).compose_xk(k).truncate(N)


def _hankel(s, n_max):
    return hankel_transform(list(s)[:2 * n_max + 1], n_max=n_max).values


def _fixture(seq_id):
    return fetch_bfile(seq_id).as_dict()


def _available(ev, target, seq_id, indices, shift=0):
    """Indices whose shifted target term exists; stops the evidence at the first gap."""
    kept = []
    for n in indices:
        if n + shift not in target:
            ev.give_up(n, '%s has no term %d' % (seq_id, n + shift))
            break
        kept.append(n)
    return kept


def _signed_match(ev, label, observed, seq_id, shift=0, start=0):
    """
    |observed_n| = seq_id(n + shift) for n >= start, recording the sign word.
    """
    target = _fixture(seq_id)
    indices = _available(ev, target, seq_id, range(start, observed.last_index + 1), shift)
    if not indices:
        return True
    window = Sequence([observed[n] for n in indices], indices[0])
    shifted = dict((n, target[n + shift]) for n in indices)
    profile = sign_profile(window, seq_id, shifted)
    ev.record_signs(profile)
    if profile.abs_match:
        return True
    for n in indices:
        if abs(window[n]) != shifted[n]:
            return ev.fail(n, shifted[n], abs(window[n]), label)
    return True


def _matches_target(ev, label, values, seq_id, shift=0, partial=False):
    """
    values[n] = seq_id(n + shift) over the indices of values. With `partial`,
    indices past the end of the fixture are skipped instead of ending the check.
    """
    target = _fixture(seq_id)
    if partial:
        indices = [n for n in values.indices() if n + shift in target]
    else:
        indices = _available(ev, target, seq_id, values.indices(), shift)
    return ev.expect_each(label, indices, lambda n: target[n + shift], lambda n: values[n])


def _hankel_reading(ev, label, readings, printed, n_max):
    """
    Hankel transform of the first reading whose transform starts with the
    printed prefix; the first reading is kept when none does.
    """
    transforms = []
    for name, s in readings:
        h = _hankel(s, n_max)
        if all(same_value(h[k], value) for k, value in enumerate(printed)):
            ev.note('%s: using the %s reading', label, name)
            return h
        transforms.append(h)
    ev.note('%s: no reading reproduces the printed prefix', label)
    return transforms[0]


def _gap_series(ev, N):
    """
    1/(1 - x^2 r(x^2)), the denominator reading reproducing the printed
    expansion of 1 - x + x^2/(1 -+ x^2 r(x^2)).
    """
    x = x_series(N)
    x2r2 = x * x * _at_power(rueppel_series, N, 2)
    readings = (('printed denominator 1 + x^2 r(x^2)', (1 + x2r2).recip()),
                ('denominator 1 - x^2 r(x^2)', (1 - x2r2).recip()))
    for name, gap in readings:
        expansion = 1 - x + x * x * gap
        if all(expansion[k] == v for k, v in enumerate(C6_EXPANSION[:N])):
            ev.note('gap series: using the %s reading', name)
            return gap
    ev.note('gap series: no reading reproduces the printed expansion')
    return readings[0][1]


def _quadratic_in_s(ev, label, tail, n_max):
    """
    Hankel(1 + s x + x^2 tail) = A + s^2 B with A, B read off s = 0 and s = 1
    and validated at the remaining values of s.
    """
    x = x_series(tail.order)

    def hankel_at(s):
        return _hankel(1 + s * x + x * x * tail, n_max)

    A = hankel_at(0)
    B = Sequence([h - a for h, a in zip(hankel_at(1), A)])
    for s in S_VALUES:
        h = hankel_at(s)
        if not ev.expect_each('%s at s = %d' % (label, s), h.indices(),
                              lambda k: A[k] + s * s * B[k], lambda k: h[k]):
            break
    return A, B


def _sbc_parameter(m, fold):
    """Expected S-parameter m (0-based) of r_{b,c}, with paper-folding values `fold`."""
    n, position = divmod(m, 8)
    if position in (0, 5):
        return C
    if position in (1, 4):
        return -C
    if position in (2, 3):
        value = (-1) ** n * B / C ** 2
        return value if position == 3 else -value
    value = (2 * fold[n] - 1) / B
    return value if position == 7 else -value


def _sbc_closed_form(n, fold):
    """
    Termwise evaluation of the conjectured closed form for s_{b,c}(n); terms
    whose vanishing factor makes an index fractional are dropped.
    """
    sign, m = (1, n) if n % 2 == 0 else (-1, n - 1)
    if m % 4 == 2:
        value = B * (1 - fold[(m - 2) // 4]) / C ** 2
    else:
        value = C * (-1) ** (m // 4)
    return sign * value


def _specialize(value, b, c):
    if isinstance(value, int):
        return value
    return value.subs(b=b, c=c)


###########################
#     Hankel conjectures  #
###########################


@check('C1-A037834-signed', alias='C1')
def signed_adjacent_pairs(ev):
    """|Hankel(1 - x + x^2 r(x^2))| = A037834 from n = 1."""
    n = ev.n_max(len(C1_HANKEL))
    N = _order(n)
    x = x_series(N)
    s = 1 - x + x * x * _at_power(rueppel_series, N, 2)
    ev.expect_prefix('printed expansion', C1_EXPANSION, s)
    h = _hankel(s, n)
    ev.expect_prefix('printed Hankel prefix', C1_HANKEL, h)
    _signed_match(ev, 'A037834 in absolute value', h, 'A037834', start=1)


@check('C2-A268411-parity', alias='C2')
def runs_of_ones_parity(ev):
    """|((-1)^binom(n,2) - h_n)/2| = A268411 for h = Hankel(1/(1 + x r(x)))."""
    n = ev.n_max(len(C2_HANKEL))
    N = _order(n)
    s = (1 + x_series(N) * rueppel_series(N)).recip()
    _matches_target(ev, 'expansion against A339422', s.to_sequence(), 'A339422', partial=True)
    h = _hankel(s, n)
    ev.expect_prefix('printed Hankel prefix', C2_HANKEL, h)

    signed = []
    for k in h.indices():
        value = Fraction((-1) ** comb(k, 2) - h[k], 2)
        if value not in (-1, 0, 1):
            ev.fail(k, '-1, 0 or 1', value, 'signed sequence range')
            return
        signed.append(int(value))
    signed = Sequence(signed)
    ev.expect_prefix('printed signed prefix', C2_SIGNED, signed)
    _signed_match(ev, 'A268411 in absolute value', signed, 'A268411')

    # sign changes against A043725, reported only
    negative = [k for k in signed.indices() if signed[k] < 0]
    runs_one_mod_four = [v for v in _fixture('A043725').values() if v <= signed.last_index]
    shared = sorted(set(negative) & set(runs_one_mod_four))
    ev.note('exploratory: negative terms at %s; A043725 terms %s; %d shared',
            negative, runs_one_mod_four, len(shared))


@check('C3-periodic-1m1m10', alias='C3')
def periodic_reciprocal(ev):
    """Hankel(1 - x/r(x^2)) is periodic 1, -1, -1, 0."""
    n = ev.n_max(len(C3_HANKEL))
    N = _order(n)
    s = 1 - x_series(N) * _at_power(rueppel_series, N, 2).recip()
    ev.expect_prefix('printed expansion', C3_EXPANSION, s)
    h = _hankel(s, n)
    ev.expect_prefix('printed Hankel prefix', C3_HANKEL, h)
    ev.expect_each('period 1, -1, -1, 0', h.indices(), lambda k: C3_PERIOD[k % 4],
                   lambda k: h[k])


def _mod2_periodic(ev, label, factory, printed):
    n = ev.n_max(len(printed))
    N = _order(n)
    x = x_series(N)
    reciprocal = _at_power(factory, N, 2).recip()
    readings = (('literal 1 - x(1 - x/f(x^2))', 1 - x + x * x * reciprocal),
                ('sign-corrected 1 - x - x^2/f(x^2)', 1 - x - x * x * reciprocal))
    h = _hankel_reading(ev, label, readings, printed, n)
    ev.expect_prefix('printed Hankel prefix', printed, h)
    ev.expect_each('Hankel mod 2 against 1, 0, 1, 1, 1, 1, 0, 1', h.indices(),
                   lambda k: MOD2_PERIOD[k % 8], lambda k: h[k] % 2)


@check('C3b-mod2-catalan', alias='C3b')
def catalan_mod2_periodic(ev):
    """Hankel(1 - x - x^2/c(x^2)) mod 2 is periodic 1, 0, 1, 1, 1, 1, 0, 1."""
    _mod2_periodic(ev, 'Catalan reading', catalan_series, C3B_HANKEL)


@check('C4-mod2-periodic', alias='C4')
def rueppel_mod2_periodic(ev):
    """Hankel(1 - x - x^2/r(x^2)) mod 2 is periodic 1, 0, 1, 1, 1, 1, 0, 1."""
    _mod2_periodic(ev, 'Rueppel reading', rueppel_series, C4_HANKEL)


@check('C5-A005811-signed', alias='C5')
def signed_runs_shifted_up(ev):
    """|Hankel(x + 1/r(x^2))| = A005811(n+1)."""
    n = ev.n_max(len(C5_HANKEL))
    N = _order(n)
    s = x_series(N) + _at_power(rueppel_series, N, 2).recip()
    ev.expect_prefix('printed expansion', C5_EXPANSION, s)
    h = _hankel(s, n)
    ev.expect_prefix('printed Hankel prefix', C5_HANKEL, h)
    _signed_match(ev, 'A005811(n+1) in absolute value', h, 'A005811', shift=1)


@check('C6-A005811-shift', alias='C6')
def signed_runs_shifted_down(ev):
    """|Hankel(1 - x + x^2/(1 - x^2 r(x^2)))| = A005811(n-1) from n = 1."""
    n = ev.n_max(len(C6_HANKEL))
    N = _order(n)
    x = x_series(N)
    s = 1 - x + x * x * _gap_series(ev, N)
    ev.expect_prefix('printed expansion', C6_EXPANSION, s)
    h = _hankel(s, n)
    ev.expect_prefix('printed Hankel prefix', C6_HANKEL, h)
    _signed_match(ev, 'A005811(n-1) in absolute value', h, 'A005811', shift=-1, start=1)


@check('C7-s-squared', alias='C7')
def quadratic_in_second_term(ev):
    """Hankel(1 + s x + x^2/(1 - x^2 r(x^2))) = A + s^2 B, and the same for c(x^2)."""
    n = ev.n_max(len(C7_A))
    N = _order(n)
    A, B = _quadratic_in_s(ev, 'Rueppel decomposition', _gap_series(ev, N), n)
    ev.expect_prefix('printed A', C7_A, A)
    ev.expect_prefix('printed B', C7_B, B)
    agreeing = 0
    for value, printed in zip(A, C7_S_ZERO):
        if value != printed:
            break
        agreeing += 1
    ev.note('s = 0 transform agrees with the long printed list on %d of %d terms',
            agreeing, min(len(A), len(C7_S_ZERO)))

    A, B = _quadratic_in_s(ev, 'Catalan decomposition', _at_power(catalan_series, N, 2), n)
    ev.expect_prefix('printed Catalan A', C7_CATALAN_A, A)
    ev.expect_prefix('printed Catalan B', C7_CATALAN_B, B)


@check('C-J-aux', alias='CJ')
def auxiliary_jacobi_fraction(ev):
    """J-fraction of 1 + x/(1 - x^2 r(x^2)); its Hankel transform is (-1)^binom(n+1,2)."""
    n = ev.n_max()
    depth = max(n, len(CJ_ALPHAS))
    N = required_coefficients(depth)
    s = 1 + x_series(N) * _gap_series(ev, N)
    ev.expect_prefix('printed expansion', CJ_EXPANSION, s)

    fraction = jacobi_expand(s, depth)
    ev.expect_prefix('printed alphas', CJ_ALPHAS, fraction.alphas)
    if fraction.terminated_at is not None:
        ev.fail(fraction.terminated_at, -1, 0, 'betas')
        return
    ev.expect_each('betas', range(1, n + 1), lambda k: -1, lambda k: fraction.betas[k - 1])

    h = _hankel(s, n)
    ev.expect_each('(-1)^binom(n+1,2)', h.indices(), lambda k: (-1) ** comb(k + 1, 2),
                   lambda k: h[k])
    ev.expect_prefix('product over the betas', list(h),
                     hankel_from_jacobi(fraction.a0, fraction.betas, n))


def _c8_readings(factory, N):
    x = x_series(N)
    x2 = x * x
    f2 = _at_power(factory, N + 1, 2)
    denominator = (1 - x2 * f2.truncate(N)).recip()
    return (('literal (1 - (x^2 - x) f(x^2)(x - x^2))/(1 - x^2 f(x^2))',
             (1 - (x2 - x) * f2.truncate(N) * (x - x2)) * denominator),
            ('(1 - (x^2 - x) f(x^2))/(1 - x^2 f(x^2))',
             (1 - (x2 - x) * f2.truncate(N)) * denominator),
            ('1 + (f(x^2) - 1)/x', 1 + (f2 - 1).divide_by_x(1)))


@check('C8-A088748-sqrt', alias='C8')
def square_roots_of_even_terms(ev):
    """sqrt|h_2n| = A088748(n) for the calibrated reading of the r(x^2) quotient."""
    n = ev.n_max(2 * len(C8_ROOTS) - 1)
    N = _order(n)
    rueppel = _c8_readings(rueppel_series, N)
    catalan = _c8_readings(catalan_series, N)

    chosen = None
    for (name, s), (_, t) in zip(rueppel, catalan):
        if all(s[k] == v for k, v in enumerate(C8_EXPANSION)) and \
                all(t[k] == v for k, v in enumerate(C8_CATALAN_EXPANSION)):
            ev.note('using the reading %s', name)
            chosen = (s, t)
            break
    if chosen is None:
        ev.note('no reading reproduces both printed expansions')
        chosen = (rueppel[0][1], catalan[0][1])
    s, t = chosen
    ev.expect_prefix('printed expansion', C8_EXPANSION, s)
    ev.expect_prefix('printed Catalan expansion', C8_CATALAN_EXPANSION, t)
    ev.expect_prefix('printed Catalan Hankel prefix', C8_CATALAN_HANKEL,
                     _hankel(t, len(C8_CATALAN_HANKEL) - 1))

    h = _hankel(s, n)
    ev.expect_prefix('printed Hankel prefix', C8_HANKEL, h)
    roots = []
    for k in range(0, n + 1, 2):
        root = isqrt(abs(h[k]))
        if root * root != abs(h[k]):
            ev.fail(k, 'a perfect square', h[k], 'even-indexed terms')
            return
        roots.append(root)
    roots = Sequence(roots)
    ev.expect_prefix('printed square roots', C8_ROOTS, roots)
    _matches_target(ev, 'square roots against A088748', roots, 'A088748')
    ev.expect_prefix('square roots against the paper-folding partial sums',
                     a088748_terms(len(roots)), roots)
    odd = sorted(set(h[k] for k in range(1, n + 1, 2)))
    ev.note('odd-indexed terms take the values %s', odd)


###########################
#  Generalized Rueppel    #
###########################


@check('C9-sbc', limit=CFRAC_POLY, default=16, extended=64, alias='C9')
def sbc_parameter_pattern(ev):
    """S-parameters of r_{b,c} follow the 8-periodic pattern with paper-folding signs."""
    depth = ev.depth
    fold = _fixture('A014577')
    fraction = stieltjes_expand(rueppel_bc_series(required_coefficients(depth)), depth)
    indices = [m for m in range(fraction.depth) if m // 8 in fold]
    ev.expect_each('8-periodic pattern', indices, lambda m: _sbc_parameter(m, fold),
                   lambda m: fraction.alphas[m])
    if fraction.depth < depth:
        ev.give_up(fraction.depth, 'S-fraction of r_{b,c} is finite at depth %d'
                   % fraction.depth)

    agreeing = [m for m in indices if same_value(fraction.alphas[m], _sbc_closed_form(m, fold))]
    missing = [m for m in indices if m not in agreeing]
    ev.note('exploratory closed form agrees on %d of %d parameters, first disagreement %s',
            len(agreeing), len(indices), missing[0] if missing else 'none')

    for label, printed, c in (('printed S-fraction of r_{b,1}', RB1_PARAMETERS, 1),
                              ('printed S-fraction of r_b', RB_PARAMETERS, B)):
        special = stieltjes_expand(
            rueppel_bc_series(required_coefficients(len(printed)), b=B, c=c), len(printed))
        ev.expect_prefix(label, printed, special.alphas)

    N = len(RBC_TAIL) + 8
    s = rueppel_bc_series(N + 1)
    tail = tail_series(s)
    ev.expect_prefix('printed tail of r_{b,c}', RBC_TAIL, tail)
    numerator = [0] * N
    numerator[0] = 1
    for k in range(2, N.bit_length() + 2):
        if 2 ** k - 2 < N:
            numerator[2 ** k - 2] = B / C
    quotient = Series(numerator, N) * s.truncate(N).recip()
    ev.expect_prefix('tail against its closed quotient', list(quotient), tail)


@check('C9-hankel', limit=HANKEL_POLY, default=9, extended=10)
def sbc_hankel_prefix(ev):
    """Hankel(r_{b,c}) starts 1, -c^2, -b^2, b^4, b^4, -b^4 c^2, ..."""
    n = ev.depth
    h = _hankel(rueppel_bc_series(_order(n)), n)
    ev.expect_prefix('printed Poly2 prefix', RBC_HANKEL[:n + 1], h)
    if n + 1 < len(RBC_HANKEL):
        ev.note('printed terms %d to %d lie beyond depth %d', n + 1, len(RBC_HANKEL) - 1, n)
    for b, c in ((1, 1), (2, 3)):
        specialized = _hankel(rueppel_bc_series(_order(n), b=b, c=c), n)
        ev.expect_each('specialization b = %d, c = %d' % (b, c), h.indices(),
                       lambda k: _specialize(h[k], b, c), lambda k: specialized[k])


###########################
#      Propositions       #
###########################


@check('P1-sign-alternation', alias='P1')
def sign_alternation(ev):
    """Sequences a_n and (-1)^n a_n share their Hankel transform."""
    n = ev.n_max(len(P1_ALTERNATED))
    N = _order(n)
    x = x_series(N)
    plain = 1 - x * rueppel_series(N)
    alternated = 1 + x - x * x * _at_power(rueppel_series, N, 2)
    ev.expect_prefix('1 + x - x^2 r(x^2) = 1 - x r(x) + 2x', list(plain + 2 * x), alternated)

    h_plain = _hankel(plain, n)
    h_alternated = _hankel(alternated, n)
    ev.expect_prefix('printed Hankel of 1 - x r(x)', P1_PLAIN, h_plain)
    ev.expect_prefix('printed Hankel of 1 + x - x^2 r(x^2)', P1_ALTERNATED, h_alternated)
    ev.expect_prefix('equal Hankel transforms', list(h_plain), h_alternated)

    rng = random.Random(RANDOM_SEED)
    order = min(n, P1_ORDER)
    for trial in range(100):
        terms = [rng.randint(-5, 5) for _ in range(2 * order + 1)]
        flipped = [(-1) ** k * v for k, v in enumerate(terms)]
        if not ev.expect_prefix('random sequence %d' % trial, list(_hankel(terms, order)),
                                _hankel(flipped, order)):
            break


@check('P2-riordan', alias='P2')
def riordan_tail_array(ev):
    """Coefficient array of the tail of r_b is the Riordan array (r(x^2), -x r(x^2))."""
    N = max(ev.depth, len(ROW_SUMS))
    tail = tail_series(rueppel_bc_series(N + 1, b=B, c=B))
    ev.expect_prefix('printed tail of r_b', RB_TAIL, tail)

    array = coeff_array(tail)
    for k, row in enumerate(P2_ROWS):
        ev.expect_prefix('printed row %d' % k, row, array.rows[k], start=0)

    g = _at_power(rueppel_series, N, 2)
    f = -x_series(N) * g
    matrix = riordan_build(g, f, N)
    block = array.block(N, N)
    for k in range(N):
        if block[k] != matrix[k]:
            ev.fail(k, ', '.join(map(str, matrix[k])), ', '.join(map(str, block[k])),
                    'coefficient array against the Riordan array')
            break
    ev.expect_prefix('bivariate generating function', list(bivariate_gf(g, f, N)), tail)

    row_sums = Sequence([sum(row) for row in matrix])
    ev.expect_prefix('printed row sums', ROW_SUMS, row_sums)
    ev.expect_prefix('row sums through the fundamental theorem', row_sums,
                     RiordanPair(g, f).apply(geometric_series(N)))
    shifted = rueppel_series(N + 1).shift(-1).to_sequence()
    ev.expect_prefix('row sums as INVERT(-1) of r(n+1)', row_sums,
                     invert_transform(shifted, -1))

    M = max(N, _order(len(ROW_SUM_HANKEL)))
    quotient = _at_power(rueppel_series, M, 2) * rueppel_series(M).recip()
    ev.expect_prefix('row sums as r(x^2)/r(x)', row_sums, quotient)
    ev.expect_prefix('printed Hankel of the row sums', ROW_SUM_HANKEL,
                     _hankel(quotient, len(ROW_SUM_HANKEL) - 1))


@check('P3-stretched-riordan', alias='P3')
def stretched_riordan_tail_array(ev):
    """Tail array of r_{b,1} is (-1/(1+x), -x^3 r(x^4)/(1+x)) with its first row removed."""
    N = max(ev.depth, len(P3_ROWS))
    tail = tail_series(rueppel_bc_series(N + 1, b=B, c=1))
    ev.expect_prefix('printed tail of r_{b,1}', RB1_TAIL, tail)

    array = coeff_array(tail)
    for k, row in enumerate(P3_ROWS):
        ev.expect_prefix('printed row %d' % k, row, array.rows[k])

    x = x_series(N + 1)
    g = -(1 + x).recip()
    f = -(x * x * x) * _at_power(rueppel_series, N + 1, 4) * (1 + x).recip()
    matrix = strip_first_row(riordan_build(g, f, N + 1))
    block = array.block(N, N + 1)
    for k in range(N):
        if block[k] != matrix[k]:
            ev.fail(k, ', '.join(map(str, matrix[k])), ', '.join(map(str, block[k])),
                    'coefficient array against the stretched Riordan array')
            break
    ev.note('stretch of the array: %d', RiordanPair(g, f).stretch)


###########################
#  Differences, products  #
###########################


def _square_root_difference(ev, label, terms, n_max):
    """|h_n|^2 = ||H_{n+1}| - |H_n|| for H = Hankel(1 - a_n), h = Hankel(a_{n+1} - a_n)."""
    complement = [1 - a for a in terms]
    differences = [b - a for a, b in zip(terms, terms[1:])]
    H = _hankel(complement, n_max + 1)
    h = _hankel(differences, n_max)
    negative = []
    for k in h.indices():
        gap = abs(H[k + 1]) - abs(H[k])
        if gap < 0:
            negative.append(k)
        if h[k] ** 2 != abs(gap):
            return ev.fail(k, abs(gap), h[k] ** 2, label)
    if negative:
        ev.note('%s: literal radicand |H_{n+1}| - |H_n| is negative at %s; '
                'compared in absolute value', label, ', '.join(map(str, negative)))
    else:
        ev.note('%s: literal radicand is nonnegative to depth %d', label, n_max)
    return True


@check('C10-sqrt-diff', alias='C10')
def square_root_of_differences(ev):
    """
    |h_n| = sqrt(||H_{n+1}| - |H_n||) for 1 - a_n and a_{n+1} - a_n.

    The literal radicand |H_{n+1}| - |H_n| goes negative, first at n = 2 for
    Rueppel. The pass holds for its absolute value and each negative index is noted.
    """
    n = ev.n_max()
    N = _order(n + 1) + 1
    _square_root_difference(ev, 'Rueppel', list(rueppel_series(N)), n)
    _square_root_difference(ev, 'Catalan', list(catalan_series(N)), n)
    _square_root_difference(ev, 'Motzkin', list(motzkin_series(N)), n)


@check('C11-product', alias='C11')
def hankel_product(ev):
    """(1 + (-1)^n h_n H_n)/2 = A268411(n+1) for h = Hankel(r_n), H = Hankel(r_{n+1})."""
    n = ev.n_max()
    r = rueppel_series(_order(n) + 1)
    h = _hankel(r, n)
    H = _hankel(r.shift(-1), n)
    values = []
    for k in h.indices():
        value = Fraction(1 + (-1) ** k * h[k] * H[k], 2)
        if value.denominator != 1:
            ev.fail(k, 'an integer', value, 'product parity')
            return
        values.append(int(value))
    _matches_target(ev, 'against A268411(n+1)', Sequence(values), 'A268411', shift=1)


###########################
#       Regressions       #
###########################


@check('R-regressions', alias='R')
def printed_regressions(ev):
    """Printed Hankel transforms, expansions and identities of the Catalan and Rueppel families."""
    n = ev.n_max(20)
    N = _order(n)
    x = x_series(N)
    r = rueppel_series(N)
    c = catalan_series(N)
    r2 = _at_power(rueppel_series, N, 2)
    c2 = _at_power(catalan_series, N, 2)

    ev.expect_prefix('r(x) = 1 + x r(x^2)', list(1 + x * r2), r)
    ev.expect_prefix('r(x^2) = (r(x) - 1)/x', list((r - 1).divide_by_x(1)), r2)
    ev.expect_prefix('r(x) = c(x) mod 2', [v % 2 for v in c], r)
    ev.expect_prefix('tail of r', (1, -1, 2, -3, 4, -6, 10, -15), tail_series(r))
    ev.expect_prefix('printed Motzkin numbers', (1, 1, 2, 4, 9, 21, 51, 127), motzkin_series(N))

    h_r = _hankel(r, n)
    ev.expect_each('Hankel(r) = (-1)^binom(n+1,2)', h_r.indices(),
                   lambda k: (-1) ** comb(k + 1, 2), lambda k: h_r[k])
    h_c = _hankel(c, n)
    ev.expect_each('Hankel(c) = 1', h_c.indices(), lambda k: 1, lambda k: h_c[k])

    h_1xc = _hankel(1 - x * c, n)
    ev.expect_each('Hankel(1 - x c) = (-1)^n (n+1)', h_1xc.indices(),
                   lambda k: (-1) ** k * (k + 1), lambda k: h_1xc[k])
    h_1xr = _hankel(1 - x * r, n)
    ev.expect_prefix('printed Hankel(1 - x r)', P1_PLAIN, h_1xr)
    ev.expect_each('Hankel(1 - x r) = Hankel(1 - x c) mod 2', h_1xr.indices(),
                   lambda k: h_1xc[k] % 2, lambda k: h_1xr[k] % 2)

    fine = (1 + x * c).recip()
    ev.expect_prefix('printed expansion of 1/(1 + x c)',
                     (1, -1, 0, -1, -2, -6, -18, -57, -186, -622, -2120), fine)
    _matches_target(ev, '1/(1 + x c) against A126983', fine.to_sequence(), 'A126983',
                    partial=True)
    h_fine = _hankel(fine, n)
    # 1/(1 + x c) = 1/(1 + x + x^2 c^2): beta_1 = -1, then the betas of c^2
    ev.expect_each('Hankel(1/(1 + x c)) = (-1)^n', h_fine.indices(), lambda k: (-1) ** k,
                   lambda k: h_fine[k])
    ev.note('Hankel(1/(1 + x c)) is 1, 1, 1, ... in absolute value only')
    ev.expect_prefix('printed expansion of 1/(1 + x r)',
                     (1, -1, 0, 1, -2, 2, 0, -3, 4, -2, -2, 6, -6, 0, 8, -11),
                     (1 + x * r).recip())

    s = 1 - x + x * x * c2
    ev.expect_prefix('printed expansion of 1 - x + x^2 c(x^2)',
                     (1, -1, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0), s)
    h = _hankel(s, n)
    ev.expect_each('Hankel(1 - x + x^2 c(x^2)) = 1 - n', h.indices(), lambda k: 1 - k,
                   lambda k: h[k])

    s = 1 + x - x * x * c2
    ev.expect_prefix('printed expansion of 1 + x - x^2 c(x^2)',
                     (1, 1, -1, 0, -1, 0, -2, 0, -5, 0, -14, 0), s)
    ev.expect_prefix('printed Hankel(1 + x - x^2 c(x^2))', (1, -2, 3, -4, 5, -6), _hankel(s, 5))

    s = x + c2.recip()
    ev.expect_prefix('printed expansion of x + 1/c(x^2)',
                     (1, 1, -1, 0, -1, 0, -2, 0, -5, 0, -14, 0, -42, 0), s)
    h = _hankel(s, n)
    ev.expect_each('Hankel(x + 1/c(x^2)) = (-1)^n (n+1)', h.indices(),
                   lambda k: (-1) ** k * (k + 1), lambda k: h[k])

    s = 1 - x * c2.recip()
    ev.expect_prefix('printed expansion of 1 - x/c(x^2)', (1, -1, 0, 1, 0, 1, 0, 2, 0, 5, 0), s)
    ev.expect_prefix('printed Hankel(1 - x/c(x^2))',
                     (1, -1, -1, 4, 1, -9, -1, 16, 1, -25, -1, 36, 1, -49, -1, 64, 1, -81, -1,
                      100),
                     _hankel(s, 19))

    hilbert = [Fraction(1, k + 1) for k in range(7)]
    ev.expect_prefix('Hilbert determinants',
                     (1, Fraction(1, 12), Fraction(1, 2160), Fraction(1, 6048000)),
                     _hankel(hilbert, 3))


@check('R-cfrac-parameters', alias='RCF')
def continued_fraction_parameters(ev):
    """Printed S- and J-fraction parameters and their A088567 / A110036 relations."""
    n = ev.n_max()
    squash = _fixture('A088567')
    negated = _fixture('A110036')

    depth = max(n, 20)
    r = rueppel_series(required_coefficients(depth))
    s_fraction = stieltjes_expand(r, depth)
    ev.expect_prefix('printed S-fraction of r',
                     (1, -1, -1, 1, -1, 1, -1, 1, 1, -1, 1),
                     s_fraction.alphas)
    indices = _available(ev, squash, 'A088567', range(n), 2)
    ev.expect_each('S-parameters of r = 2 (A088567(n+2) mod 2) - 1', indices,
                   lambda m: 2 * (squash[m + 2] % 2) - 1, lambda m: s_fraction.alphas[m])

    depth = max(n, 15)
    j_fraction = jacobi_expand(rueppel_series(required_coefficients(depth)), depth)
    ev.expect_prefix('printed J-fraction alphas of r',
                     (1, -2, 0, 0, 2, 0, -2, 0, 2, -2, 0), j_fraction.alphas)
    ev.expect_each('J-fraction betas of r', range(len(j_fraction.betas)), lambda k: -1,
                   lambda k: j_fraction.betas[k])
    indices = _available(ev, negated, 'A110036', range(n), 1)
    ev.expect_each('J-alphas of r = -A110036(n+1)', indices, lambda k: -negated[k + 1],
                   lambda k: j_fraction.alphas[k])
    indices = _available(ev, squash, 'A088567', range(n - 1), 2)
    ev.expect_each('|J-alpha(n+1)| = 2 (A088567(n+2) mod 2)', indices,
                   lambda k: 2 * (squash[k + 2] % 2), lambda k: abs(j_fraction.alphas[k + 1]))

    depth = max(n, 10)
    N = required_coefficients(depth)
    x = x_series(N)
    one_minus_xc = 1 - x * catalan_series(N)
    one_minus_xr = 1 - x * rueppel_series(N)
    F = Fraction
    ev.expect_prefix('printed S-fraction of 1 - x c',
                     (-1, 2, F(1, 2), F(3, 2), F(2, 3), F(4, 3), F(3, 4), F(5, 4)),
                     stieltjes_expand(one_minus_xc, depth).alphas)
    fraction = jacobi_expand(one_minus_xc, depth)
    ev.expect_prefix('printed J-fraction alphas of 1 - x c',
                     (-1, F(5, 2), F(13, 6), F(25, 12), F(41, 20), F(61, 30)), fraction.alphas)
    ev.expect_prefix('printed J-fraction betas of 1 - x c',
                     (-2, F(3, 4), F(8, 9), F(15, 16), F(24, 25), F(35, 36)), fraction.betas)
    ev.expect_prefix('printed S-fraction of 1 - x r',
                     (-1, 2, F(-1, 2), F(-3, 2), F(2, 3), F(-2, 3), F(3, 2), F(-3, 2), F(2, 3),
                      F(4, 3)),
                     stieltjes_expand(one_minus_xr, 10).alphas)
    fraction = jacobi_expand(one_minus_xr, 6)
    ev.expect_prefix('printed J-fraction alphas of 1 - x r',
                     (-1, F(3, 2), F(-5, 6), F(5, 6), F(-5, 6), F(7, 12)), fraction.alphas)
    ev.expect_prefix('printed J-fraction betas of 1 - x r',
                     (-2, F(3, 4), F(-4, 9), F(-9, 4), F(8, 9), F(-9, 16)), fraction.betas)

    fraction = jacobi_expand(catalan_series(N), depth)
    ev.expect_each('J-fraction of c', range(depth), lambda k: 1 if k == 0 else 2,
                   lambda k: fraction.alphas[k])
    ev.expect_each('J-fraction betas of c', range(depth), lambda k: 1,
                   lambda k: fraction.betas[k])


@check('R-catalog-fixtures', alias='RCAT')
def catalog_against_fixtures(ev):
    """Every catalog sequence matches its fixture, its second derivation and its printed prefix."""
    for seq_id, entry in CATALOG.items():
        report = compare(catalog_terms(seq_id, FIXTURE_TERMS), fetch_bfile(seq_id))
        if not report.matched:
            index, expected, actual = report.first_mismatch
            ev.fail(index, expected, actual, '%s against its fixture' % seq_id)
        disagreement = cross_check(seq_id, FIXTURE_TERMS)
        if disagreement is not None:
            ev.fail(disagreement, entry.oracle_terms(FIXTURE_TERMS)[disagreement],
                    catalog_terms(seq_id, FIXTURE_TERMS)[disagreement],
                    '%s against its second derivation' % seq_id)
        mismatch = printed_mismatch(seq_id)
        if mismatch is not None:
            ev.fail(mismatch, entry.printed_sequence()[mismatch],
                    catalog_terms(seq_id, FIXTURE_TERMS)[mismatch],
                    '%s against its printed prefix' % seq_id)

    pipeline = josephus_pipeline(len(MARKED_PRINTED))
    ev.expect_prefix('printed marked complement', MARKED_PRINTED, pipeline.marked)
    ev.expect_prefix('printed doubled complement', DOUBLED_PRINTED, pipeline.doubled)
    for seq_id, shift in calibrated_closed_forms().items():
        ev.note('%s closed form calibrated with index shift %d', seq_id, shift)


###########################
#  Continued-fraction     #
#  Hankel products        #
###########################


@check('A-jacobi-product', default=12, extended=32, alias='AJ')
def jacobi_product(ev):
    """Hankel determinants of a J-fraction series equal a0^(n+1) prod beta_k^(n+1-k)."""
    depth = max(ev.depth, 1)
    rng = random.Random(RANDOM_SEED)
    for trial in range(50):
        a0 = rng.choice((-2, -1, 1, 2))
        alphas = [rng.randint(-3, 3) for _ in range(depth)]
        betas = [rng.choice((-3, -2, -1, 1, 2, 3)) for _ in range(depth)]
        s = jacobi_eval(JFraction(a0, alphas, betas), 2 * depth + 1)
        expected = hankel_from_jacobi(a0, betas, depth)
        if not ev.expect_prefix('random J-fraction %d' % trial, list(expected),
                                _hankel(s, depth)):
            break


@check('A-stieltjes-product', alias='AS')
def stieltjes_product(ev):
    """Hankel determinants of an S-fraction series from products of parameter pairs."""
    n = ev.n_max()
    ev.note('exponent pattern: %s', calibrated_stieltjes_pattern())
    N = required_coefficients(2 * n + 2)
    x = x_series(N)
    for label, s in (('r', rueppel_series(N)), ('c', catalan_series(N)),
                     ('1 - x c', 1 - x * catalan_series(N))):
        fraction = stieltjes_expand(s, 2 * n + 2)
        h = _hankel(s, n)
        if not ev.expect_each('S-fraction product for %s' % label, h.indices(),
                              lambda k: hankel_from_stieltjes(fraction.a0, fraction.alphas,
                                                              k + 1),
                              lambda k: h[k]):
            break
