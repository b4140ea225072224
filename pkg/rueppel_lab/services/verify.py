"""
Registry and runner for the numbered checks. A check is a function taking an
Evidence collector; it computes its sequences to the requested depth, records
comparisons and notes, and the runner turns the evidence into a CheckReport.
The checks themselves live in rueppel_lab.services.conjectures.
"""
import logging
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Callable, Optional

from decorator import decorator

from rueppel_lab.config import Config
from rueppel_lab.exceptions import DepthInfeasible, LabException, UnknownCheck
from rueppel_lab.services.rings import RatFunc, format_value, simplify
from rueppel_lab.services.series import Sequence
from rueppel_lab.utils import map_jobs

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'

QUICK = 'quick'
DEFAULT = 'default'
EXTENDED = 'extended'
PROFILES = (QUICK, DEFAULT, EXTENDED)
QUICK_DEPTH = 4

# Config attribute bounding the depth of each kind of check
HANKEL_INT = 'HANKEL_DEPTH_INT'
HANKEL_POLY = 'HANKEL_DEPTH_POLY'
CFRAC_POLY = 'CFRAC_DEPTH_POLY'

REGISTRY = OrderedDict()
ALIASES = {}

###########################
#        Reports          #
###########################


def _plain(value):
    if value is None or isinstance(value, (int, str)):
        return value
    return format_value(value)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one check at one depth."""

    check_id: str
    depth_requested: int
    depth_reached: int
    status: str
    first_counterexample: Optional[tuple] = None
    notes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'notes', tuple(self.notes))
        if self.status not in (PASS, FAIL, INCONCLUSIVE):
            raise ValueError('Unknown status %s' % self.status)
        if (self.status == FAIL) != (self.first_counterexample is not None):
            raise ValueError('A report fails exactly when it carries a counterexample')
        if self.depth_reached > self.depth_requested:
            raise ValueError('Depth reached exceeds the requested depth')

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self):
        counterexample = None
        if self.first_counterexample is not None:
            index, expected, actual = self.first_counterexample
            counterexample = {'index': index,
                              'expected': _plain(expected),
                              'actual': _plain(actual)}
        return {
            'check_id': self.check_id,
            'depth_requested': self.depth_requested,
            'depth_reached': self.depth_reached,
            'status': self.status,
            'first_counterexample': counterexample,
            'notes': list(self.notes),
        }


@dataclass(frozen=True)
class SignProfile:
    """Sign word of an observed sequence matched in absolute value against a target."""

    target_id: str
    signs: Sequence
    abs_match: bool

    def word(self):
        return ''.join({1: '+', 0: '0', -1: '-'}[s] for s in self.signs)


def _sign(value):
    return (value > 0) - (value < 0)


def sign_profile(observed, target_id, target):
    """
    Compares |observed_n| with target_n over the indices both sequences hold.

    :param observed:    Sequence of integers
    :param target_id:   A-number of the target
    :param target:      Dict or Sequence of target values keyed by absolute index
    :return:            SignProfile over the observed indices
    """
    signs = observed.map(_sign)
    abs_match = all(abs(observed[n]) == target[n] for n in observed.indices())
    return SignProfile(target_id, signs, abs_match)


class Evidence(object):
    """
    Collects comparisons for one check. The first failed comparison becomes
    the report's counterexample; later ones are ignored.
    """

    def __init__(self, check_id, depth):
        self.check_id = check_id
        self.depth = depth
        self.reached = depth
        self.notes = []
        self.counterexample = None
        self.inconclusive = False

    def n_max(self, printed_length=0):
        """Largest index to compute: the depth, or the whole printed prefix if longer."""
        return max(self.depth, printed_length - 1)

    def note(self, text, *args):
        self.notes.append(text % args if args else text)

    def fail(self, index, expected, actual, label=None):
        if self.counterexample is None:
            self.counterexample = (index, expected, actual)
            if label:
                self.note('%s: first disagreement at %d', label, index)
        return False

    def give_up(self, index, reason):
        """Marks the evidence as stopping short of index."""
        self.inconclusive = True
        self.reached = min(self.reached, max(index - 1, 0))
        self.note(reason)

    def expect(self, condition, index, expected, actual, label=None):
        if not condition:
            return self.fail(index, expected, actual, label)
        return True

    def expect_prefix(self, label, expected, actual, start=0):
        """
        Termwise equality of `expected` against the leading terms of `actual`,
        both read from absolute index `start`.
        """
        actual = list(actual)
        for k, value in enumerate(expected):
            if k >= len(actual):
                return self.fail(start + k, value, None, label)
            if not same_value(actual[k], value):
                return self.fail(start + k, value, actual[k], label)
        return True

    def expect_each(self, label, indices, expected, actual):
        """expected(n) == actual(n) for every n in indices."""
        for n in indices:
            want, got = expected(n), actual(n)
            if not same_value(got, want):
                return self.fail(n, want, got, label)
        return True

    def record_signs(self, profile):
        self.note('signs against %s: %s', profile.target_id, profile.word())

    def report(self):
        if self.counterexample is not None:
            status = FAIL
        elif self.inconclusive:
            status = INCONCLUSIVE
        else:
            status = PASS
        return CheckReport(self.check_id, self.depth, min(self.reached, self.depth), status,
                           self.counterexample, self.notes)


def same_value(first, second):
    """Exact equality across rings, comparing rational functions by cross products."""
    if isinstance(first, RatFunc) or isinstance(second, RatFunc):
        return RatFunc.promote(first) == RatFunc.promote(second)
    return simplify(first) == simplify(second)


###########################
#        Registry         #
###########################


@dataclass(frozen=True)
class RegisteredCheck:
    check_id: str
    func: Callable
    limit: str
    default_depth: int
    extended_depth: int
    alias: Optional[str] = None
    description: str = ''

    def depth_limit(self):
        return getattr(Config, self.limit)

    def profile_depth(self, profile):
        if profile == QUICK:
            return QUICK_DEPTH
        if profile == EXTENDED:
            return min(self.extended_depth, self.depth_limit())
        return min(self.default_depth, self.depth_limit())


@decorator
def logged_check(func, *args, **kwargs):
    evidence = args[0]
    started = time.perf_counter()
    result = func(*args, **kwargs)
    logger.info('%s ran to depth %d in %.3fs', evidence.check_id, evidence.reached,
                time.perf_counter() - started)
    return result


def check(check_id, limit=HANKEL_INT, default=24, extended=32, alias=None):
    """
    Registers a check function under check_id (and its alias).

    :param check_id:    Registry id
    :param limit:       Config attribute holding the feasible depth bound
    :param default:     Depth of the default profile
    :param extended:    Depth of the extended profile
    :param alias:       Short name such as 'C1'
    """
    def register(func):
        wrapped = logged_check(func)
        doc = (func.__doc__ or '').strip().splitlines()
        REGISTRY[check_id] = RegisteredCheck(check_id, wrapped, limit, default, extended,
                                             alias, doc[0] if doc else '')
        if alias:
            ALIASES[alias.upper()] = check_id
        return wrapped
    return register


def _load_registry():
    import rueppel_lab.services.conjectures  # noqa: F401


def registered_checks():
    _load_registry()
    return list(REGISTRY.values())


def resolve_check(check_id):
    """
    Looks up a check by id or alias, case-insensitively for aliases.
    """
    _load_registry()
    if check_id in REGISTRY:
        return REGISTRY[check_id]
    key = str(check_id).upper()
    if key in ALIASES:
        return REGISTRY[ALIASES[key]]
    for registered_id in REGISTRY:
        if registered_id.upper() == key:
            return REGISTRY[registered_id]
    raise UnknownCheck(check_id, user_details='Known checks: %s' % ', '.join(REGISTRY))


###########################
#        Services         #
###########################


def run_check(check_id, depth=None):
    """
    Runs one registered check.

    :param check_id:    Registry id or alias
    :param depth:       Depth to check to (defaults to the check's default depth)
    :return:            CheckReport
    """
    registered = resolve_check(check_id)
    if depth is None:
        depth = registered.profile_depth(DEFAULT)
    limit = registered.depth_limit()
    if depth < 0 or depth > limit:
        raise DepthInfeasible('%s is feasible to depth %d, %d requested'
                              % (registered.check_id, limit, depth))

    evidence = Evidence(registered.check_id, depth)
    try:
        registered.func(evidence)
    except LabException as e:
        logger.warning('%s stopped: %s', registered.check_id, e.message)
        evidence.give_up(evidence.depth, 'computation stopped: %s' % e.message)
    return evidence.report()


def _profile_depths(depth_profile):
    depths = OrderedDict()
    for registered in registered_checks():
        if isinstance(depth_profile, int):
            depths[registered.check_id] = min(depth_profile, registered.depth_limit())
        else:
            depths[registered.check_id] = registered.profile_depth(depth_profile)
    return depths


def run_all(depth_profile=DEFAULT, jobs=1):
    """
    Runs every registered check.

    :param depth_profile:   'quick', 'default', 'extended' or one depth for every check
                            (clamped to each check's feasible bound)
    :param jobs:            Worker processes
    :return:                List of CheckReports in registry order
    """
    if not isinstance(depth_profile, int) and depth_profile not in PROFILES:
        raise ValueError('Unknown depth profile %s' % depth_profile)
    depths = _profile_depths(depth_profile)
    reports = map_jobs([(run_check, check_id, depth) for check_id, depth in depths.items()],
                       jobs)
    totals = summarize(reports)
    logger.info('Ran %d checks: %d passed, %d failed, %d inconclusive', totals['total'],
                totals[PASS], totals[FAIL], totals[INCONCLUSIVE])
    return reports


def summarize(reports):
    totals = OrderedDict([('total', 0), (PASS, 0), (FAIL, 0), (INCONCLUSIVE, 0)])
    for report in reports:
        totals['total'] += 1
        totals[report.status] += 1
    return totals
