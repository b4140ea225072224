"""
 Global exception registry
"""


class LabException(Exception):
    """
    Generic Exception wrapper
    """

    exit_code = 1

    def __init__(self, message, user_details=None, internal_details=None):
        """
        Create a new LabException

        :param message:             General exception message
        :param user_details:        Message to be shown to user
        :param internal_details:    Additional details provided by the system
        """
        self.message = message
        self.internal_details = internal_details
        if user_details is not None:
            self.user_details = user_details
        else:
            self.user_details = self.message

        super(LabException, self).__init__(message)

    def __str__(self):
        exception_str = super(LabException, self).__str__()
        details = dict((k, v) for k, v in self.__dict__.items() if v is not None)
        return '{0} {1}'.format(exception_str, details)

    def to_dict(self):
        """
        Convert this exception to a dict for serialization.
        """
        return {
            'error': self.user_details
        }


class UsageException(LabException):
    """
    Raised when the command line or an expression cannot be interpreted.
    """

    exit_code = 2

    def __init__(self, message, user_details=None, internal_details=None):
        super(UsageException, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class ConfigurationException(UsageException):
    """
    Raised when a configuration file holds unknown keys or badly typed values.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(ConfigurationException, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class VerificationFailure(LabException):
    """
    Raised by the command line when a registered check fails at the requested depth.
    """

    exit_code = 3

    def __init__(self, message, report=None, user_details=None, internal_details=None):
        self.report = report
        super(VerificationFailure, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#    Exact arithmetic     #
###########################


class InexactDivision(LabException):
    """
    Raised when an exact division in a ring leaves a remainder.
    """

    def __init__(self, message='Division is not exact in this ring.',
                 user_details=None, internal_details=None):
        super(InexactDivision, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class DivisionByZero(LabException):
    """
    Raised on division by the zero element of any ring.
    """

    def __init__(self, message='Division by zero.', user_details=None, internal_details=None):
        super(DivisionByZero, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class ZeroDenominator(LabException):
    """
    Raised when a rational function is built over the zero polynomial.
    """

    def __init__(self, message='Rational function with zero denominator.',
                 user_details=None, internal_details=None):
        super(ZeroDenominator, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class DegreeBoundExceeded(LabException):
    """
    Raised when a polynomial exponent in b or c exceeds the configured bound.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(DegreeBoundExceeded, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class RingMismatch(LabException):
    """
    Raised when two operands live in coefficient rings with no exact common ring.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(RingMismatch, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class UnexpectedVariable(LabException):
    """
    Raised when a polynomial in b alone was expected but c occurs.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(UnexpectedVariable, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#      Power series       #
###########################


class NonUnitConstantTerm(LabException):
    """
    Raised when a reciprocal is requested of a series whose constant term is not a unit.
    """

    def __init__(self, message='Constant term is not a unit.',
                 user_details=None, internal_details=None):
        super(NonUnitConstantTerm, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class InsufficientTruncation(LabException):
    """
    Raised when an operation would read coefficients beyond the trusted range.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(InsufficientTruncation, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#         Hankel          #
###########################


class NonSquare(LabException):
    """
    Raised when a determinant is requested of a non-square matrix.
    """

    def __init__(self, message='Matrix is not square.', user_details=None, internal_details=None):
        super(NonSquare, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class InsufficientTerms(LabException):
    """
    Raised when a sequence is too short for the requested Hankel order.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(InsufficientTerms, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#   Continued fractions   #
###########################


class SFractionBreakdown(LabException):
    """
    Raised when a Stieltjes expansion meets a zero parameter while the
    remaining series is nonzero.
    """

    def __init__(self, k, user_details=None, internal_details=None):
        self.k = k
        super(SFractionBreakdown, self).__init__(
            'S-fraction breakdown at parameter %d.' % k,
            user_details=user_details, internal_details=internal_details)


class JFractionTermination(LabException):
    """
    Signals a finite J-fraction: beta parameter k vanished.
    """

    def __init__(self, k, user_details=None, internal_details=None):
        self.k = k
        super(JFractionTermination, self).__init__(
            'J-fraction terminates at beta %d.' % k,
            user_details=user_details, internal_details=internal_details)


class InsufficientDepth(LabException):
    """
    Raised when a continued fraction is too shallow to determine the requested coefficients.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(InsufficientDepth, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#         Riordan         #
###########################


class BadOrder(LabException):
    """
    Raised when a Riordan pair has g(0) = 0 or f(0) != 0.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(BadOrder, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class BadLeadingTerm(LabException):
    """
    Raised when the INVERT transform is applied to a sequence not starting with 1.
    """

    def __init__(self, message='Sequence must start with 1.',
                 user_details=None, internal_details=None):
        super(BadLeadingTerm, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class TooSmall(LabException):
    """
    Raised when stripping a row from a matrix with fewer than two rows.
    """

    def __init__(self, message='Matrix needs at least two rows.',
                 user_details=None, internal_details=None):
        super(TooSmall, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#   Catalog and checks    #
###########################


class UnknownSequence(LabException):
    """
    Raised when retrieving a sequence that is not in the catalog.
    """

    def __init__(self, seq_id, user_details=None, internal_details=None):
        self.seq_id = seq_id
        super(UnknownSequence, self).__init__(
            'Unknown sequence %s.' % seq_id,
            user_details=user_details, internal_details=internal_details)


class UnknownCheck(LabException):
    """
    Raised when running a check id that is not registered.
    """

    def __init__(self, check_id, user_details=None, internal_details=None):
        self.check_id = check_id
        super(UnknownCheck, self).__init__(
            'Unknown check %s.' % check_id,
            user_details=user_details, internal_details=internal_details)


class DepthInfeasible(LabException):
    """
    Raised when a check is asked for a depth beyond its ring's feasible range.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(DepthInfeasible, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


###########################
#          OEIS           #
###########################


class FixtureMissing(LabException):
    """
    Raised when a b-file fixture is not shipped for the requested A-number.
    """

    def __init__(self, seq_id, user_details=None, internal_details=None):
        self.seq_id = seq_id
        super(FixtureMissing, self).__init__(
            'No fixture for %s.' % seq_id,
            user_details=user_details, internal_details=internal_details)


class NetworkUnavailable(LabException):
    """
    Raised when a b-file cannot be fetched over the network.
    """

    def __init__(self, message, user_details=None, internal_details=None):
        super(NetworkUnavailable, self).__init__(
            message, user_details=user_details, internal_details=internal_details)


class ParseError(LabException):
    """
    Raised on a malformed b-file line.
    """

    def __init__(self, line, user_details=None, internal_details=None):
        self.line = line
        super(ParseError, self).__init__(
            'Malformed b-file line %d.' % line,
            user_details=user_details, internal_details=internal_details)


class EmptyOverlap(LabException):
    """
    Raised when two sequences share no index to compare.
    """

    def __init__(self, message='No overlapping indices to compare.',
                 user_details=None, internal_details=None):
        super(EmptyOverlap, self).__init__(
            message, user_details=user_details, internal_details=internal_details)
