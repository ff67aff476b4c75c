"""Exception types shared across the package.

Everything derives from GrsHullError so callers can catch the package's
failures with a single except clause; the CLI maps these to exit code 1
(bad input) or 2 (method disagreement / broken invariant).
"""


class GrsHullError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(GrsHullError):
    """Field characteristic is not a prime number."""


class UnsupportedSize(GrsHullError):
    """Requested field order exceeds the supported bound (2^16)."""


class BadFormat(GrsHullError):
    """Element or polynomial text does not match the accepted grammar."""


class ExponentRange(GrsHullError):
    """Element text 'g^e' has an exponent outside 0..q-2."""


class BadParameters(GrsHullError):
    """Structural parameters violate a precondition (lengths, ranges, distinctness)."""


class OracleDisagreement(GrsHullError):
    """The two independent hull oracles produced different row spaces."""


class NegativeGamma(GrsHullError):
    """The shifted-column count of the matrix method is negative for this setup."""


class TheoremViolation(GrsHullError):
    """A sufficient condition promised a classification the oracle refutes."""


class BudgetExceeded(GrsHullError):
    """An enumeration would exceed its stated budget."""


class ConditionUnmet(GrsHullError):
    """A construction's degree-window or gcd condition does not hold."""


class RootOfSOnAlpha(GrsHullError):
    """The weight polynomial vanishes at an evaluation point, so weights cannot be formed."""


class NonSplitH(GrsHullError):
    """The point polynomial is not squarefree with all roots in the field."""


class SpecFileError(GrsHullError):
    """A code description file failed to parse; message carries the line number."""


class InternalInconsistency(GrsHullError):
    """An always-true algebraic identity failed, signalling a bug in the
    field or polynomial layers rather than bad input."""


class WitnessVerificationFailed(GrsHullError):
    """A dependency witness from the elimination bookkeeping failed its
    polynomial re-verification."""
