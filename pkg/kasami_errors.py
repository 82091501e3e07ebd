"""Exception hierarchy shared by the field, code, b-symbol and analysis modules."""

from __future__ import annotations


class KasamiError(ValueError):
    """Root of every domain error raised by this project."""


class InvalidM(KasamiError):
    """Raised when the field parameter m is below 2."""


class BadModulus(KasamiError):
    """Raised when a modulus override is reducible or not primitive."""


class NotInSubfield(KasamiError):
    """Raised when an element expected in GF(2^m) is not fixed by x -> x^q."""


class BetaNotInSubfield(NotInSubfield):
    """Raised when a codeword parameter beta lies outside GF(2^m)."""


class ParityViolation(KasamiError):
    """Raised when q^2 - 1 - S is odd or negative (a corrupted exponential sum)."""


class BOutOfRange(KasamiError):
    """Raised when a window length b or index j is outside its admissible range."""


class NonIntegerResult(ArithmeticError):
    """Raised when a quotient that must be exact is not an integer."""


class ScanTooLarge(KasamiError):
    """Raised when an exhaustive scan exceeds the configured size cap."""


class ZeroAlphaBeta(KasamiError):
    """Raised when an operation defined on F_{q^2}^* x F_q^* gets a zero parameter."""


class MbUndefined(KasamiError):
    """Raised when a bound needs m(b) but no admissible value exists."""


class NotABasis(KasamiError):
    """Raised when subfield elements are not a GF(2)-basis of GF(2^m)."""


class RankDeficient(KasamiError):
    """Raised when the shift matrix G_b(c0) has rank below b."""


class NotMinimumWeight(UserWarning):
    """Warned when a shortening seed is not of minimum nonzero b-symbol weight."""
