"""Exception hierarchy.

Input-shaped errors also derive from ValueError so that callers validating
configuration can catch them the same way as schema errors.
"""

from typing import Any


class TwistmatError(Exception):
    """Base class for every error raised by twistmat."""


class SpecMismatch(TwistmatError, ValueError):
    """Operands live over different rings, index sets or quotients."""


class DenominatorNotInvertible(TwistmatError, ValueError):
    """A denominator has a factor outside the inverted generators."""


class NotAUnit(TwistmatError, ValueError):
    """An element required to be invertible is not."""


class UnsupportedSpec(TwistmatError, ValueError):
    """The operation is not implemented for this ring spec."""


class IdealNotCoprime(TwistmatError, ValueError):
    """Reduction modulo an ideal would send an inverted generator to zero."""


class IndexOutOfPattern(TwistmatError, ValueError):
    """A matrix position violates the S_n^I pattern."""


class IncompatibleQuotient(TwistmatError, ValueError):
    """The quotient does not apply to this (n, I)."""


class TooLarge(TwistmatError):
    """An enumeration would exceed the configured limit."""

    def __init__(self, size: int, limit: int, what: str = "group") -> None:
        super().__init__(f"{what} has {size} elements, limit is {limit} (set TWISTMAT_LIMIT to raise it)")
        self.size = size
        self.limit = limit


class IncompatibleAtom(TwistmatError, ValueError):
    """An automorphism atom cannot act on the given element."""


class BadUnit(TwistmatError, ValueError):
    """A unit parameter is outside the allowed range."""


class NGViolated(TwistmatError, ValueError):
    """The index set fails the (NG) condition where it is required."""


class KernelNotInvariant(TwistmatError):
    """An automorphism does not preserve the kernel of a quotient."""

    def __init__(self, message: str, generator: Any = None) -> None:
        super().__init__(message)
        self.generator = generator


class NotAnAutomorphism(TwistmatError):
    """A map supplied as an automorphism is not one."""


class ParameterNotFixed(TwistmatError):
    """A fixed-family parameter is moved by the automorphism."""

    def __init__(self, message: str, parameter: Any = None) -> None:
        super().__init__(message)
        self.parameter = parameter


class PreconditionUnmet(TwistmatError, ValueError):
    """Preconditions of a certificate or check do not hold."""
