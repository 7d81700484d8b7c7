"""Exception hierarchy shared by every module of the package."""


class FracDecError(Exception):
    """Base class for all package errors."""


# field construction and arithmetic
class NotPrime(FracDecError, ValueError):
    pass


class NotIrreducible(FracDecError, ValueError):
    pass


class BasisNotLinearlyIndependent(FracDecError, ValueError):
    pass


class DivisionByZero(FracDecError, ZeroDivisionError):
    pass


class FieldMismatch(FracDecError, ValueError):
    pass


# polynomials
class DuplicateAbscissa(FracDecError, ValueError):
    pass


class InexactDivision(FracDecError, ArithmeticError):
    pass


class ZeroPolynomial(FracDecError, ValueError):
    pass


# codes and projection schemes
class LengthExceedsField(FracDecError, ValueError):
    pass


class BadEvaluationSet(FracDecError, ValueError):
    pass


class DegreeTooHigh(FracDecError, ValueError):
    pass


class LengthMismatch(FracDecError, ValueError):
    pass


class SetsNotDisjoint(FracDecError, ValueError):
    pass


class InsufficientSets(FracDecError, ValueError):
    pass


class RowDimensionOverflow(FracDecError, ValueError):
    pass


class AlphaOutOfRange(FracDecError, ValueError):
    pass


class TooManyErrors(FracDecError, ValueError):
    pass


class DecodingFailure(FracDecError):
    """The decoder detected that it cannot produce a consistent codeword.

    ``reason`` is one of the stable tags in :data:`FAILURE_REASONS`; reports
    and the command line serialize it verbatim.
    """

    def __init__(self, reason: str, detail: str = ""):
        if reason not in FAILURE_REASONS:
            raise ValueError(f"unknown failure reason {reason!r}")
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)


class RowUnderdetermined(DecodingFailure):
    def __init__(self, detail: str = ""):
        super().__init__("row_underdetermined", detail)


class InconsistentOverdetermined(DecodingFailure):
    def __init__(self, detail: str = ""):
        super().__init__("inconsistent", detail)


class RecoveryFailure(DecodingFailure):
    """Raised by message recovery; reason is ``degree_bound`` or ``inexact_division``."""


FAILURE_REASONS = (
    "no_solution",
    "not_t_valid",
    "row_underdetermined",
    "inconsistent",
    "degree_bound",
    "inexact_division",
    "self_check",
)
