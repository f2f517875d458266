class NumberTheoryError(Exception):
    """Root of every error raised by the curve and verification code."""



class PreconditionError(NumberTheoryError, ValueError):
    pass


class DegenerateModelError(PreconditionError):
    pass


class BadReductionError(PreconditionError):
    pass


class DegreeCapError(PreconditionError):
    pass


class ConfigError(NumberTheoryError, ValueError):
    pass



class DivisibilityError(NumberTheoryError, ArithmeticError):
    pass


class CriterionInapplicableError(NumberTheoryError, ArithmeticError):
    pass


class HasseBoundError(NumberTheoryError, ArithmeticError):
    pass


class CountMismatchError(NumberTheoryError, ArithmeticError):
    pass



class ClaimError(NumberTheoryError, RuntimeError):
    """A named claim of the verification pipeline could not be established."""

    def __init__(self, claim, ell, cause):
        super().__init__(claim, ell, cause)
        self.claim = claim
        self.ell = ell
        self.cause = cause

    def __str__(self):
        return f"claim '{self.claim}' failed for ell={self.ell}: {self.cause}"
