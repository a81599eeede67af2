"""Exception types shared across the package."""


class GainsLiftError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GainsLiftError):
    """Bad input data or an argument outside an operation's domain."""


class InfeasibleError(GainsLiftError):
    """A requested computation cannot be satisfied by the given data."""


class BudgetExhaustedError(GainsLiftError):
    """A bounded search ran out of budget without reaching a certified answer.

    Distinct from a certified "no counterexample exists" result, which is
    reported as a normal return value.
    """
