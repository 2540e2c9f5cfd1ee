"""Exception types shared across the package."""


class InputError(ValueError):
    """A malformed or out-of-contract input (CLI exit code 2)."""


class ContractViolationError(RuntimeError):
    """An operation's promise was violated by its input (CLI exit code 1)."""


class BudgetExceededError(RuntimeError):
    """A bounded search or audit ran past its configured budget."""


class PrimeSearchExhaustedError(RuntimeError):
    """No good prime was found within the allotted budget."""


class AuditAnomalyError(RuntimeError):
    """The audited simulator observed an internally inconsistent guess survey."""
