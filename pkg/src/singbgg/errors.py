"""Exception hierarchy shared by all modules."""


class SingBggError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(SingBggError):
    """Malformed Cartan data (bad family/rank combination)."""


class InputError(SingBggError):
    """Invalid user-supplied input (bad generator index, mixed groups, ...)."""


class DomainError(SingBggError):
    """A mathematical precondition of an operation is violated."""


class BudgetError(SingBggError):
    """An operation would enumerate more group elements than the budget allows."""
