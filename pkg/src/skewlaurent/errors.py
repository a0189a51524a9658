"""Exception hierarchy shared by every layer of the package."""


class UsageError(ValueError):
    """An operation was called with arguments outside its contract."""


class FieldMismatchError(UsageError):
    """Operands live in different coefficient fields."""


class DomainError(ArithmeticError):
    """A mathematically undefined request, e.g. inverting zero."""
