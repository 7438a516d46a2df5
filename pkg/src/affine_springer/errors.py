"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class SingularMatrixError(DomainError):
    """A matrix that must be invertible is singular, or not unimodular."""


class EliminationBudgetError(RuntimeError):
    """Cell extraction did not terminate within its step budget."""
