"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ContractError(ValueError):
    """An input violates a documented precondition (trace, dimension, ...)."""


class RankInstabilityError(RuntimeError):
    """Numerical rank of an evaluation matrix disagreed between two seeds."""
