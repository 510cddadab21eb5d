"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedOrderError(ValueError):
    """The requested polyharmonic order is outside the validity range of a formula."""


class ContractError(TypeError):
    """A section kind / operator combination violates an operator contract."""
