"""Exception types and enumeration guard rails shared across the package."""

DEFAULT_VERTEX_CAP = 10_000_000


class InvalidInputError(ValueError):
    """Arguments violate a documented precondition."""


class ResourceLimitError(RuntimeError):
    """An operation would enumerate past its configured cap."""


class ContractViolationError(RuntimeError):
    """A guaranteed internal invariant failed to hold."""


class BoundNotApplicableError(ValueError):
    """A bound formula was evaluated outside its valid range."""


def check_enumeration(count: int, cap: int, what: str = "vertices") -> None:
    if count > cap:
        raise ResourceLimitError(
            f"enumerating {count} {what} exceeds the configured cap of {cap}"
        )
