"""Exception types shared across the kernel."""


class DomainError(ValueError):
    """A precondition of a public operation was violated."""


class ParseError(DomainError):
    """Malformed text for a permutation, partition, or polynomial."""


class NotGrassmannianError(DomainError):
    """Permutation has a descent away from the requested position."""


class OutOfRangeError(DomainError):
    """Numeric argument outside the range an operation supports."""


class TooManyPartsError(DomainError):
    """Partition has more parts than the context allows."""


class NotInSpanError(DomainError):
    """Polynomial is not an integer combination of the requested basis."""


class UnsupportedChainError(DomainError):
    """Ordered interval matches none of the implemented rules."""
