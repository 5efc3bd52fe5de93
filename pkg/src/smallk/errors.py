"""Exception hierarchy.

Everything the engine raises for a mathematically meaningless request derives
from :class:`DomainError`; the CLI maps those to exit status 1.
"""


class DomainError(ValueError):
    """Input is well formed but outside the domain of the computation."""


class UnsupportedType(DomainError):
    pass


class NotGenuine(DomainError):
    pass


class CapExceeded(DomainError):
    pass


class ChamberError(DomainError):
    pass


class PoleError(DomainError):
    pass
