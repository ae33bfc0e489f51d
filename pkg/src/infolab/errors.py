"""Exception hierarchy.

Everything a caller can get wrong about a distribution or model derives
from :class:`ValidationError`; malformed input text raises
:class:`ParseError`.  The CLI maps the two families to distinct exit codes.
"""


class InfolabError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(InfolabError, ValueError):
    """Input parsed fine but violates a probabilistic precondition."""


class EmptyGrid(ValidationError):
    pass


class RaggedGrid(ValidationError):
    pass


class NegativeEntry(ValidationError):
    pass


class MassMismatch(ValidationError):
    """Total mass differs from 1; ``deficit`` is ``1 - total`` (exact)."""

    def __init__(self, total, what="grid"):
        self.total = total
        self.deficit = 1 - total
        kind = "excess" if total > 1 else "deficit"
        super().__init__(
            f"{what} sums to {total}, not 1 ({kind} {abs(self.deficit)})"
        )


class ZeroMarginal(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class StepInvalid(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class ImpossibleCiphertext(ValidationError):
    pass


class ParseError(InfolabError):
    """Text could not be read as a number, CSV grid or JSON document."""
