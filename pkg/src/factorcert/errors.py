"""Exception hierarchy.

Everything user-facing derives from :class:`DomainError` so the CLI can map
mathematical domain violations to a dedicated exit code, distinct from plain
usage errors.
"""


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class ZeroPolynomialError(DomainError):
    """Operation undefined for the zero polynomial."""


class DegreeError(DomainError):
    """Polynomial degree outside the operation's domain."""


class RepeatedFactorError(DomainError):
    """Vanishing discriminant: the polynomial has a repeated factor."""


class HypothesisError(DomainError):
    """Evaluation point below the threshold where a bound is valid."""


class VacuousInputError(DomainError):
    """Inputs for which the requested enclosure is empty."""


class PolyParseError(DomainError):
    """Malformed polynomial text; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
