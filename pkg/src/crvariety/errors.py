"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument violates an operation's mathematical precondition."""


class NotInXStar(DomainError):
    """The variety point has (numerically) real third coordinate, so it
    lies in the complex singular set and the chart systems degenerate."""


class DomainNotInP(DomainError):
    """A chart coordinate pair lies outside the strictly pseudoconvex
    domain P, so no variety point projects onto it."""


class NormalizationDegenerate(DomainError):
    """The leading triple of the quadruple lies on a C-circle (Cartan
    invariant +-pi/2), where the normal form's rotation step is undefined."""


class LeviDegenerate(DomainError):
    """Levi form requested on the CR singular set, where the generator of
    the CR structure vanishes."""


class HypothesisFailed(DomainError):
    """A verification theorem's hypothesis does not hold for the input."""

    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__(message or f"hypothesis violated: {clause}")


class SchemaError(ValueError):
    """Malformed JSON input on the command-line interface."""


class ConditioningWarning(UserWarning):
    """A computation is proceeding on badly conditioned input."""
