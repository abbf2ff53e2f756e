"""Error hierarchy for foliamod.

Every error exposes a stable ``code`` (its class name) that the CLI writes
into report error logs, and the process ``exit_code`` it maps to.
"""

from __future__ import annotations

from typing import Optional


class FoliamodError(Exception):
    """Base class for all foliamod errors (internal failures, exit code 1)."""

    exit_code = 1

    @property
    def code(self) -> str:
        """Stable error-code string."""
        return type(self).__name__


class InputRejected(FoliamodError):
    """The input is degenerate or malformed (exit code 2)."""

    exit_code = 2


# -- numkernel ---------------------------------------------------------------


class ZeroPolynomial(InputRejected):
    """All coefficients are below the drop tolerance."""


class IdenticallyZeroResultant(InputRejected):
    """The resultant vanishes identically: the inputs share a factor."""


class NoConvergence(FoliamodError):
    """An iterative method hit its iteration cap."""


class SingularJacobian(FoliamodError):
    """A Newton step is ill-posed."""


# -- foliation ---------------------------------------------------------------


class NonIsolatedSingularities(InputRejected):
    """P and Q have a common polynomial factor."""


class DegenerateSingularity(InputRejected):
    """A singular point has a (numerically) vanishing determinant."""


class DicriticalAtInfinity(InputRejected):
    """The top-degree parts are radial; the line at infinity is not invariant."""


class LineNotInvariant(InputRejected):
    """The requested line is not invariant for the field."""


class DegreeOverflow(InputRejected):
    """A polynomial exceeds the degree the construction accepts."""


class SingularCountMismatch(InputRejected):
    """The singular point counts differ from the generic n² and n + 1."""


# -- moduli ------------------------------------------------------------------


class TooFewFiniteSingularities(InputRejected):
    """Fewer than three nondegenerate finite singular points."""


class CollinearSingularities(InputRejected):
    """Every candidate anchor triple is collinear."""


class UnsupportedDegree(InputRejected):
    """The operation is only defined for a specific degree."""


class LabelTrackingFailure(FoliamodError):
    """A perturbed singular point moved beyond the trust radius."""


# -- holonomy ----------------------------------------------------------------


class TrajectoryEscape(FoliamodError):
    """The transported transversal coordinate left the chart."""


class StepLimitExceeded(FoliamodError):
    """The integrator exceeded its step cap."""


class NearSingularTransversal(FoliamodError):
    """The path passes too close to a zero of the transversal denominator."""


class ExtrapolationUnstable(FoliamodError):
    """Successive extrapolated multiplier estimates diverge."""


# -- io ----------------------------------------------------------------------


class ParseError(InputRejected):
    """A field file could not be parsed."""

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ) -> None:
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DimensionMismatch(InputRejected):
    """Coefficient list lengths do not match the declared degree."""


class InputUnreadable(InputRejected):
    """The input file could not be opened or read."""
