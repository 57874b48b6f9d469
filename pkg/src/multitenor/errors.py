"""Exception hierarchy for the multitenor library.

Every error raised by the library derives from ``MultitenorError`` so that
callers (in particular the calibration objectives, which convert pricing
failures into infeasible objective values) can catch one base class.
"""


class MultitenorError(Exception):
    """Base class for all library errors."""


class DimensionError(MultitenorError):
    """A vector argument does not match the model's factor count."""


class ExplosionError(MultitenorError):
    """The affine transform leaves its maximal domain before the horizon.

    Signals that the requested exponential moment is infinite.
    """

    def __init__(self, message: str, explosion_time: float | None = None):
        super().__init__(message)
        self.explosion_time = explosion_time


class StepFailure(MultitenorError):
    """Adaptive ODE step size underflowed (numeric proxy for explosion)."""


class DomainError(MultitenorError):
    """Invalid time arguments (e.g. maturity before valuation)."""


class ConventionError(MultitenorError):
    """Basis-swap spread side is inconsistent with the tenor ordering."""


class NegativeGrowth(MultitenorError):
    """Term-rate inversion hit a non-positive growth factor."""


class MeshError(MultitenorError):
    """Default-leg mesh does not align with the premium schedule."""


class DegenerateAnnuity(MultitenorError):
    """Premium annuity is non-positive; par spread undefined."""


class QuadratureError(MultitenorError):
    """Fourier integrand tail exceeds tolerance at the truncation point."""


class BootstrapError(MultitenorError):
    """Sequential shift bootstrap could not match a quote."""


class NegativeIntensity(MultitenorError):
    """Bootstrapped default intensity goes negative at a knot."""


class EmptyPanel(MultitenorError):
    """Panel averaging requires at least one bank."""


class ParseError(MultitenorError):
    """Quote file could not be parsed."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        super().__init__(message)
        self.row = row
        self.column = column


class UnitError(ParseError):
    """Quote row lacks a recognisable unit declaration."""


class MissingQuote(MultitenorError):
    """A quote required to build an instrument is absent."""


class SpecError(MultitenorError):
    """Malformed Monte Carlo expression specification."""


class UnknownInstrument(MultitenorError):
    """CLI asked to price an instrument kind the library does not support."""
