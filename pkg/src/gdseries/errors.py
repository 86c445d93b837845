"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes, so the split between schema
problems, evaluation problems, and fit diagnostics is load-bearing.
"""


class GDSeriesError(Exception):
    """Base class for all package errors."""


class SchemaError(GDSeriesError):
    """A series or functional-equation file violates the on-disk schema."""


class EvaluationError(GDSeriesError):
    """A numeric operation cannot produce a certified value."""


class PoleError(EvaluationError):
    """Argument is on (or within tolerance of) a pole."""


class UnsupportedRegionError(EvaluationError):
    """No continuation is available at the requested point."""


class TailBoundError(EvaluationError):
    """A truncation-tail bound is required but not available."""


class QuadratureError(EvaluationError):
    """Adaptive quadrature failed to meet tolerance within budget."""


class NonIntegerDegreeError(GDSeriesError):
    """Functional-equation data implies a non-integer degree.

    Carries the raw value so callers can report it.
    """

    def __init__(self, value: float):
        super().__init__(f"degree 2*sum(alpha_i) = {value!r} is not a positive integer")
        self.value = value
