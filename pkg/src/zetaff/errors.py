"""Exception hierarchy for zetaff.

All library errors derive from ZetaffError so callers can catch one type.
Numerical routines raise specific subclasses that carry enough context to
diagnose the failure (achieved bounds, residual flatness, offending input).
"""


class ZetaffError(Exception):
    """Base class for all zetaff errors."""


class InvalidInputError(ZetaffError):
    """Malformed or out-of-domain input (bad q, wrong counts, bad grids)."""


class ValidationError(ZetaffError):
    """A structural invariant failed (closure of the factor set, symmetry)."""


class PoleEvaluationError(ZetaffError):
    """Zeta evaluation was requested at (or too near) a pole."""


class DivergentSeriesError(ZetaffError):
    """The derivative-side series does not converge for these inputs."""


class TailBudgetError(ZetaffError):
    """Series truncation cannot meet the requested tail tolerance.

    The achieved bound is stored in ``achieved``.
    """

    def __init__(self, message, achieved):
        super().__init__(message)
        self.achieved = float(achieved)


class WrongRegimeError(ZetaffError):
    """A classical sum was requested where only the continuation is valid."""


class RemovableSingularityError(ZetaffError):
    """mu = 1 hits the removable singularity of the boundary term."""


class OrderInsufficientError(ZetaffError):
    """mu is too negative for the retained correction order."""


class NoClimError(ZetaffError):
    """The averaged path never flattened within the allowed P power.

    ``residual_flatness`` records the tail variation at the best stage.
    """

    def __init__(self, message, residual_flatness):
        super().__init__(message)
        self.residual_flatness = float(residual_flatness)


class UnsupportedMuError(ZetaffError):
    """mu outside the finite set supported by a closed-form routine."""
