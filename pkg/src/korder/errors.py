"""Exception types shared across the package.

All inherit from ValueError or RuntimeError so callers that do not care
about the fine distinction can still catch the builtin base.
"""


class DomainError(ValueError):
    """A parameter lies outside the mathematical domain of the operation."""


class SingularInputError(ValueError):
    """Evaluation was requested exactly at a non-removable singularity."""


class ConvergenceError(ValueError):
    """The input lies outside the region where a series/quadrature converges
    fast enough to honor the documented accuracy."""


class SolverFailure(RuntimeError):
    """A root bracket or iteration failed; indicates a bug or bad input."""
