"""Exception types shared across the package.

Validation failures are value errors so that callers using plain ``except
ValueError`` keep working; resource and convergence failures are runtime
errors because retrying with the same inputs cannot succeed.
"""


class ValidationError(ValueError):
    """An argument violates a documented precondition."""


class BudgetExceededError(RuntimeError):
    """A computation would sweep more cells or nodes than its budget allows."""


class NonConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration limit."""
