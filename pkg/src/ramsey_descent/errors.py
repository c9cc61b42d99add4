class FormatError(ValueError):
    """Malformed colouring, certificate, trace or graph file."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search or exact solver ran past its configured budget."""


class SolverLimitError(BudgetExceeded):
    """Graph too large for the exact chromatic solver."""
