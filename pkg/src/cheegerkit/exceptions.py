"""Exception hierarchy shared by every module."""


class CheegerKitError(Exception):
    """Base class for all errors raised by cheegerkit."""


class GraphParseError(CheegerKitError, ValueError):
    """An edge-list document could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class DomainError(CheegerKitError, ValueError):
    """An argument lies outside the domain of an operation."""


class ParameterError(CheegerKitError, ValueError):
    """A numeric parameter (epsilon, alpha, L, A, ...) is invalid."""


class CapExceededError(CheegerKitError):
    """Exact enumeration was refused because the graph is above the cap."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(
            f"exact-cap exceeded: graph has {n} vertices, cap is {cap}; "
            "use heuristic_cheeger for an upper bound or raise the cap"
        )


class BudgetExceededError(CheegerKitError):
    """The nominal enumeration size of a search exceeds the caller's budget."""

    def __init__(self, work, budget):
        self.work = work
        self.budget = budget
        super().__init__(f"budget exceeded: {work} assignments > budget {budget}")


class InvariantViolation(CheegerKitError, AssertionError):
    """An internal consistency check failed; indicates a bug, never user error."""
