"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when an input violates a documented precondition."""


class ParseError(InputError):
    """Raised for malformed hypergraph or digraph text.

    Carries the 1-based line number and the offending token so the CLI can
    point the user at the problem.
    """

    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        self.line = line
        self.token = token
        where = f"line {line}: " if line is not None else ""
        what = f" (token {token!r})" if token is not None else ""
        super().__init__(f"{where}{message}{what}")


class ResourceError(RuntimeError):
    """Raised when a search exceeds its size guard or node budget."""


class BudgetExhausted(ResourceError):
    """A bounded search ran out of nodes before reaching a conclusion."""
