"""Exception hierarchy shared across the library.

Budget exhaustion is deliberately a distinct error, never a verdict:
a search that runs out of budget must say so instead of mislabeling
the instance.
"""

from __future__ import annotations


class TreelikeError(Exception):
    """Base class for all library errors."""


class GraphFormatError(TreelikeError):
    """Malformed edge-list or graph6 input."""


class DisconnectedGraphError(TreelikeError):
    """Metric operation applied to a disconnected graph."""

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"graph is disconnected: no path between vertices {u} and {v}")


class SizeCapError(TreelikeError):
    """Instance exceeds a configured size cap (memory / runtime guard)."""


class PreconditionError(TreelikeError):
    """A classifier was applied to a graph outside its stated class."""


class BudgetExceeded(TreelikeError):
    """A combinatorial search ran out of budget before reaching a verdict.

    ``partial`` may carry best-effort information (e.g. an inexact
    tree-length upper bound) that is safe to report as long as it is
    flagged as such.
    """

    def __init__(self, message: str, partial=None):
        self.partial = partial
        super().__init__(message)


class InternalInvariantError(TreelikeError):
    """A theorem-backed internal check failed: this is a library bug.

    The message carries enough context (graph dump, quadruple, values)
    to reproduce the failure.
    """
