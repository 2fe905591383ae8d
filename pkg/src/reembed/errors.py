"""Exception types shared across the package."""


class ReembedError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ReembedError, ValueError):
    """Malformed graph6 input.

    Attributes:
        offset: byte offset into the input line where decoding failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class NotPlanar(ReembedError):
    """The graph admits no embedding on the sphere."""


class NotCubic(ReembedError):
    """A vertex has degree other than three."""


class Not3Connected(ReembedError):
    """The graph has a vertex cut of size at most two."""


class DualNotSimple(ReembedError):
    """Two faces share more than one edge, so the dual has parallel edges."""


class NotEdgeSimple(ReembedError):
    """A facial walk of the twisted subgraph repeats an edge.

    Attributes:
        edge: the repeated (dual) edge index.
    """

    def __init__(self, edge: int):
        super().__init__(f"facial walk repeats dual edge {edge}")
        self.edge = edge


class SweepTooLarge(ReembedError):
    """Exhaustive twist-set sweep requested on a graph with too many edges."""


class InconsistentSurface(ReembedError):
    """Odd Euler characteristic reported for an orientable surface."""
