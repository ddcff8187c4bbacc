"""Exception hierarchy.

Every error raised on bad input derives from :class:`MapError`, itself a
``ValueError``.  Errors that indicate a violated mathematical property (as
opposed to bad input) derive from :class:`PropertyFailure`.
"""


class MapError(ValueError):
    pass


class MalformedToken(MapError):
    pass


class EdgeOccurrenceViolation(MapError):
    pass


class NonIntegerGenus(MapError):
    pass


class InvalidBlock(MapError):
    pass


class LoopEdge(MapError):
    pass


class NotUnicellular(MapError):
    pass


class SameEdge(MapError):
    pass


class NotIntertwined(MapError):
    pass


class NotCubic(MapError):
    pass


class OddPartition(MapError):
    pass


class Unrealizable(MapError):
    pass


class PartialGraph(MapError):
    """Connectivity query on a graph whose construction hit a cap."""


class CapExceeded(Exception):
    """A node or time cap was reached; the attached result is partial."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class UnknownSuite(MapError):
    pass


class PropertyFailure(AssertionError):
    """A claimed structural property did not hold on a concrete map."""

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


class NoIntertwinedOrientation(PropertyFailure):
    pass


class BridgeNotResolved(PropertyFailure):
    pass


class NoSolution(PropertyFailure):
    pass
