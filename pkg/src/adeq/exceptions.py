"""Exception hierarchy shared by the pipeline stages."""


class AdeqError(Exception):
    """Base class for every error raised by :mod:`adeq`."""


class DiagramError(AdeqError, ValueError):
    """A PD code does not describe a usable link diagram."""


class MalformedCode(DiagramError):
    pass


class DuplicateEdgeLabel(DiagramError):
    pass


class NonPlanar(DiagramError):
    pass


class Disconnected(DiagramError):
    pass


class IncompleteState(AdeqError, ValueError):
    pass


class DisconnectedGraph(AdeqError, ValueError):
    pass


class ReducibleDiagram(AdeqError, ValueError):
    """A bigon whose two crossings do not alternate (Reidemeister II)."""


class MixedTwistState(AdeqError, ValueError):
    pass


class SizeOne(AdeqError, ValueError):
    pass


class BudgetExceeded(AdeqError, RuntimeError):
    pass


class NonPrimeRegion(AdeqError, RuntimeError):
    pass


class FloodingContradiction(AdeqError, RuntimeError):
    """Shaded-face construction produced an inconsistent colouring."""


class PreconditionMissing(AdeqError, ValueError):
    pass
