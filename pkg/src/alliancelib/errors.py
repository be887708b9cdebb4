"""Exception hierarchy shared by all alliancelib modules."""


class AllianceError(Exception):
    """Base class for every error raised by this package."""


class SelfLoop(AllianceError):
    pass


class DuplicateEdge(AllianceError):
    pass


class UnknownVertex(AllianceError):
    pass


class FrozenGraph(AllianceError):
    pass


class TooLarge(AllianceError):
    """An exhaustive oracle was asked to run beyond its hard guard."""


class InvalidInstance(AllianceError):
    pass


class DegreeTooHigh(AllianceError):
    pass


class MalformedDiagram(AllianceError):
    pass


class UnknownChord(AllianceError):
    pass


class ChordsDoNotCross(AllianceError):
    pass


class ParseError(AllianceError):
    pass


class BadParams(AllianceError):
    pass
