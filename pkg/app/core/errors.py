"""
Error types for the SRG toolkit
Every error carries the CLI exit code it maps to
"""


class SrgToolError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 2


# Graph input
class GraphInputError(SrgToolError, ValueError):
    """Invalid graph data"""


class IndexOutOfRangeError(GraphInputError):
    pass


class SelfLoopError(GraphInputError):
    pass


class DuplicateEdgeError(GraphInputError):
    pass


class GraphTooLargeError(GraphInputError):
    pass


# graph6
class Graph6Error(GraphInputError):
    """Malformed graph6 data"""


class MalformedHeaderError(Graph6Error):
    pass


class TruncatedPayloadError(Graph6Error):
    pass


class NonCanonicalPaddingError(Graph6Error):
    pass


# Finite fields
class FieldError(SrgToolError, ValueError):
    """Unsupported or invalid field request"""


class NotPrimeError(FieldError):
    pass


class UnsupportedOrderError(FieldError):
    pass


class DimensionMismatchError(FieldError):
    pass


# Constructions
class ConstructionError(SrgToolError, ValueError):
    """Invalid family parameters"""


class ParamOutOfRangeError(ConstructionError):
    pass


class NotLatinSquareError(ConstructionError):
    pass


class BadResidueClassError(ConstructionError):
    pass


# Graph shape (shared by srg_check and the connectivity solvers)
class GraphShapeError(SrgToolError, ValueError):
    """Graph does not meet a structural precondition"""


class CompleteGraphError(GraphShapeError):
    pass


class DisconnectedError(GraphShapeError):
    pass


# Strong regularity
class SrgError(SrgToolError, ValueError):
    """Parameter or regularity failure"""


class NotRegularError(SrgError):
    pass


class NotStronglyRegularError(SrgError):
    pass


class InfeasibleParamsError(SrgError):
    pass


class InfeasibleMultiplicitiesError(SrgError):
    pass


class ComplementDisconnectedError(SrgError):
    pass


# Search
class SearchError(SrgToolError):
    """Separator search could not complete"""


class BudgetExceededError(SearchError):
    """Node budget ran out; `result` holds the best-so-far, closed=False"""

    exit_code = 3

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class TooLargeError(SearchError, ValueError):
    pass


# Incidence geometry
class GeometryError(SrgToolError, ValueError):
    """Invalid incidence-geometry request"""


class AdjacentPairError(GeometryError):
    pass


class NoLinesError(GeometryError):
    pass


# CLI
class IoError(SrgToolError):
    """File could not be read or written"""


class LabelError(SrgToolError, ValueError):
    """Unknown vertex label"""
