"""Exception hierarchy for triangulation, move, and search failures."""


class TriangulationError(Exception):
    """Base class for all domain errors raised by this package."""


class NonInvolution(TriangulationError):
    """A gluing entry lacks a consistent inverse entry."""


class FaceSelfGluing(TriangulationError):
    """A face is glued to itself."""


class IndexOutOfRange(TriangulationError):
    """A tetrahedron, face, edge or vertex index is out of range."""


class PermutationNotFixingFace(TriangulationError):
    """A gluing permutation does not carry the source face to the target face."""


class InvalidEdgeIdentification(TriangulationError):
    """An edge is identified with itself reversing orientation."""


class DisconnectedTriangulation(TriangulationError):
    """The triangulation is not connected."""


class HasBoundaryFaces(TriangulationError):
    """The operation requires every face to be glued."""


class NotIdeal(TriangulationError):
    """The operation requires an ideal triangulation."""


class MoveNotApplicable(TriangulationError):
    """The requested move is not applicable at the given location."""


class ParameterOutOfRange(TriangulationError):
    """A move parameter references a cell that does not exist."""


class DegenerateShape(TriangulationError):
    """A shape parameter is too close to 0 or 1."""


class LengthMismatch(TriangulationError):
    """A coordinate vector has the wrong length."""


class NotAdmissible(TriangulationError):
    """A normal coordinate vector violates the quad constraint."""


class MatchingViolated(TriangulationError):
    """A normal coordinate vector violates a matching equation."""


class SizeBoundExceeded(TriangulationError):
    """The triangulation is too large for exhaustive enumeration."""


class BudgetExceeded(TriangulationError):
    """A search exceeded its node budget."""


class RewriteFailed(TriangulationError):
    """Path rewriting could not shield a degree-one edge."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class FormatError(TriangulationError):
    """A file or string does not conform to its declared format."""
