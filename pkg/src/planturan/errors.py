"""
Exception hierarchy of planturan.

Every error raised by the library derives from :class:`PlanTuranError`,
so callers (and the command line front end) can catch them in one place.
"""


class PlanTuranError(Exception):
    """Base class of all planturan errors"""


# plane graphs

class GraphError(PlanTuranError):
    """Invalid rotation system or graph operation"""


class NonSimple(GraphError, ValueError):
    """Rotation system contains a loop or a parallel edge"""


class AsymmetricAdjacency(GraphError, ValueError):
    """u is listed at v but v is not listed at u"""


class NonPlanarRotation(GraphError, ValueError):
    """Face tracing violates Euler's formula, or face cycles do not close up"""


class UnknownVertex(GraphError, KeyError):
    """Vertex id out of range"""


class UnknownEdge(GraphError, KeyError):
    """Edge or directed edge not present in the graph"""


class UnknownFace(GraphError, KeyError):
    """Face does not belong to the graph"""


class Disconnected(GraphError, ValueError):
    """Operation requires a connected graph"""


# detectors

class DetectorError(PlanTuranError):
    """Invalid detector arguments"""


class MTooLarge(DetectorError, ValueError):
    """Path search requested for more than 12 vertices"""


# blocks

class BlockError(PlanTuranError):
    """Block decomposition cannot be performed"""


class OuterFaceIsTriangle(BlockError):
    """The designated outer face of the host graph is a 3-face"""


class PreconditionViolated(BlockError):
    """The host graph does not satisfy the freeness or rooting precondition"""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# enumeration

class EnumerationError(PlanTuranError):
    """Invalid generation parameters"""


class NTooSmall(EnumerationError, ValueError):
    """Fewer than 3 vertices requested"""


class NTooLarge(EnumerationError, ValueError):
    """Order above the soft cap without the unbounded flag"""


class DeepRunRequired(EnumerationError):
    """Orders 13 and 14 need an explicit deep run"""


class TTooLarge(EnumerationError, ValueError):
    """Deletion budget outside 0..2"""


class NTooLargeForOracle(EnumerationError, ValueError):
    """Brute force oracle is limited to 7 vertices"""


class BadResumeToken(EnumerationError, ValueError):
    """Resume token is not of the form 'level:index'"""


# constructions

class ConstructionError(PlanTuranError):
    """A constructor could not produce a valid plane graph"""


class UnknownName(ConstructionError, KeyError):
    """No named graph with this name"""


class NonTriangularFace(ConstructionError, ValueError):
    """Gluing requires two 3-faces"""


class SimplicityViolated(ConstructionError):
    """Gluing would create a loop or a parallel edge"""


class UnsupportedOrder(ConstructionError, ValueError):
    """The construction does not exist for this number of vertices"""


# verification

class VerificationError(PlanTuranError):
    """Harness failures"""


class Inconclusive(VerificationError):
    """All deletion budgets exhausted without finding a pattern-free graph"""


class UnknownStatement(VerificationError, KeyError):
    """No certificate with this statement id"""


# files

class CodecError(PlanTuranError, ValueError):
    """Malformed planar_code or rotation text"""
