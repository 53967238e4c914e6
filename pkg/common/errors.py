"""
Exception hierarchy for the toolkit.

Every failure raised by library code derives from CharpolyError so the CLI
can turn it into an exit status with a readable message.
"""


class CharpolyError(Exception):
    """Base class for all toolkit errors."""


class UsageError(CharpolyError):
    """Invalid command-line or configuration input."""


# --- Graphs ---
class GraphError(CharpolyError):
    pass


class DisconnectedGraph(GraphError):
    pass


class NotATree(GraphError):
    pass


class NotTrivalentInterior(GraphError):
    pass


class NotTreeEdge(GraphError):
    pass


class NotLoopTree(GraphError):
    pass


class GenusOutOfRange(GraphError):
    pass


class InvalidTree(GraphError):
    pass


class NotTrivalent(GraphError):
    pass


class NotTrivalentTree(GraphError):
    pass


# --- Lattices ---
class LatticeError(CharpolyError):
    pass


class DimensionMismatch(LatticeError):
    pass


class ZeroVector(LatticeError):
    pass


# --- Polyhedra ---
class PolyhedronError(CharpolyError):
    pass


class Infeasible(PolyhedronError):
    pass


class Unbounded(PolyhedronError):
    pass


class NonPositiveFactor(PolyhedronError):
    pass


class OriginNotInterior(PolyhedronError):
    pass


class UnknownLabel(PolyhedronError):
    pass


# --- Analysis ---
class AnalysisError(CharpolyError):
    pass


class ResourceLimit(AnalysisError):
    """More lattice points than the configured cap; verdicts become indeterminate."""


class NoDecomposition(AnalysisError):
    pass


class PointOutsideDilate(AnalysisError):
    pass


class ObstructionNotApplicable(AnalysisError):
    pass


class WitnessRejected(AnalysisError):
    """The constructed obstruction point failed its vertex or lattice check."""
