"""Exception hierarchy.

Every error that can be traced to a concrete combinatorial object carries it in
``witness`` so the CLI can emit it as JSON.
"""
from __future__ import annotations


class MorseTileError(Exception):
    """Base class for all errors raised by this package."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness

    def to_json(self) -> dict:
        return {"error": type(self).__name__, "message": str(self), "witness": self.witness}


class EmptySimplex(MorseTileError, ValueError):
    pass


class DuplicateVertexInSimplex(MorseTileError, ValueError):
    pass


class EmptyComplex(MorseTileError, ValueError):
    pass


class InvalidOrientation(MorseTileError, ValueError):
    pass


class OrientedTriangleCycle(MorseTileError):
    pass


class InvalidMorseFace(MorseTileError, ValueError):
    pass


class NotAMorseTile(MorseTileError):
    pass


class NotBasic(MorseTileError, ValueError):
    pass


class InvalidSpec(MorseTileError, ValueError):
    pass


class InvalidStaircase(MorseTileError, ValueError):
    pass


class OverlapWitness(MorseTileError):
    pass


class ClosureWitness(MorseTileError):
    pass


class PrefixNotClosed(MorseTileError):
    pass


class MorseFaceOrderWitness(MorseTileError):
    pass


class NotTame(MorseTileError):
    pass


class ConditionHViolated(MorseTileError):
    pass


class NotPure(MorseTileError):
    pass


class NotHTiling(MorseTileError):
    pass


class UnsupportedDimension(MorseTileError, ValueError):
    pass


class DimensionGuard(MorseTileError, ValueError):
    """Requested construction exceeds the configured desk-scale dimension bound."""


class TileOutsideComplex(MorseTileError):
    pass
