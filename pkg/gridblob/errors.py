"""
Exception hierarchy for gridblob
"""
from typing import Optional


class GridblobError(Exception):
    """Base class for all gridblob errors"""


class GridDimensionError(GridblobError):
    """Cells or structures of different dimensions were mixed"""


class RepresentationError(GridblobError):
    """A representation violates its invariants"""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class GraphError(GridblobError):
    """Malformed graph or mismatched vertex sets"""


class EmbeddingError(GridblobError):
    """Rotation system is not a valid plane embedding"""


class MinorRecipeError(GridblobError):
    """Minor recipe references missing edges or vertices"""


class DrawingError(GridblobError):
    """Orthogonal drawing violates its invariants"""


class LayoutError(GridblobError):
    """A layout engine could not draw its input"""


class TreeDecompositionError(GridblobError):
    """Tree decomposition is invalid or cannot be computed"""


class GadgetError(GridblobError):
    """Gadget parameters are invalid"""


class SearchBudgetError(GridblobError):
    """Exact search ran out of its node budget"""


class FormatError(GridblobError):
    """Malformed input file"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
