"""
Exception hierarchy for dowkit.

Domain errors subclass the closest builtin so callers can catch either the
dowkit type or the plain ``ValueError``.
"""

from typing import List, Optional


class DowkitError(Exception):
    """Base class for every error raised by dowkit."""
    pass


class ConstructionError(DowkitError, ValueError):
    """Raised when a complex, relation, map or universe is malformed."""
    pass


class UnknownVertexError(ConstructionError):
    """Raised when a label does not belong to the universe it is used in."""

    def __init__(self, label: str, where: str = "universe"):
        self.label = label
        super().__init__(f"unknown vertex label {label!r} (not in {where})")


class UniverseCapError(ConstructionError):
    """Raised when a universe exceeds the bit-set width."""

    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(
            f"universe of {size} vertices exceeds the cap of {cap} "
            f"(faces are stored as {cap}-bit sets)"
        )


class ImageConditionError(ConstructionError):
    """Raised when a vertex map sends a face outside the target complex."""

    def __init__(self, face_labels: List[str], image_labels: List[str]):
        self.face = face_labels
        self.image = image_labels
        super().__init__(
            f"image condition violated: face {face_labels} maps to {image_labels}, "
            f"which is not a face of the target"
        )


class DomainError(DowkitError, ValueError):
    """Raised when a query mentions an element outside the relevant universe."""
    pass


class PreconditionError(DowkitError, ValueError):
    """Raised when the input of an operation does not meet its precondition."""
    pass


class CyclicMatchingError(PreconditionError):
    """Raised when an acyclic matching is required but a cycle exists."""

    def __init__(self, cycle: List[List[str]]):
        self.cycle = cycle
        super().__init__(f"matching is not acyclic; cycle: {cycle}")


class MatchingMismatchError(PreconditionError):
    """Raised when the matched faces are not exactly the faces to remove."""

    def __init__(self, face_labels: List[str], detail: str):
        self.face = face_labels
        super().__init__(f"matched set differs from the difference of complexes at {face_labels}: {detail}")


class ComplexTooLargeError(DowkitError):
    """Raised when the homology oracle refuses a matrix above its column cap."""

    def __init__(self, columns: int, cap: int, dimension: Optional[int] = None):
        self.columns = columns
        self.cap = cap
        self.dimension = dimension
        where = f" in dimension {dimension}" if dimension is not None else ""
        super().__init__(f"boundary matrix has {columns} columns{where}, above the cap of {cap}")


class ParseError(DowkitError, ValueError):
    """Raised when an input file cannot be read or decoded."""

    def __init__(self, source: str, message: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        self.source = source
        self.line = line
        self.column = column
        location = source
        if line is not None:
            location += f":{line}"
            if column is not None:
                location += f":{column}"
        super().__init__(f"{location}: {message}")


