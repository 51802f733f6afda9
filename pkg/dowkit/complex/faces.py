"""
Vertex universes and bit-set faces.

A face is a plain ``int``: bit ``i`` is set when the vertex with index ``i``
of the face's universe belongs to it. The empty face is ``0``. Universes are
ordered (declaration order) and capped at 64 vertices, so every face fits a
fixed-width word and set operations are single integer operations.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, NamedTuple, Sequence, Tuple, Union

from dowkit.constants import MAX_UNIVERSE_SIZE
from dowkit.errors import ConstructionError, UniverseCapError, UnknownVertexError

Face = int

EMPTY_FACE: Face = 0


class VertexId(NamedTuple):
    """A vertex of a universe: its label and its position in declaration order."""
    label: str
    index: int


@dataclass(frozen=True)
class Universe:
    """
    Ordered, duplicate-free list of vertex labels.

    The index of a label is its position; faces over this universe are bit
    sets keyed by that index.
    """
    labels: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        if len(labels) > MAX_UNIVERSE_SIZE:
            raise UniverseCapError(len(labels), MAX_UNIVERSE_SIZE)
        index: Dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ConstructionError(f"duplicate vertex label {label!r} in universe")
            index[label] = i
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    @property
    def full_face(self) -> Face:
        """The face containing every vertex of the universe."""
        return (1 << len(self.labels)) - 1

    def vertices(self) -> List[VertexId]:
        return [VertexId(label, i) for i, label in enumerate(self.labels)]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(label) from None

    def face(self, labels: Iterable[str]) -> Face:
        """Encode an iterable of labels as a face; unknown labels raise."""
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(str(label))
        return mask

    def labels_of(self, face: Face) -> List[str]:
        """Member labels of a face, in universe order."""
        return [self.labels[i] for i in iter_bits(face)]

    def contains_face(self, face: Face) -> bool:
        return face >= 0 and face >> len(self.labels) == 0


UniverseLike = Union[Universe, Sequence[str]]


def as_universe(universe: UniverseLike) -> Universe:
    if isinstance(universe, Universe):
        return universe
    return Universe(tuple(universe))


# ============================================================================
# Bit-set helpers
# ============================================================================

def iter_bits(face: Face) -> Iterator[int]:
    """Yield the vertex indices of a face in increasing order."""
    while face:
        low = face & -face
        yield low.bit_length() - 1
        face ^= low


def indices_of(face: Face) -> Tuple[int, ...]:
    return tuple(iter_bits(face))


def submasks(face: Face) -> Iterator[Face]:
    """Yield every subset of ``face``, the face itself first and the empty face last."""
    sub = face
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & face


def face_sort_key(face: Face) -> Tuple[int, Tuple[int, ...]]:
    """Order by cardinality, then lexicographically by index tuple."""
    return (face.bit_count(), indices_of(face))


def sorted_faces(faces: Iterable[Face]) -> List[Face]:
    return sorted(faces, key=face_sort_key)


def is_cover(a: Face, b: Face) -> bool:
    """True iff ``a`` is a subset of ``b`` and ``b`` has exactly one extra vertex."""
    return a & ~b == 0 and (b & ~a).bit_count() == 1


def covers_within(face: Face, universe_size: int) -> Iterator[Face]:
    """Yield every face obtained by adding one vertex of the universe to ``face``."""
    free = ((1 << universe_size) - 1) & ~face
    for i in iter_bits(free):
        yield face | (1 << i)
