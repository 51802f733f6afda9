"""
Simplicial complexes over an indexed vertex universe.

A complex is a downward-closed family of bit-set faces. The void complex (no
faces at all) and the complex ``{∅}`` are distinct values.
"""

from dataclasses import InitVar, dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, List, Sequence

from dowkit.complex.faces import (
    EMPTY_FACE,
    Face,
    Universe,
    UniverseLike,
    as_universe,
    iter_bits,
    sorted_faces,
    submasks,
)
from dowkit.errors import ConstructionError, UnknownVertexError


@dataclass(frozen=True)
class SimplicialComplex:
    """
    Immutable simplicial complex.

    Attributes:
        universe: Ordered vertex universe; may be larger than the set of
            vertices that occur in faces.
        faces: Every face, the empty face included when nonempty.

    Construction verifies that every face lies in the universe and that the
    family is closed under taking subsets. Pass ``check=False`` only for
    families built by a routine that guarantees closure.
    """
    universe: Universe
    faces: FrozenSet[Face]
    check: InitVar[bool] = True

    def __post_init__(self, check: bool):
        if not isinstance(self.universe, Universe):
            object.__setattr__(self, "universe", as_universe(self.universe))
        if not isinstance(self.faces, frozenset):
            object.__setattr__(self, "faces", frozenset(self.faces))
        if check:
            self._verify()

    def _verify(self) -> None:
        n = len(self.universe)
        faces = self.faces
        for face in faces:
            if face < 0 or face >> n:
                raise ConstructionError(f"face {face:#x} uses vertices outside the universe")
            for i in iter_bits(face):
                if face & ~(1 << i) not in faces:
                    raise ConstructionError(
                        f"not downward closed: {self.universe.labels_of(face)} is a face "
                        f"but {self.universe.labels_of(face & ~(1 << i))} is not"
                    )
        if faces and EMPTY_FACE not in faces:
            raise ConstructionError("nonempty complex is missing the empty face")

    # ------------------------------------------------------------------
    # Container protocol
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.faces)

    def __contains__(self, face: object) -> bool:
        return face in self.faces

    def __iter__(self) -> Iterator[Face]:
        return iter(self.sorted_faces)

    def __repr__(self) -> str:
        return f"<SimplicialComplex(|V|={len(self.universe)}, faces={len(self.faces)}, dim={self.dimension})>"

    # ------------------------------------------------------------------
    # Derived data
    # ------------------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.faces

    @cached_property
    def dimension(self) -> int:
        """Largest face dimension; -1 for the void complex and for ``{∅}``."""
        if not self.faces:
            return -1
        return max(face.bit_count() for face in self.faces) - 1

    @cached_property
    def sorted_faces(self) -> List[Face]:
        return sorted_faces(self.faces)

    @cached_property
    def label_faces(self) -> FrozenSet[FrozenSet[str]]:
        """Faces as label sets; compares complexes across universes."""
        return frozenset(frozenset(self.universe.labels_of(face)) for face in self.faces)

    def faces_of_dimension(self, k: int) -> List[Face]:
        return [face for face in self.sorted_faces if face.bit_count() == k + 1]

    def facets(self) -> List[Face]:
        """Maximal faces, in canonical order."""
        n = len(self.universe)
        result = []
        for face in self.sorted_faces:
            if not any(face | (1 << i) in self.faces for i in range(n) if not face >> i & 1):
                result.append(face)
        return result

    def labels_of(self, face: Face) -> List[str]:
        return self.universe.labels_of(face)

    def same_faces(self, other: "SimplicialComplex") -> bool:
        """Label-level equality of face families, regardless of universe."""
        if self.universe == other.universe:
            return self.faces == other.faces
        return self.label_faces == other.label_faces

    def reindexed(self, universe: UniverseLike) -> "SimplicialComplex":
        """The same label faces expressed over another universe."""
        target = as_universe(universe)
        if target == self.universe:
            return self
        bits = []
        for label in self.universe.labels:
            bits.append(1 << target.index_of(label) if label in target else None)
        faces = set()
        for face in self.faces:
            mask = 0
            for i in iter_bits(face):
                if bits[i] is None:
                    raise UnknownVertexError(self.universe.labels[i], "target universe")
                mask |= bits[i]
            faces.add(mask)
        return SimplicialComplex(target, frozenset(faces), check=False)


# ============================================================================
# Construction and queries
# ============================================================================

def closure_of_masks(universe: UniverseLike, facets: Iterable[Face]) -> SimplicialComplex:
    """Downward closure of bit-set facets."""
    universe = as_universe(universe)
    faces = set()
    for facet in facets:
        if not universe.contains_face(facet):
            raise ConstructionError(f"facet {facet:#x} uses vertices outside the universe")
        if facet in faces:
            continue
        for sub in submasks(facet):
            faces.add(sub)
    return SimplicialComplex(universe, frozenset(faces), check=False)


def closure(facets: Iterable[Iterable[str]], universe: UniverseLike) -> SimplicialComplex:
    """
    Build the complex of all subsets of the given facets.

    Args:
        facets: Facets as label collections; an empty collection is the empty facet.
        universe: Vertex universe (Universe or ordered label sequence).

    Returns:
        The downward closure; void when ``facets`` is empty.

    Raises:
        UnknownVertexError: A facet names a label outside the universe.
    """
    universe = as_universe(universe)
    return closure_of_masks(universe, [universe.face(facet) for facet in facets])


def void_complex(universe: UniverseLike = ()) -> SimplicialComplex:
    return SimplicialComplex(as_universe(universe), frozenset())


def empty_face_complex(universe: UniverseLike = ()) -> SimplicialComplex:
    """The complex ``{∅}``."""
    return SimplicialComplex(as_universe(universe), frozenset([EMPTY_FACE]))


def minimal_ground_set(c: SimplicialComplex) -> List[str]:
    """Vertices occurring in at least one face, in universe order."""
    union = 0
    for face in c.faces:
        union |= face
    return c.universe.labels_of(union)


def f_vector(c: SimplicialComplex) -> List[int]:
    """Entry ``k`` counts the faces of dimension ``k``; the empty face is excluded."""
    counts: List[int] = []
    for face in c.faces:
        size = face.bit_count()
        if size == 0:
            continue
        while len(counts) < size:
            counts.append(0)
        counts[size - 1] += 1
    return counts


def euler_characteristic(c: SimplicialComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(f_vector(c)))


def is_subcomplex(g: SimplicialComplex, d: SimplicialComplex) -> bool:
    """True iff every face of ``g`` is a face of ``d`` (compared by labels)."""
    if g.universe == d.universe:
        return g.faces <= d.faces
    return g.label_faces <= d.label_faces


def complex_from_label_faces(universe: UniverseLike, faces: Iterable[Sequence[str]],
                             check: bool = True) -> SimplicialComplex:
    """Build a complex from an explicit list of label faces (no closure taken)."""
    universe = as_universe(universe)
    return SimplicialComplex(universe, frozenset(universe.face(f) for f in faces), check=check)


