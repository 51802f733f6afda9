"""
Simplicial maps between complexes.

A simplicial map is a vertex map from the minimal ground set of the source
to the target's vertices such that every face of the source maps onto a
face of the target. The image condition is checked once, at construction.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

from dowkit.complex.faces import Face, iter_bits
from dowkit.complex.simplicial import SimplicialComplex, minimal_ground_set
from dowkit.errors import ConstructionError, ImageConditionError, UnknownVertexError


@dataclass(frozen=True)
class SimplicialMap:
    """
    Vertex map ``source -> target`` satisfying the image condition.

    ``vertex_map`` must be defined on every vertex of the source's minimal
    ground set; entries for other source-universe vertices are dropped.
    """
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping[str, str]
    _bit_image: Tuple[int, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        ground = minimal_ground_set(self.source)
        restricted: Dict[str, str] = {}
        for label in ground:
            if label not in self.vertex_map:
                raise ConstructionError(f"vertex map is undefined on source vertex {label!r}")
            image = str(self.vertex_map[label])
            if image not in self.target.universe:
                raise UnknownVertexError(image, "target universe")
            restricted[label] = image
        for label in self.vertex_map:
            if label not in self.source.universe:
                raise UnknownVertexError(label, "source universe")
        object.__setattr__(self, "vertex_map", restricted)

        target_index = self.target.universe
        bits = []
        for label in self.source.universe.labels:
            bits.append(1 << target_index.index_of(restricted[label]) if label in restricted else 0)
        object.__setattr__(self, "_bit_image", tuple(bits))

        for face in self.source.sorted_faces:
            image = self.image_of(face)
            if image not in self.target.faces:
                raise ImageConditionError(
                    self.source.labels_of(face), self.target.labels_of(image)
                )

    def image_of(self, face: Face) -> Face:
        """Image ``f(F)`` of a source face, as a target face."""
        mask = 0
        bits = self._bit_image
        for i in iter_bits(face):
            mask |= bits[i]
        return mask

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.vertex_map.items()))))


def apply_map(m: SimplicialMap) -> SimplicialComplex:
    """The image complex ``{f(F) : F in source}`` over the target universe."""
    faces = frozenset(m.image_of(face) for face in m.source.faces)
    return SimplicialComplex(m.target.universe, faces)


def identity_map(c: SimplicialComplex) -> SimplicialMap:
    ground = minimal_ground_set(c)
    return SimplicialMap(c, c, {label: label for label in ground})


def inclusion_map(sub: SimplicialComplex, sup: SimplicialComplex) -> SimplicialMap:
    """The inclusion of a subcomplex, label to same label."""
    ground = minimal_ground_set(sub)
    return SimplicialMap(sub, sup, {label: label for label in ground})


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """``g ∘ f``; the target of ``f`` must have the faces of the source of ``g``."""
    if not f.target.same_faces(g.source):
        raise ConstructionError("cannot compose: target of the first map is not the source of the second")
    composed = {label: g.vertex_map[image] for label, image in f.vertex_map.items()
                if image in g.vertex_map}
    return SimplicialMap(f.source, g.target, composed)


def is_isomorphism(m: SimplicialMap) -> bool:
    """True iff the vertex map is a bijection of minimal ground sets whose inverse is simplicial."""
    images: List[str] = list(m.vertex_map.values())
    if len(set(images)) != len(images):
        return False
    if sorted(images) != sorted(minimal_ground_set(m.target)):
        return False
    return apply_map(m).same_faces(m.target) and len(m.source) == len(m.target)
