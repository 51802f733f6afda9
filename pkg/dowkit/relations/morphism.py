"""
Morphisms of relations, disjointification, and the simplicial maps they induce.

A morphism ``φ = (φ_l, φ_r)`` from ``R ⊆ X × Y`` to ``S ⊆ Z × W`` is a pair
of total maps ``X → Z`` and ``Y → W`` sending related pairs to related
pairs. It induces simplicial maps between the left Dowker complexes, the
right Dowker complexes and, for bipartite relations, the biclique complexes.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from dowkit.complex.maps import SimplicialMap
from dowkit.constants import LEFT_TAG, RIGHT_TAG
from dowkit.errors import ConstructionError, PreconditionError
from dowkit.relations.relation import Relation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationMorphism:
    """
    Pair of label maps ``(phi_l, phi_r)`` preserving relatedness.

    Attributes:
        source: Relation ``R ⊆ X × Y``.
        target: Relation ``S ⊆ Z × W``.
        phi_l: Total map ``X → Z``.
        phi_r: Total map ``Y → W``.
    """
    source: Relation
    target: Relation
    phi_l: Mapping[str, str]
    phi_r: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "phi_l", _total_map(self.phi_l, self.source.x_universe.labels,
                                                     self.target.x_universe, "X"))
        object.__setattr__(self, "phi_r", _total_map(self.phi_r, self.source.y_universe.labels,
                                                     self.target.y_universe, "Y"))
        for a, b in self.source.sorted_pairs:
            image = (self.phi_l[a], self.phi_r[b])
            if image not in self.target.pairs:
                raise ConstructionError(
                    f"morphism does not preserve relatedness: ({a},{b}) maps to {image}, "
                    f"which is not in the target relation"
                )

    def __hash__(self) -> int:
        return hash((self.source, self.target,
                     tuple(sorted(self.phi_l.items())), tuple(sorted(self.phi_r.items()))))


def _total_map(mapping: Mapping[str, str], domain, codomain, side: str) -> Dict[str, str]:
    result: Dict[str, str] = {}
    for label in domain:
        if label not in mapping:
            raise ConstructionError(f"morphism is undefined on {side} element {label!r}")
        image = str(mapping[label])
        if image not in codomain:
            raise ConstructionError(f"morphism sends {label!r} to {image!r}, outside the target {side}")
        result[label] = image
    return result


def identity_morphism(r: Relation) -> RelationMorphism:
    return RelationMorphism(
        r, r,
        {x: x for x in r.x_universe.labels},
        {y: y for y in r.y_universe.labels},
    )


def compose_morphisms(psi: RelationMorphism, phi: RelationMorphism) -> RelationMorphism:
    """``psi ∘ phi``, composed componentwise."""
    if psi.source != phi.target:
        raise ConstructionError("cannot compose: target of the first morphism is not the source of the second")
    return RelationMorphism(
        phi.source, psi.target,
        {x: psi.phi_l[z] for x, z in phi.phi_l.items()},
        {y: psi.phi_r[w] for y, w in phi.phi_r.items()},
    )


# ============================================================================
# Disjointification
# ============================================================================

def tag_label(label: str, tag: str) -> str:
    return f"({label},{tag})"


def untag_label(label: str, tag: str) -> str:
    """Inverse of ``tag_label``; raises when ``label`` does not carry ``tag``."""
    suffix = f",{tag})"
    if not (label.startswith("(") and label.endswith(suffix)):
        raise PreconditionError(f"label {label!r} is not tagged with {tag!r}")
    return label[1:-len(suffix)]


def disjointify(r: Relation) -> Tuple[Relation, RelationMorphism]:
    """
    Make X and Y label-disjoint by tagging.

    Every x becomes ``(x,0)`` and every y becomes ``(y,1)``, unconditionally,
    so already-bipartite relations are retagged too.

    Returns:
        The bipartite copy and the morphism of tagging bijections from ``r``.
    """
    phi_l = {x: tag_label(x, LEFT_TAG) for x in r.x_universe.labels}
    phi_r = {y: tag_label(y, RIGHT_TAG) for y in r.y_universe.labels}
    tagged = Relation(
        tuple(phi_l[x] for x in r.x_universe.labels),
        tuple(phi_r[y] for y in r.y_universe.labels),
        frozenset((phi_l[a], phi_r[b]) for a, b in r.pairs),
    )
    return tagged, RelationMorphism(r, tagged, phi_l, phi_r)


def untag(r: Relation) -> Relation:
    """Forget the tags added by ``disjointify``."""
    x = [untag_label(label, LEFT_TAG) for label in r.x_universe.labels]
    y = [untag_label(label, RIGHT_TAG) for label in r.y_universe.labels]
    return Relation(
        tuple(x), tuple(y),
        frozenset((untag_label(a, LEFT_TAG), untag_label(b, RIGHT_TAG)) for a, b in r.pairs),
    )


# ============================================================================
# Induced simplicial maps
# ============================================================================

def induced_left_map(m: RelationMorphism) -> SimplicialMap:
    """``C_l(φ)``: the map of left Dowker complexes with vertex map ``φ_l``."""
    from dowkit.dowker.complexes import dowker_left

    return SimplicialMap(dowker_left(m.source), dowker_left(m.target), m.phi_l)


def induced_right_map(m: RelationMorphism) -> SimplicialMap:
    """``C_r(φ)``: the map of right Dowker complexes with vertex map ``φ_r``."""
    from dowkit.dowker.complexes import dowker_right

    return SimplicialMap(dowker_right(m.source), dowker_right(m.target), m.phi_r)


def induced_biclique_map(m: RelationMorphism) -> SimplicialMap:
    """
    ``B(φ)``: the map of biclique complexes with vertex map ``φ_l ∪ φ_r``.

    Raises:
        PreconditionError: Source or target relation is not bipartite.
    """
    from dowkit.dowker.biclique import biclique_complex

    for which, rel in (("source", m.source), ("target", m.target)):
        if not rel.is_bipartite:
            raise PreconditionError(f"{which} relation is not bipartite; disjointify it first")
    vertex_map = dict(m.phi_l)
    vertex_map.update(m.phi_r)
    return SimplicialMap(biclique_complex(m.source), biclique_complex(m.target), vertex_map)
