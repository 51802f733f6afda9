"""
Zigzags of collapses and relabelings between simplicial complexes.

A zigzag is a list of complexes joined by arrows. A ``collapse`` arrow
carries a certificate: ``leftward`` means ``nodes[i + 1]`` collapses to
``nodes[i]``, ``rightward`` means ``nodes[i]`` collapses to ``nodes[i + 1]``.
A ``relabel`` arrow carries a vertex bijection from ``nodes[i]`` to
``nodes[i + 1]`` that is an isomorphism of complexes; it can be expanded
into collapse arrows through containment relations.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from dowkit.complex.maps import SimplicialMap, apply_map, is_isomorphism
from dowkit.complex.simplicial import SimplicialComplex, minimal_ground_set
from dowkit.constants import (
    ARROW_COLLAPSE,
    ARROW_RELABEL,
    FACE_LABEL_PREFIX,
    LEFTWARD,
    RIGHTWARD,
    SIDE_LEFT,
    SIDE_RIGHT,
)
from dowkit.dowker.biclique import biclique_complex
from dowkit.dowker.complexes import dowker_left, dowker_right
from dowkit.errors import ConstructionError, PreconditionError
from dowkit.morse.collapse import (
    CollapseCertificate,
    VerificationResult,
    collapse_sequence,
    verify_certificate,
)
from dowkit.morse.matching import dowker_matching
from dowkit.relations.morphism import RelationMorphism, disjointify
from dowkit.relations.relation import Relation, containment_relation, relabel_left

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ZigzagArrow:
    kind: str
    direction: str = RIGHTWARD
    certificate: Optional[CollapseCertificate] = None
    vertex_map: Optional[Mapping[str, str]] = field(default=None, hash=False)

    def __post_init__(self):
        if self.kind == ARROW_COLLAPSE and self.certificate is None:
            raise ConstructionError("collapse arrow needs a certificate")
        if self.kind == ARROW_RELABEL and self.vertex_map is None:
            raise ConstructionError("relabel arrow needs a vertex map")
        if self.kind not in (ARROW_COLLAPSE, ARROW_RELABEL):
            raise ConstructionError(f"unknown arrow kind {self.kind!r}")
        if self.direction not in (LEFTWARD, RIGHTWARD):
            raise ConstructionError(f"unknown arrow direction {self.direction!r}")


def collapse_arrow(direction: str, certificate: CollapseCertificate) -> ZigzagArrow:
    return ZigzagArrow(ARROW_COLLAPSE, direction, certificate=certificate)


def relabel_arrow(vertex_map: Mapping[str, str]) -> ZigzagArrow:
    return ZigzagArrow(ARROW_RELABEL, RIGHTWARD, vertex_map=dict(vertex_map))


@dataclass(frozen=True)
class Zigzag:
    """Complexes ``nodes[0] ∼ nodes[1] ∼ ...`` joined by ``arrows``."""
    nodes: Tuple[SimplicialComplex, ...]
    arrows: Tuple[ZigzagArrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if len(self.arrows) != len(self.nodes) - 1:
            raise ConstructionError(
                f"zigzag with {len(self.nodes)} nodes needs {len(self.nodes) - 1} arrows, "
                f"got {len(self.arrows)}"
            )

    def certificates(self) -> List[CollapseCertificate]:
        return [arrow.certificate for arrow in self.arrows if arrow.kind == ARROW_COLLAPSE]

    def verify(self) -> VerificationResult:
        """Check every arrow; ``step`` of a failure is the arrow index."""
        for i, arrow in enumerate(self.arrows):
            left, right = self.nodes[i], self.nodes[i + 1]
            if arrow.kind == ARROW_RELABEL:
                try:
                    m = SimplicialMap(left, right, arrow.vertex_map)
                except ConstructionError as e:
                    return VerificationResult(False, i, f"relabel is not simplicial: {e}")
                if not is_isomorphism(m):
                    return VerificationResult(False, i, "relabel is not an isomorphism")
                continue
            source, target = (right, left) if arrow.direction == LEFTWARD else (left, right)
            cert = arrow.certificate
            if not cert.from_complex.same_faces(source):
                return VerificationResult(False, i, "certificate does not start at its node")
            if not cert.to_complex.same_faces(target):
                return VerificationResult(False, i, "certificate does not end at its node")
            result = verify_certificate(cert)
            if not result:
                return VerificationResult(False, i, f"certificate fails: {result.describe()}")
        return VerificationResult(True)

    def expand_relabels(self) -> "Zigzag":
        """Replace every relabel arrow by the collapse arrows of ``isomorphic_zigzag``."""
        nodes = [self.nodes[0]]
        arrows: List[ZigzagArrow] = []
        for i, arrow in enumerate(self.arrows):
            if arrow.kind == ARROW_RELABEL:
                inner = isomorphic_zigzag(self.nodes[i], self.nodes[i + 1], arrow.vertex_map)
                nodes.extend(inner.nodes[1:-1])
                arrows.extend(inner.arrows)
            else:
                arrows.append(arrow)
            nodes.append(self.nodes[i + 1])
        return Zigzag(tuple(nodes), tuple(arrows))


# ============================================================================
# Constructions
# ============================================================================

def _inverse(mapping: Mapping[str, str]) -> Dict[str, str]:
    return {image: label for label, image in mapping.items()}


def zigzag_through_bicliques(phi: RelationMorphism, b: SimplicialComplex,
                             to_left: CollapseCertificate, to_right: CollapseCertificate) -> Zigzag:
    """
    Assemble ``C_X(R) ≅ C_X(R̃) ↙ B(R̃) ↘ C_Y(R̃) ≅ C_Y(R)`` from its parts.

    Args:
        phi: The tagging morphism ``R → R̃`` returned by ``disjointify``.
        b: ``B(R̃)``.
        to_left: Certificate ``B(R̃) ↘ C_X(R̃)``.
        to_right: Certificate ``B(R̃) ↘ C_Y(R̃)``.
    """
    return Zigzag(
        (dowker_left(phi.source), to_left.to_complex, b, to_right.to_complex, dowker_right(phi.source)),
        (
            relabel_arrow(phi.phi_l),
            collapse_arrow(LEFTWARD, to_left),
            collapse_arrow(RIGHTWARD, to_right),
            relabel_arrow(_inverse(phi.phi_r)),
        ),
    )


def barmak_zigzag(r: Relation, order: Optional[Sequence[str]] = None) -> Zigzag:
    """
    ``C_X(R) ≅ C_X(R̃) ↙ B(R̃) ↘ C_Y(R̃) ≅ C_Y(R)`` for the disjointified ``R̃``.

    Both collapse certificates come from the Dowker matchings of ``B(R̃)``;
    the outer arrows are the tagging relabelings. ``order`` is a total order
    on the tagged vertices of ``B(R̃)``.
    """
    tagged, phi = disjointify(r)
    b = biclique_complex(tagged)
    to_left = collapse_sequence(b, dowker_left(tagged), dowker_matching(tagged, SIDE_LEFT, order, b=b))
    to_right = collapse_sequence(b, dowker_right(tagged), dowker_matching(tagged, SIDE_RIGHT, order, b=b))
    zigzag = zigzag_through_bicliques(phi, b, to_left, to_right)
    logger.info(f"zigzag C_X ~ C_Y: {len(to_left)} + {len(to_right)} collapse steps")
    return zigzag


def _require_isomorphism(d: SimplicialComplex, d2: SimplicialComplex,
                         alpha: Mapping[str, str]) -> SimplicialMap:
    try:
        m = SimplicialMap(d, d2, alpha)
    except ConstructionError as e:
        raise PreconditionError(f"vertex map is not simplicial: {e}") from None
    images = list(m.vertex_map.values())
    if len(set(images)) != len(images):
        raise PreconditionError("vertex map is not injective on the ground set")
    image = apply_map(m)
    for face in d2.sorted_faces:
        if face not in image.faces:
            raise PreconditionError(
                f"vertex map is not an isomorphism: face {d2.labels_of(face)} has no preimage"
            )
    return m


def isomorphic_zigzag(d: SimplicialComplex, d2: SimplicialComplex, alpha: Mapping[str, str]) -> Zigzag:
    """
    Collapse zigzag ``d ↙ B(R) ↘ C_r(R) = C_r(R′) ↙ B(R′) ↘ d2`` for an isomorphism α.

    R is the containment relation of ``d`` and R′ is R with its X side renamed
    through α, so ``C_l(R) = d``, ``C_l(R′) = d2`` and both share ``C_r``.

    Raises:
        PreconditionError: Either complex is void, α is not an isomorphism
            (naming an offending face), or a label uses the reserved prefix.
    """
    if d.is_void or d2.is_void:
        raise PreconditionError("isomorphic zigzag needs nonempty complexes")
    m = _require_isomorphism(d, d2, alpha)
    for label in minimal_ground_set(d2):
        if label.startswith(FACE_LABEL_PREFIX):
            raise PreconditionError(
                f"vertex label {label!r} collides with the reserved prefix {FACE_LABEL_PREFIX!r}"
            )

    rel = containment_relation(d)
    renamed = relabel_left(rel, m.vertex_map, [m.vertex_map[x] for x in rel.x_universe.labels])

    left, right = dowker_left(rel), dowker_right(rel)
    left2, right2 = dowker_left(renamed), dowker_right(renamed)
    if not left.same_faces(d) or not left2.same_faces(d2):
        raise AssertionError("containment relation does not recover its complex")
    if not right.same_faces(right2):
        raise AssertionError("right Dowker complexes of the containment relations differ")

    b, b2 = biclique_complex(rel), biclique_complex(renamed)
    arrows = (
        collapse_arrow(LEFTWARD, collapse_sequence(b, left, dowker_matching(rel, SIDE_LEFT, b=b))),
        collapse_arrow(RIGHTWARD, collapse_sequence(b, right, dowker_matching(rel, SIDE_RIGHT, b=b))),
        collapse_arrow(LEFTWARD, collapse_sequence(b2, right2, dowker_matching(renamed, SIDE_RIGHT, b=b2))),
        collapse_arrow(RIGHTWARD, collapse_sequence(b2, left2, dowker_matching(renamed, SIDE_LEFT, b=b2))),
    )
    return Zigzag((left, b, right, b2, left2), arrows)
