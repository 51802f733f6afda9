"""
Bicliques and the biclique complex of a bipartite relation.

Faces of ``B`` live over the universe X ∪ Y, X first: bit ``i`` for the
i-th element of X and bit ``|X| + j`` for the j-th element of Y. A face
therefore splits into its X part (low bits) and its Y part (high bits)
with two shifts, which is how every routine here recovers ``F ∩ X`` and
``F ∩ Y``.
"""

import logging
from typing import FrozenSet, Set, Tuple

from dowkit import constants
from dowkit.complex.faces import Face, Universe, submasks
from dowkit.complex.simplicial import SimplicialComplex
from dowkit.dowker.complexes import dowker_left, dowker_right
from dowkit.errors import PreconditionError
from dowkit.relations.relation import Relation

logger = logging.getLogger(__name__)

PROVENANCE_EMPTY = "empty"
PROVENANCE_LEFT = "left"
PROVENANCE_RIGHT = "right"
PROVENANCE_BICLIQUE = "biclique"


def require_bipartite(r: Relation) -> None:
    if not r.is_bipartite:
        shared = sorted(set(r.x_universe.labels) & set(r.y_universe.labels))
        raise PreconditionError(
            f"relation is not bipartite (X and Y share {shared}); "
            f"apply disjointify() to tag X and Y apart first"
        )


def biclique_universe(r: Relation) -> Universe:
    """The universe X ∪ Y, X in order followed by Y in order."""
    return Universe(r.x_universe.labels + r.y_universe.labels)


def split_face(r: Relation, face: Face) -> Tuple[Face, Face]:
    """``(F ∩ X, F ∩ Y)`` of a face over the biclique universe, each over its own side."""
    n = len(r.x_universe)
    return face & r.x_universe.full_face, face >> n


def bicliques(r: Relation) -> FrozenSet[Face]:
    """
    Every biclique ``U ∪ V`` (U ⊆ X, V ⊆ Y both nonempty, ``U × V ⊆ R``).

    Enumerated from the nonempty faces U of ``C_X``: the admissible V are
    exactly the nonempty subsets of the Y-neighbors of U.

    Raises:
        PreconditionError: The relation is not bipartite.
    """
    require_bipartite(r)
    shift = len(r.x_universe)
    found: Set[Face] = set()
    for u in dowker_left(r).faces:
        if not u:
            continue
        for v in submasks(r.y_neighbors_mask(u)):
            if v:
                found.add(u | (v << shift))
    return frozenset(found)


def biclique_complex(r: Relation) -> SimplicialComplex:
    """
    The biclique complex ``B = bicliques ∪ C_X ∪ C_Y`` over X ∪ Y.

    Raises:
        PreconditionError: The relation is not bipartite.
    """
    require_bipartite(r)
    shift = len(r.x_universe)
    faces: Set[Face] = set(bicliques(r))
    faces.update(dowker_left(r).faces)
    faces.update(v << shift for v in dowker_right(r).faces)
    b = SimplicialComplex(biclique_universe(r), frozenset(faces), check=constants.DEBUG_CHECKS)
    logger.info(f"B: {len(b)} faces over {len(b.universe)} vertices")
    return b


def provenance(face: Face, r: Relation) -> str:
    """
    Which family of ``B`` a face comes from.

    Returns:
        ``"empty"`` for ∅, ``"left"`` for a face inside X, ``"right"`` for a
        face inside Y, ``"biclique"`` for a face meeting both.
    """
    u, v = split_face(r, face)
    if u and v:
        return PROVENANCE_BICLIQUE
    if u:
        return PROVENANCE_LEFT
    if v:
        return PROVENANCE_RIGHT
    return PROVENANCE_EMPTY
