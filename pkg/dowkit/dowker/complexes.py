"""
Left and right Dowker complexes of a relation.

``C_X`` has a face for every subset of X that is empty or has a common
Y-neighbor; ``C_Y`` mirrors it. Two enumeration strategies are offered:

- ``intersection`` (default): depth-first search over X in index order,
  carrying the running AND of per-x adjacency bit sets and pruning as soon as
  it becomes empty. Visits exactly the faces of the complex.
- ``maximal``: close downward the X-neighbor sets of the single elements of
  Y, which contain every maximal face.
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Set

from dowkit import constants
from dowkit.complex.faces import EMPTY_FACE, Face, Universe
from dowkit.complex.simplicial import SimplicialComplex, closure_of_masks
from dowkit.constants import STRATEGY_INTERSECTION, STRATEGY_MAXIMAL
from dowkit.errors import PreconditionError
from dowkit.relations.relation import Relation

logger = logging.getLogger(__name__)

STRATEGIES = (STRATEGY_INTERSECTION, STRATEGY_MAXIMAL)


@dataclass(frozen=True)
class DowkerOutput:
    """Both Dowker complexes of one relation."""
    left: SimplicialComplex
    right: SimplicialComplex


def _conic_faces(universe: Universe, adjacency: Sequence[Face], other_full: Face) -> Set[Face]:
    """Subsets of ``universe`` whose members' adjacency sets share a bit."""
    faces = {EMPTY_FACE}
    n = len(universe)
    stack = [(EMPTY_FACE, other_full, 0)]
    while stack:
        mask, common, start = stack.pop()
        for i in range(start, n):
            narrowed = common & adjacency[i]
            if narrowed:
                face = mask | (1 << i)
                faces.add(face)
                stack.append((face, narrowed, i + 1))
    return faces


def _dowker(universe: Universe, adjacency: Sequence[Face], other_adjacency: Sequence[Face],
            other_full: Face, strategy: str) -> SimplicialComplex:
    if strategy == STRATEGY_INTERSECTION:
        faces = _conic_faces(universe, adjacency, other_full)
        return SimplicialComplex(universe, frozenset(faces), check=constants.DEBUG_CHECKS)
    if strategy == STRATEGY_MAXIMAL:
        facets = [EMPTY_FACE] + [mask for mask in other_adjacency if mask]
        return closure_of_masks(universe, facets)
    raise PreconditionError(f"unknown enumeration strategy {strategy!r}; expected one of {STRATEGIES}")


def dowker_left(r: Relation, strategy: str = STRATEGY_INTERSECTION) -> SimplicialComplex:
    """
    The left Dowker complex ``C_X`` over the universe X.

    Args:
        r: The relation.
        strategy: ``"intersection"`` or ``"maximal"``; both give the same faces.

    Returns:
        ``{U ⊆ X : U = ∅ or U has a Y-neighbor}``; ``{∅}`` when X is empty.
    """
    c = _dowker(r.x_universe, r.x_adj, r.y_adj, r.y_universe.full_face, strategy)
    logger.info(f"C_X: {len(c)} faces over {len(r.x_universe)} vertices ({strategy})")
    return c


def dowker_right(r: Relation, strategy: str = STRATEGY_INTERSECTION) -> SimplicialComplex:
    """The right Dowker complex ``C_Y`` over the universe Y; mirror of ``dowker_left``."""
    c = _dowker(r.y_universe, r.y_adj, r.x_adj, r.x_universe.full_face, strategy)
    logger.info(f"C_Y: {len(c)} faces over {len(r.y_universe)} vertices ({strategy})")
    return c


def dowker_complexes(r: Relation, strategy: str = STRATEGY_INTERSECTION) -> DowkerOutput:
    return DowkerOutput(dowker_left(r, strategy), dowker_right(r, strategy))
