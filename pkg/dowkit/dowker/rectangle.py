"""
The rectangle complex of a relation.

Vertices are the related pairs, ordered by (X order, Y order) and labelled
``(x,y)``. A set S of pairs is a face when ``proj_X(S) × proj_Y(S) ⊆ R``.
The test is hereditary, so a depth-first search over pairs in index order
that only extends faces reaches every face.
"""

import logging
from typing import List, Optional, Set, Tuple

from dowkit import constants
from dowkit.complex.faces import EMPTY_FACE, Face, Universe
from dowkit.complex.maps import SimplicialMap
from dowkit.complex.simplicial import SimplicialComplex
from dowkit.dowker.complexes import dowker_left, dowker_right
from dowkit.relations.relation import Pair, Relation

logger = logging.getLogger(__name__)


def pair_label(x: str, y: str) -> str:
    return f"({x},{y})"


def rectangle_universe(r: Relation) -> Tuple[Universe, List[Pair]]:
    """Universe of the rectangle complex and the pair behind each vertex."""
    pairs = r.sorted_pairs
    return Universe(tuple(pair_label(a, b) for a, b in pairs)), pairs


def rectangle_complex(r: Relation) -> SimplicialComplex:
    """
    The rectangle complex ``E``.

    Raises:
        UniverseCapError: The relation has more pairs than the bit-set width.
    """
    universe, pairs = rectangle_universe(r)
    xi = [r.x_universe.index_of(a) for a, _ in pairs]
    yi = [r.y_universe.index_of(b) for _, b in pairs]
    x_adj = r.x_adj
    n = len(pairs)

    faces: Set[Face] = {EMPTY_FACE}
    # (face, Y part, common Y-neighbors of the X part, next pair index)
    stack = [(EMPTY_FACE, 0, r.y_universe.full_face, 0)]
    while stack:
        face, v, common, start = stack.pop()
        for i in range(start, n):
            narrowed = common & x_adj[xi[i]]
            grown = v | (1 << yi[i])
            if grown & ~narrowed:
                continue
            extended = face | (1 << i)
            faces.add(extended)
            stack.append((extended, grown, narrowed, i + 1))

    e = SimplicialComplex(universe, frozenset(faces), check=constants.DEBUG_CHECKS)
    logger.info(f"E: {len(e)} faces over {n} pairs")
    return e


def rectangle_projections(
    r: Relation, e: Optional[SimplicialComplex] = None
) -> Tuple[SimplicialMap, SimplicialMap]:
    """
    The projections ``E → C_X`` and ``E → C_Y``, ``(x,y) ↦ x`` and ``(x,y) ↦ y``.
    """
    if e is None:
        e = rectangle_complex(r)
    _, pairs = rectangle_universe(r)
    to_x = {pair_label(a, b): a for a, b in pairs}
    to_y = {pair_label(a, b): b for a, b in pairs}
    return (
        SimplicialMap(e, dowker_left(r), to_x),
        SimplicialMap(e, dowker_right(r), to_y),
    )


def estimate_rectangle_faces(r: Relation) -> int:
    """
    Upper bound on the number of faces of ``E``.

    Every face lies in a maximal rectangle ``U × V`` (U closed under
    ``x_neighbors(y_neighbors(U))``), so ``Σ 2^{|U||V|}`` over maximal
    rectangles bounds the face count. Always at least 1 for ``{∅}``.
    """
    seen = set()
    total = 0
    for u in dowker_left(r).faces:
        if not u:
            continue
        v = r.y_neighbors_mask(u)
        closed = r.x_neighbors_mask(v)
        if closed != u or closed in seen:
            continue
        seen.add(closed)
        total += 1 << (closed.bit_count() * v.bit_count())
    return max(total, 1)
