"""
Partial matchings on simplicial complexes.

A matching pairs faces of a subset M of a complex with covers or cocovers
by a fixed-point-free involution μ. This module builds matchings from a
vertex choice function (the pairing construction: μ toggles ``f(F)``),
builds the matching of the biclique complex that collapses it onto a
Dowker complex, and detects cycles.
"""

import logging
from dataclasses import dataclass, field
from typing import (
    Callable,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx

from dowkit.complex.faces import Face, is_cover, iter_bits, sorted_faces, submasks
from dowkit.complex.simplicial import SimplicialComplex
from dowkit.constants import SIDE_LEFT, SIDES
from dowkit.dowker.biclique import biclique_complex, require_bipartite
from dowkit.errors import ConstructionError, PreconditionError
from dowkit.relations.relation import Relation

logger = logging.getLogger(__name__)

ChoiceFunction = Union[Mapping[Face, int], Callable[[Face], int]]


@dataclass(frozen=True)
class Matching:
    """
    Partial matching ``(M, μ)`` on a complex.

    Attributes:
        complex: The complex the matched faces belong to.
        mu: Involution table; its keys are M.
        acyclic_certified: True when the pairing construction verified the
            monotonicity condition, which guarantees there is no cycle.
    """
    complex: SimplicialComplex
    mu: Mapping[Face, Face]
    acyclic_certified: bool = False
    _upper: Tuple[Face, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        mu = dict(self.mu)
        for face, partner in mu.items():
            if face not in self.complex.faces:
                raise ConstructionError(f"matched face {self.complex.labels_of(face)} is not in the complex")
            if mu.get(partner) != face:
                raise ConstructionError(
                    f"matching is not an involution at {self.complex.labels_of(face)}"
                )
            if not (is_cover(partner, face) or is_cover(face, partner)):
                raise ConstructionError(
                    f"{self.complex.labels_of(face)} is matched with {self.complex.labels_of(partner)}, "
                    f"which is neither a cover nor a cocover"
                )
        object.__setattr__(self, "mu", mu)
        upper = sorted_faces(face for face, partner in mu.items() if partner.bit_count() < face.bit_count())
        object.__setattr__(self, "_upper", tuple(upper))

    @classmethod
    def from_pairs(cls, complex: SimplicialComplex, pairs: Iterable[Tuple[Face, Face]]) -> "Matching":
        """Build from (lower, upper) pairs; each face may occur in one pair only."""
        mu: Dict[Face, Face] = {}
        for lower, upper in pairs:
            for face in (lower, upper):
                if face in mu:
                    raise ConstructionError(f"face {complex.labels_of(face)} is matched twice")
            mu[lower] = upper
            mu[upper] = lower
        return cls(complex, mu)

    def __len__(self) -> int:
        return len(self.mu)

    def __hash__(self) -> int:
        return hash((self.complex, frozenset(self.mu.items())))

    @property
    def m(self) -> FrozenSet[Face]:
        return frozenset(self.mu)

    @property
    def upper_faces(self) -> Tuple[Face, ...]:
        """Faces G in M with ``μ(G) ≺ G``, in canonical order."""
        return self._upper

    def pairs(self) -> List[Tuple[Face, Face]]:
        """``(μ(G), G)`` for every upper face G, in canonical order of G."""
        return [(self.mu[upper], upper) for upper in self._upper]

    def critical(self) -> List[Face]:
        """Faces of the complex outside M, in canonical order."""
        return [face for face in self.complex.sorted_faces if face not in self.mu]


# ============================================================================
# Cycles
# ============================================================================

def upper_face_graph(mt: Matching) -> nx.DiGraph:
    """
    Digraph on the upper faces of M with an edge ``G → H`` whenever
    ``μ(G) ≺ H``, ``H ≠ G``. Its directed cycles are the cycles of μ.
    """
    graph = nx.DiGraph()
    n = len(mt.complex.universe)
    mu = mt.mu
    graph.add_nodes_from(mt.upper_faces)
    for upper in mt.upper_faces:
        lower = mu[upper]
        free = ((1 << n) - 1) & ~lower
        successors = []
        for i in iter_bits(free):
            candidate = lower | (1 << i)
            if candidate != upper and candidate in mu and mu[candidate].bit_count() < candidate.bit_count():
                successors.append(candidate)
        graph.add_edges_from((upper, h) for h in sorted_faces(successors))
    return graph


_WHITE, _GRAY, _BLACK = 0, 1, 2


def find_cycle(mt: Matching) -> Optional[List[Face]]:
    """
    Return a cycle ``(F_1, ..., F_n)`` of upper faces with
    ``F_i ≻ μ(F_i) ≺ F_{i+1}`` cyclically, or ``None`` when μ is acyclic.

    Iterative depth-first search with three-colour marking over the upper
    face digraph, visiting nodes in canonical order.
    """
    graph = upper_face_graph(mt)
    color: Dict[Face, int] = {}
    for start in mt.upper_faces:
        if color.get(start, _WHITE) != _WHITE:
            continue
        color[start] = _GRAY
        path = [start]
        position = {start: 0}
        stack = [iter(graph.successors(start))]
        while stack:
            for nxt in stack[-1]:
                state = color.get(nxt, _WHITE)
                if state == _GRAY:
                    return path[position[nxt]:]
                if state == _WHITE:
                    color[nxt] = _GRAY
                    position[nxt] = len(path)
                    path.append(nxt)
                    stack.append(iter(graph.successors(nxt)))
                    break
            else:
                done = path.pop()
                del position[done]
                color[done] = _BLACK
                stack.pop()
    return None


# ============================================================================
# Pairing construction
# ============================================================================

def _as_callable(f: ChoiceFunction) -> Callable[[Face], int]:
    if callable(f) and not isinstance(f, Mapping):
        return f
    return f.__getitem__


def _is_upward_closed(d: SimplicialComplex, m: FrozenSet[Face]) -> bool:
    n = len(d.universe)
    for face in m:
        for i in range(n):
            if face >> i & 1:
                continue
            cover = face | (1 << i)
            if cover in d.faces and cover not in m:
                return False
    return True


def pairing_matching(d: SimplicialComplex, m: Iterable[Face], f: ChoiceFunction,
                     order: Optional[Sequence[int]] = None, check_c2: bool = True) -> Matching:
    """
    Build the matching ``μ(F) = F △ {f(F)}`` on ``m``.

    Args:
        d: The ambient complex.
        m: Faces to match (a subset of ``d``).
        f: Vertex index chosen for each face of ``m`` (mapping or callable).
        order: Rank of each vertex index in the total order; defaults to the
            universe order.
        check_c2: Also verify ``rank(f(F)) ≤ rank(f(G))`` for all G ⊆ F in
            ``m``; on success the result is certified acyclic.

    Returns:
        The matching; ``acyclic_certified`` reports the monotonicity check.

    Raises:
        PreconditionError: A face of ``m`` is outside ``d``, the chosen
            vertex of a face is not a vertex index of the universe, or ``F ∪ {f(F)}``
            or ``F ∖ {f(F)}`` is missing from ``m`` or has a different choice.
    """
    choose = _as_callable(f)
    m = frozenset(m)
    rank = list(order) if order is not None else list(range(len(d.universe)))

    choice: Dict[Face, int] = {}
    for face in m:
        if face not in d.faces:
            raise PreconditionError(f"face {d.labels_of(face)} is not in the complex")
        vertex = choose(face)
        if not isinstance(vertex, int) or not 0 <= vertex < len(d.universe):
            raise PreconditionError(
                f"chosen vertex {vertex!r} for {d.labels_of(face)} is outside the universe "
                f"of {len(d.universe)} vertices"
            )
        choice[face] = vertex

    mu: Dict[Face, Face] = {}
    for face in sorted_faces(m):
        vertex = choice[face]
        bit = 1 << vertex
        for neighbor in (face | bit, face & ~bit):
            if neighbor not in m or choice[neighbor] != vertex:
                raise PreconditionError(
                    f"pairing condition fails at {d.labels_of(face)}: "
                    f"{d.labels_of(neighbor)} must be matched with the same vertex "
                    f"{d.universe.labels[vertex]!r}"
                )
        mu[face] = face ^ bit

    certified = False
    if check_c2:
        violation = _monotonicity_violation(d, m, choice, rank)
        if violation is None:
            certified = True
        else:
            big, small = violation
            logger.warning(
                f"monotonicity fails for {d.labels_of(small)} ⊆ {d.labels_of(big)}; "
                f"acyclicity is not certified"
            )
    return Matching(d, mu, acyclic_certified=certified)


def _monotonicity_violation(d: SimplicialComplex, m: FrozenSet[Face], choice: Mapping[Face, int],
                            rank: Sequence[int]) -> Optional[Tuple[Face, Face]]:
    """First (F, G) with G ⊆ F in m and rank(f(F)) > rank(f(G)), or None."""
    if _is_upward_closed(d, m):
        # Intermediate faces of G ⊆ F all lie in m, so cover pairs suffice.
        for face in sorted_faces(m):
            top = rank[choice[face]]
            for i in iter_bits(face):
                below = face & ~(1 << i)
                if below in m and top > rank[choice[below]]:
                    return face, below
        return None
    for face in sorted_faces(m):
        top = rank[choice[face]]
        for below in submasks(face):
            if below != face and below in m and top > rank[choice[below]]:
                return face, below
    return None


# ============================================================================
# Matchings of the biclique complex
# ============================================================================

def order_ranks(labels: Sequence[str], order: Optional[Sequence[str]]) -> List[int]:
    """
    Rank per universe index for a total order given as a permutation of labels.

    Raises:
        PreconditionError: ``order`` is not a permutation of ``labels``.
    """
    if order is None:
        return list(range(len(labels)))
    order = [str(label) for label in order]
    if sorted(order) != sorted(labels) or len(set(order)) != len(order):
        raise PreconditionError("order must list every vertex of X ∪ Y exactly once")
    position = {label: i for i, label in enumerate(order)}
    return [position[label] for label in labels]


def dowker_matching(r: Relation, side: str = SIDE_LEFT, order: Optional[Sequence[str]] = None,
                    b: Optional[SimplicialComplex] = None) -> Matching:
    """
    The matching of ``B`` that collapses it onto ``C_X`` (left) or ``C_Y`` (right).

    For the left side, M = B ∖ C_X and ``f(F)`` is the largest X-neighbor of
    ``F ∩ Y`` in the total order; the right side swaps the roles of X and Y.

    Args:
        r: Bipartite relation.
        side: ``"left"`` or ``"right"``.
        order: Total order on X ∪ Y as a label permutation; defaults to
            declaration order.
        b: The biclique complex of ``r`` when already built.

    Raises:
        PreconditionError: Non-bipartite relation, unknown side, or bad order.
    """
    if side not in SIDES:
        raise PreconditionError(f"side must be one of {SIDES}, got {side!r}")
    require_bipartite(r)
    if b is None:
        b = biclique_complex(r)
    rank = order_ranks(b.universe.labels, order)
    shift = len(r.x_universe)
    x_full = r.x_universe.full_face

    cache: Dict[Face, int] = {}
    if side == SIDE_LEFT:
        m = [face for face in b.faces if face >> shift]

        def choose(face: Face) -> int:
            key = face >> shift
            if key not in cache:
                cache[key] = max(iter_bits(r.x_neighbors_mask(key)), key=rank.__getitem__)
            return cache[key]
    else:
        m = [face for face in b.faces if face & x_full]

        def choose(face: Face) -> int:
            key = face & x_full
            if key not in cache:
                ys = r.y_neighbors_mask(key) << shift
                cache[key] = max(iter_bits(ys), key=rank.__getitem__)
            return cache[key]

    matching = pairing_matching(b, m, choose, rank, check_c2=True)
    logger.info(f"{side} matching on B: {len(matching) // 2} pairs, "
                f"acyclic certified: {matching.acyclic_certified}")
    return matching
