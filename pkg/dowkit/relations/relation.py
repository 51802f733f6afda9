"""
Finite binary relations with ordered ground sets.

A relation ``R ⊆ X × Y`` is stored both as its pair set (labels) and as
per-x / per-y adjacency bit sets over the indexed universes, so neighbor
queries reduce to a few integer ANDs.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Mapping, Sequence, Tuple

from dowkit.complex.faces import Face, Universe, UniverseLike, as_universe, iter_bits
from dowkit.complex.simplicial import SimplicialComplex, minimal_ground_set
from dowkit.constants import FACE_LABEL_PREFIX, FACE_LABEL_SEPARATOR
from dowkit.errors import ConstructionError, DomainError, PreconditionError, UnknownVertexError

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]


@dataclass(frozen=True)
class Relation:
    """
    Binary relation from an ordered set X to an ordered set Y.

    Attributes:
        x_universe: X in declaration order.
        y_universe: Y in declaration order.
        pairs: Related pairs ``(x, y)`` as labels.
        x_adj: For each x (by index), the bit set of its Y-neighbors.
        y_adj: For each y (by index), the bit set of its X-neighbors.
    """
    x_universe: Universe
    y_universe: Universe
    pairs: FrozenSet[Pair]
    x_adj: Tuple[Face, ...] = field(init=False, repr=False, compare=False)
    y_adj: Tuple[Face, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        x = as_universe(self.x_universe)
        y = as_universe(self.y_universe)
        object.__setattr__(self, "x_universe", x)
        object.__setattr__(self, "y_universe", y)
        pairs = frozenset((str(a), str(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)

        x_adj = [0] * len(x)
        y_adj = [0] * len(y)
        for a, b in pairs:
            if a not in x:
                raise UnknownVertexError(a, "X")
            if b not in y:
                raise UnknownVertexError(b, "Y")
            i, j = x.index_of(a), y.index_of(b)
            x_adj[i] |= 1 << j
            y_adj[j] |= 1 << i
        object.__setattr__(self, "x_adj", tuple(x_adj))
        object.__setattr__(self, "y_adj", tuple(y_adj))

    @classmethod
    def from_pairs(cls, x: UniverseLike, y: UniverseLike, pairs: Iterable[Sequence[str]]) -> "Relation":
        return cls(as_universe(x), as_universe(y), frozenset((p[0], p[1]) for p in pairs))

    @classmethod
    def from_matrix(cls, x: UniverseLike, y: UniverseLike, matrix: Sequence[Sequence[int]]) -> "Relation":
        """Build from a dense 0/1 matrix whose rows follow X order and columns Y order."""
        x, y = as_universe(x), as_universe(y)
        if len(matrix) != len(x):
            raise ConstructionError(f"matrix has {len(matrix)} rows, expected {len(x)}")
        pairs = []
        for i, row in enumerate(matrix):
            if len(row) != len(y):
                raise ConstructionError(f"matrix row {i} has {len(row)} entries, expected {len(y)}")
            for j, value in enumerate(row):
                if value not in (0, 1, True, False):
                    raise ConstructionError(f"matrix entry ({i},{j}) must be 0 or 1, got {value!r}")
                if value:
                    pairs.append((x.labels[i], y.labels[j]))
        return cls(x, y, frozenset(pairs))

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_bipartite(self) -> bool:
        """X and Y are label-disjoint."""
        return set(self.x_universe.labels).isdisjoint(self.y_universe.labels)

    @property
    def sorted_pairs(self) -> List[Pair]:
        """Pairs in lexicographic (X order, Y order)."""
        xi, yi = self.x_universe.index_of, self.y_universe.index_of
        return sorted(self.pairs, key=lambda p: (xi(p[0]), yi(p[1])))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __repr__(self) -> str:
        return f"<Relation(|X|={len(self.x_universe)}, |Y|={len(self.y_universe)}, pairs={len(self.pairs)})>"

    # ------------------------------------------------------------------
    # Bit-set neighbor queries
    # ------------------------------------------------------------------

    def y_neighbors_mask(self, u: Face) -> Face:
        """Y-neighbors of the X-subset ``u`` (all of Y when ``u`` is empty)."""
        common = self.y_universe.full_face
        adj = self.x_adj
        for i in iter_bits(u):
            common &= adj[i]
            if not common:
                break
        return common

    def x_neighbors_mask(self, v: Face) -> Face:
        """X-neighbors of the Y-subset ``v`` (all of X when ``v`` is empty)."""
        common = self.x_universe.full_face
        adj = self.y_adj
        for j in iter_bits(v):
            common &= adj[j]
            if not common:
                break
        return common

    def x_face(self, labels: Iterable[str]) -> Face:
        return _domain_face(self.x_universe, labels, "X")

    def y_face(self, labels: Iterable[str]) -> Face:
        return _domain_face(self.y_universe, labels, "Y")


def _domain_face(universe: Universe, labels: Iterable[str], side: str) -> Face:
    mask = 0
    for label in labels:
        label = str(label)
        if label not in universe:
            raise DomainError(f"{label!r} is not an element of {side}")
        mask |= 1 << universe.index_of(label)
    return mask


# ============================================================================
# Relation operations
# ============================================================================

def bold_r(r: Relation, u: Iterable[str], v: Iterable[str]) -> bool:
    """
    Whether ``U × V ⊆ R``.

    Vacuously true when either side is empty.

    Raises:
        DomainError: An element lies outside X (for ``u``) or Y (for ``v``).
    """
    u_mask = r.x_face(u)
    v_mask = r.y_face(v)
    return v_mask & ~r.y_neighbors_mask(u_mask) == 0


def y_neighbors(r: Relation, u: Iterable[str]) -> List[str]:
    """Elements of Y related to every element of ``u``, in Y order."""
    return r.y_universe.labels_of(r.y_neighbors_mask(r.x_face(u)))


def x_neighbors(r: Relation, v: Iterable[str]) -> List[str]:
    """Elements of X related to every element of ``v``, in X order."""
    return r.x_universe.labels_of(r.x_neighbors_mask(r.y_face(v)))


def transpose(r: Relation) -> Relation:
    """The relation from Y to X with the same pairs reversed."""
    return Relation(r.y_universe, r.x_universe, frozenset((b, a) for a, b in r.pairs))


def relabel_left(r: Relation, alpha: Mapping[str, str], x_order: Sequence[str]) -> Relation:
    """
    The relation ``{(alpha(x), y) : (x, y) in R}`` over the new X ``x_order``.

    ``alpha`` must be injective on X.
    """
    images = [alpha[label] for label in r.x_universe.labels]
    if len(set(images)) != len(images):
        raise PreconditionError("relabeling of X is not injective")
    return Relation(as_universe(x_order), r.y_universe,
                    frozenset((alpha[a], b) for a, b in r.pairs))


def face_label(labels: Sequence[str]) -> str:
    """Fresh label of a face in a containment relation, e.g. ``F:1,3``."""
    return FACE_LABEL_PREFIX + FACE_LABEL_SEPARATOR.join(labels)


def _joinable(label: str) -> bool:
    """True when ``label`` splits back out of a separator-joined face label."""
    if not label:
        return False
    depth = 0
    for ch in label:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
        elif ch == FACE_LABEL_SEPARATOR and depth == 0:
            return False
    return depth == 0


def containment_relation(d: SimplicialComplex) -> Relation:
    """
    Vertex-in-face relation of a nonempty complex.

    X is the minimal ground set of ``d``; Y has one label per face (see
    ``face_label``), in canonical face order; ``(x, y_F)`` is related iff
    ``x ∈ F``. The left Dowker complex of the result has the faces of ``d``.

    Raises:
        PreconditionError: ``d`` is void, a vertex label starts with the
            reserved face-label prefix, or a vertex label could not be split
            back out of a face label. Commas must sit inside balanced
            parentheses, so tagged labels such as ``(a,0)`` pass.
    """
    if d.is_void:
        raise PreconditionError("containment relation of the void complex is undefined")
    ground = minimal_ground_set(d)
    for label in ground:
        if label.startswith(FACE_LABEL_PREFIX):
            raise PreconditionError(
                f"vertex label {label!r} collides with the reserved prefix {FACE_LABEL_PREFIX!r}"
            )
        if not _joinable(label):
            raise PreconditionError(
                f"vertex label {label!r} is ambiguous inside face labels: it must be nonempty "
                f"and keep {FACE_LABEL_SEPARATOR!r} inside balanced parentheses"
            )
    y_labels = []
    pairs = []
    for face in d.sorted_faces:
        members = d.labels_of(face)
        y = face_label(members)
        y_labels.append(y)
        pairs.extend((x, y) for x in members)
    logger.debug(f"containment relation: {len(ground)} vertices, {len(y_labels)} faces")
    return Relation(Universe(tuple(ground)), Universe(tuple(y_labels)), frozenset(pairs))
