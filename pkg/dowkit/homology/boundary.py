"""
Simplicial boundary matrices.

Chains are unreduced: the empty face is not a generator. A k-face with
vertices ``v_0 < ... < v_k`` (universe order) has boundary
``Σ (-1)^i (F ∖ {v_i})``.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from dowkit import constants
from dowkit.complex.faces import Face, iter_bits
from dowkit.complex.simplicial import SimplicialComplex
from dowkit.errors import ComplexTooLargeError, PreconditionError


@dataclass
class BoundaryMatrix:
    """
    Matrix of ``∂_k`` with rows the (k-1)-faces and columns the k-faces,
    both in canonical order.
    """
    dimension: int
    rows: List[Face]
    cols: List[Face]
    entries: np.ndarray

    @property
    def shape(self):
        return self.entries.shape


def boundary_matrix(c: SimplicialComplex, k: int, max_columns: Optional[int] = None) -> BoundaryMatrix:
    """
    The oriented boundary ``∂_k`` of ``c``.

    Args:
        c: The complex.
        k: Dimension of the column faces, ``k ≥ 0``. For ``k = 0`` the matrix
            has no rows.
        max_columns: Column cap; defaults to ``MAX_HOMOLOGY_COLUMNS``.

    Raises:
        ComplexTooLargeError: More k-faces than the cap.
    """
    if k < 0:
        raise PreconditionError(f"boundary dimension must be nonnegative, got {k}")
    cap = constants.MAX_HOMOLOGY_COLUMNS if max_columns is None else max_columns
    cols = c.faces_of_dimension(k)
    if len(cols) > cap:
        raise ComplexTooLargeError(len(cols), cap, k)
    rows = c.faces_of_dimension(k - 1) if k > 0 else []
    row_index = {face: i for i, face in enumerate(rows)}

    entries = np.zeros((len(rows), len(cols)), dtype=np.int8)
    if k > 0:
        for j, face in enumerate(cols):
            for position, vertex in enumerate(iter_bits(face)):
                entries[row_index[face & ~(1 << vertex)], j] = -1 if position % 2 else 1
    return BoundaryMatrix(k, rows, cols, entries)


def boundary_squared_is_zero(c: SimplicialComplex, max_columns: Optional[int] = None) -> bool:
    """True iff ``∂_{k-1} ∘ ∂_k = 0`` for every k of ``c``."""
    previous = None
    for k in range(1, c.dimension + 1):
        current = boundary_matrix(c, k, max_columns)
        if previous is not None:
            before = previous.entries.astype(np.int64)
            # column by column: each k-face has only k+1 nonzero entries
            for j in range(current.entries.shape[1]):
                column = current.entries[:, j]
                support = np.flatnonzero(column)
                if np.any(before[:, support] @ column[support].astype(np.int64)):
                    return False
        previous = current
    return True
