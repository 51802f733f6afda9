"""
Smith normal form over the integers.

The matrix is held sparsely (row → {column: value}) with Python ints, so
magnitudes are unbounded. Each round picks the entry of smallest absolute
value (ties: lowest row, then lowest column), clears its column with row
operations and its row with column operations, and repeats with the
remainders until the pivot is isolated. The isolated pivots are then
normalized into invariant factors ``d_1 | d_2 | ...``.
"""

from math import gcd
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple, Union

import numpy as np

Matrix = Union[np.ndarray, Sequence[Sequence[int]]]


class SmithForm(NamedTuple):
    factors: Tuple[int, ...]
    rank: int


class _SparseMatrix:
    """Row and column indexed sparse integer matrix supporting elementary operations."""

    def __init__(self, matrix: Matrix):
        self.rows: Dict[int, Dict[int, int]] = {}
        self.cols: Dict[int, Set[int]] = {}
        array = np.asarray(matrix)
        if array.size == 0:
            return
        for i, j in zip(*np.nonzero(array)):
            self._set(int(i), int(j), int(array[i, j]))
        self._row_order = sorted(self.rows)
        self._first = 0

    def _set(self, i: int, j: int, value: int) -> None:
        if value:
            self.rows.setdefault(i, {})[j] = value
            self.cols.setdefault(j, set()).add(i)
        else:
            row = self.rows.get(i)
            if row is not None and j in row:
                del row[j]
                if not row:
                    del self.rows[i]
                column = self.cols[j]
                column.discard(i)
                if not column:
                    del self.cols[j]

    def pivot(self) -> Tuple[int, int, int]:
        """Smallest absolute value; ties by row then column; units short-circuit."""
        order = self._row_order
        while self._first < len(order) and order[self._first] not in self.rows:
            self._first += 1
        best: Optional[Tuple[int, int, int]] = None
        for i in order[self._first:]:
            row = self.rows.get(i)
            if row is None:
                continue
            for j, value in row.items():
                key = (abs(value), i, j)
                if best is None or key < best:
                    best = key
            if best[0] == 1:
                break
        size, i, j = best
        return i, j, self.rows[i][j]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        for j, value in list(self.rows[source].items()):
            current = self.rows.get(target, {}).get(j, 0)
            self._set(target, j, current + factor * value)

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]"""
        for i in list(self.cols[source]):
            value = self.rows[i][source]
            current = self.rows.get(i, {}).get(target, 0)
            self._set(i, target, current + factor * value)

    def remove(self, i: int, j: int) -> None:
        self._set(i, j, 0)


def _diagonalize(sparse: _SparseMatrix) -> List[int]:
    diagonal: List[int] = []
    while sparse.rows:
        i, j, a = sparse.pivot()
        reduced = True
        for other in sorted(sparse.cols[j] - {i}):
            quotient = sparse.rows[other][j] // a
            sparse.add_row(other, i, -quotient)
            if j in sparse.rows.get(other, {}):
                reduced = False
        if not reduced:
            continue
        for other in sorted(set(sparse.rows[i]) - {j}):
            quotient = sparse.rows[i][other] // a
            sparse.add_col(other, j, -quotient)
            if other in sparse.rows.get(i, {}):
                reduced = False
        if not reduced:
            continue
        diagonal.append(abs(a))
        sparse.remove(i, j)
    return diagonal


def _invariant_factors(diagonal: List[int]) -> Tuple[int, ...]:
    units = [d for d in diagonal if d == 1]
    rest = sorted(d for d in diagonal if d != 1)
    for a in range(len(rest)):
        for b in range(a + 1, len(rest)):
            g = gcd(rest[a], rest[b])
            rest[a], rest[b] = g, rest[a] * rest[b] // g
    return tuple(units + sorted(rest))


def smith_normal_form(matrix: Matrix) -> SmithForm:
    """
    Invariant factors and rank of an integer matrix.

    Args:
        matrix: Any 2-D integer array-like (numpy array or nested lists).

    Returns:
        ``SmithForm(factors, rank)`` with positive factors, each dividing the
        next; ``len(factors) == rank``.
    """
    diagonal = _diagonalize(_SparseMatrix(matrix))
    factors = _invariant_factors(diagonal)
    return SmithForm(factors, len(factors))
