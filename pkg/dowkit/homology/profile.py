"""
Integral homology profiles of simplicial complexes.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from dowkit import constants
from dowkit.complex.simplicial import SimplicialComplex, f_vector
from dowkit.errors import ComplexTooLargeError, PreconditionError
from dowkit.homology.boundary import boundary_matrix
from dowkit.homology.snf import smith_normal_form

logger = logging.getLogger(__name__)


@dataclass
class HomologyProfile:
    """
    Betti numbers and torsion coefficients per dimension, plus the Euler
    characteristic. Unreduced: a point has ``betti == [1]``.
    """
    betti: List[int] = field(default_factory=list)
    torsion: List[List[int]] = field(default_factory=list)
    euler: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion], "euler": self.euler}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "HomologyProfile":
        return cls(
            betti=[int(b) for b in data.get("betti", [])],
            torsion=[[int(t) for t in ts] for ts in data.get("torsion", [])],
            euler=int(data.get("euler", 0)),
        )

    def padded(self, length: int) -> "HomologyProfile":
        betti = list(self.betti) + [0] * (length - len(self.betti))
        torsion = [list(t) for t in self.torsion] + [[] for _ in range(length - len(self.torsion))]
        return HomologyProfile(betti, torsion, self.euler)


def homology(c: SimplicialComplex, max_columns: Optional[int] = None) -> HomologyProfile:
    """
    Integral homology of ``c``.

    ``betti_k = n_k - rank ∂_k - rank ∂_{k+1}``; ``torsion_k`` lists the
    invariant factors of ``∂_{k+1}`` above 1.

    Raises:
        PreconditionError: ``c`` is the void complex.
        ComplexTooLargeError: A boundary matrix exceeds the column cap.
    """
    if c.is_void:
        raise PreconditionError("homology of the void complex is undefined")
    counts = f_vector(c)
    top = len(counts) - 1
    if top < 0:
        return HomologyProfile([], [], 0)
    cap = constants.MAX_HOMOLOGY_COLUMNS if max_columns is None else max_columns
    for k, n in enumerate(counts):
        if n > cap:
            raise ComplexTooLargeError(n, cap, k)

    # ranks[k] and factors[k] describe ∂_k; ∂_0 and ∂_{top+1} vanish.
    ranks = [0] * (top + 2)
    factors: List[tuple] = [()] * (top + 2)
    for k in range(1, top + 1):
        form = smith_normal_form(boundary_matrix(c, k, max_columns).entries)
        ranks[k] = form.rank
        factors[k] = form.factors

    betti = [counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    torsion = [[d for d in factors[k + 1] if d > 1] for k in range(top + 1)]
    euler = sum((-1) ** k * n for k, n in enumerate(counts))
    logger.debug(f"homology: betti={betti}, euler={euler}")
    return HomologyProfile(betti, torsion, euler)


def profiles_equal(a: HomologyProfile, b: HomologyProfile) -> bool:
    """Compare after padding to a common length with zeros and empty torsion."""
    length = max(len(a.betti), len(b.betti), len(a.torsion), len(b.torsion))
    pa, pb = a.padded(length), b.padded(length)
    return pa.betti == pb.betti and pa.torsion == pb.torsion
