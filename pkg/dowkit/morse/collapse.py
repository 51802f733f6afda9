"""
Collapse certificates: extraction from an acyclic matching and replay.

A certificate lists elementary collapses ``(τ, σ)``, τ ≺ σ, that take one
complex down to a subcomplex. Extraction orders the matched pairs so that
each σ is maximal and each τ free when its turn comes; verification replays
the list from scratch and does not trust the extractor.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

import networkx as nx

from dowkit.complex.faces import Face, covers_within, indices_of, is_cover, sorted_faces
from dowkit.complex.simplicial import SimplicialComplex, is_subcomplex
from dowkit.errors import CyclicMatchingError, MatchingMismatchError, PreconditionError
from dowkit.morse.matching import Matching, find_cycle, upper_face_graph

logger = logging.getLogger(__name__)

Step = Tuple[Face, Face]


@dataclass(frozen=True)
class CollapseCertificate:
    """
    Ordered elementary collapses from ``from_complex`` down to ``to_complex``.

    Step faces are bit sets over ``from_complex.universe``; ``to_complex``
    is compared with the replay result by labels.
    """
    from_complex: SimplicialComplex
    to_complex: SimplicialComplex
    steps: Tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def labelled_steps(self) -> List[Tuple[List[str], List[str]]]:
        labels = self.from_complex.labels_of
        return [(labels(tau), labels(sigma)) for tau, sigma in self.steps]


@dataclass(frozen=True)
class VerificationResult:
    """Verdict of a replay: ``step`` is the first offending index, if any."""
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        if self.step is None:
            return self.reason
        return f"step {self.step}: {self.reason}"


def collapse_sequence(d: SimplicialComplex, g: SimplicialComplex, mt: Matching) -> CollapseCertificate:
    """
    Certificate that ``d`` collapses to ``g`` along the acyclic matching ``mt``.

    Pairs are emitted in reverse topological order of the upper face digraph,
    ties broken by descending ``|σ|`` and then canonical face order. The
    digraph only links faces of equal size, so the emitted ``|σ|`` never
    increases.

    Raises:
        PreconditionError: ``g`` is not a subcomplex of ``d`` or ``mt`` is not
            a matching on ``d``.
        MatchingMismatchError: The matched faces are not exactly ``d ∖ g``.
        CyclicMatchingError: ``mt`` has a cycle.
    """
    if not is_subcomplex(g, d):
        raise PreconditionError("target is not a subcomplex of the source complex")
    if mt.complex.universe != d.universe or mt.complex.faces != d.faces:
        raise PreconditionError("matching is not defined on the source complex")
    target = g.reindexed(d.universe)

    removed = d.faces - target.faces
    matched = mt.m
    if matched != removed:
        stray = sorted_faces(matched - removed)
        if stray:
            raise MatchingMismatchError(d.labels_of(stray[0]), "matched but kept in the target")
        missing = sorted_faces(removed - matched)
        raise MatchingMismatchError(d.labels_of(missing[0]), "removed but unmatched")

    cycle = find_cycle(mt)
    if cycle is not None:
        raise CyclicMatchingError([d.labels_of(face) for face in cycle])

    graph = upper_face_graph(mt).reverse(copy=False)
    order = nx.lexicographical_topological_sort(
        graph, key=lambda face: (-face.bit_count(), indices_of(face))
    )
    steps = tuple((mt.mu[sigma], sigma) for sigma in order)
    logger.info(f"collapse certificate: {len(steps)} steps, {len(d)} -> {len(target)} faces")
    return CollapseCertificate(d, g, steps)


def verify_certificate(c: CollapseCertificate) -> VerificationResult:
    """
    Replay a certificate and check every step.

    A step ``(τ, σ)`` is valid when τ ≺ σ, both are faces of the current
    complex, σ has no cover in it and σ is the only cover of τ in it. After
    the last step the remaining faces must be those of ``to_complex``.
    """
    current: Set[Face] = set(c.from_complex.faces)
    n = len(c.from_complex.universe)
    for i, (tau, sigma) in enumerate(c.steps):
        if not is_cover(tau, sigma):
            return VerificationResult(False, i, "not a cover pair")
        if tau not in current:
            return VerificationResult(False, i, "tau is not a face of the current complex")
        if sigma not in current:
            return VerificationResult(False, i, "sigma is not a face of the current complex")
        if any(cover in current for cover in covers_within(sigma, n)):
            return VerificationResult(False, i, "sigma is not maximal")
        if any(cover in current and cover != sigma for cover in covers_within(tau, n)):
            return VerificationResult(False, i, "tau is not free")
        current.discard(tau)
        current.discard(sigma)

    remaining = SimplicialComplex(c.from_complex.universe, frozenset(current), check=False)
    if not remaining.same_faces(c.to_complex):
        return VerificationResult(False, len(c.steps), "final complex differs from the target")
    return VerificationResult(True)


def replay_complexes(c: CollapseCertificate, stride: int) -> Iterator[Tuple[int, SimplicialComplex]]:
    """
    Yield ``(steps applied, complex)`` after every ``stride`` steps and after
    the last one. Assumes the certificate verifies.
    """
    if stride <= 0:
        return
    current: Set[Face] = set(c.from_complex.faces)
    universe = c.from_complex.universe
    total = len(c.steps)
    for i, (tau, sigma) in enumerate(c.steps, start=1):
        current.discard(tau)
        current.discard(sigma)
        if i % stride == 0 or i == total:
            yield i, SimplicialComplex(universe, frozenset(current), check=False)
