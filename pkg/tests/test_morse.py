"""
Tests for dowkit.morse - matchings, collapse certificates and zigzags.
"""

import logging

import pytest

from dowkit.complex.faces import is_cover
from dowkit.complex.simplicial import closure
from dowkit.constants import ARROW_COLLAPSE, ARROW_RELABEL, SIDE_LEFT, SIDE_RIGHT
from dowkit.dowker.biclique import biclique_complex
from dowkit.dowker.complexes import dowker_left, dowker_right
from dowkit.errors import (
    ConstructionError,
    CyclicMatchingError,
    MatchingMismatchError,
    PreconditionError,
)
from dowkit.morse.collapse import (
    CollapseCertificate,
    collapse_sequence,
    replay_complexes,
    verify_certificate,
)
from dowkit.morse.matching import (
    Matching,
    dowker_matching,
    find_cycle,
    order_ranks,
    pairing_matching,
)
from dowkit.morse.zigzag import Zigzag, barmak_zigzag, isomorphic_zigzag
from dowkit.relations.relation import Relation


class TestMatching:
    """Tests for matchings and cycle detection."""

    def test_triangle_cycle(self, triangle, triangle_matching):
        """The three edges of the triangle form a cycle."""
        cycle = find_cycle(triangle_matching)
        assert [triangle.labels_of(f) for f in cycle] == [["1", "2"], ["1", "3"], ["2", "3"]]

    def test_full_simplex_cycle(self, full_simplex, simplex_matching):
        """On Δ the matching leaves ∅ and {1,2,3} critical and still cycles through the edges."""
        assert [full_simplex.labels_of(f) for f in simplex_matching.critical()] == [
            [], ["1", "2", "3"]
        ]
        cycle = find_cycle(simplex_matching)
        assert [full_simplex.labels_of(f) for f in cycle] == [["1", "2"], ["1", "3"], ["2", "3"]]

    def test_dropping_a_pair_breaks_the_cycle(self, triangle):
        face = triangle.universe.face
        mt = Matching.from_pairs(triangle, [
            (face(["2"]), face(["2", "3"])),
            (face(["3"]), face(["1", "3"])),
        ])
        assert find_cycle(mt) is None
        assert [triangle.labels_of(f) for f in mt.critical()] == [[], ["1"], ["1", "2"]]

    def test_not_a_cover(self, triangle):
        face = triangle.universe.face
        with pytest.raises(ConstructionError, match="neither a cover"):
            Matching(triangle, {face(["1"]): face(["2"]), face(["2"]): face(["1"])})

    def test_not_an_involution(self, triangle):
        face = triangle.universe.face
        with pytest.raises(ConstructionError, match="involution"):
            Matching(triangle, {face(["1"]): face(["1", "2"])})

    def test_face_matched_twice(self, triangle):
        face = triangle.universe.face
        with pytest.raises(ConstructionError, match="twice"):
            Matching.from_pairs(triangle, [
                (face(["1"]), face(["1", "2"])),
                (face(["1"]), face(["1", "3"])),
            ])


class TestPairingMatching:
    """Tests for matchings built from a vertex choice."""

    def test_pairing_condition_failure_names_face(self):
        """Choosing different vertices for ∅ and {a} breaks the pairing."""
        c = closure([["a", "b"]], ["a", "b"])
        choice = {0: 0, 0b01: 1, 0b10: 0, 0b11: 0}
        with pytest.raises(PreconditionError, match="pairing condition fails"):
            pairing_matching(c, choice.keys(), choice)

    def test_choice_outside_universe(self):
        """A vertex index past the universe is rejected before any pairing."""
        c = closure([["a", "b"]], ["a", "b"])
        choice = {0b01: 5, 0b11: 5}
        with pytest.raises(PreconditionError, match="outside the universe"):
            pairing_matching(c, choice.keys(), choice)
        with pytest.raises(PreconditionError, match="outside the universe"):
            pairing_matching(c, [0b01, 0b11], lambda face: -1)

    def test_monotonicity_failure_is_reported(self, caplog):
        """A valid pairing that is not monotone is built but not certified."""
        c = closure([["a", "b", "c"]], ["a", "b", "c"])
        f = c.universe.face
        choice = {f(["b"]): 0, f(["a", "b"]): 0, f(["c"]): 1, f(["b", "c"]): 1}
        with caplog.at_level(logging.WARNING, logger="dowkit"):
            mt = pairing_matching(c, choice.keys(), choice)
        assert not mt.acyclic_certified
        assert len(mt) == 4
        assert "monotonicity" in caplog.text

    def test_order_ranks(self):
        assert order_ranks(["a", "b", "c"], ["c", "a", "b"]) == [1, 2, 0]
        assert order_ranks(["a", "b"], None) == [0, 1]
        with pytest.raises(PreconditionError):
            order_ranks(["a", "b"], ["a", "a"])
        with pytest.raises(PreconditionError):
            order_ranks(["a", "b"], ["a"])


class TestDowkerMatching:
    """Tests for the matchings of the biclique complex."""

    def test_example1_sizes(self, example1, example1_counts):
        """|B ∖ C_X| = 44 and |B ∖ C_Y| = 40, both certified acyclic."""
        left = dowker_matching(example1, SIDE_LEFT)
        right = dowker_matching(example1, SIDE_RIGHT)
        assert len(left) == example1_counts["matching"]["left"]
        assert len(right) == example1_counts["matching"]["right"]
        assert left.acyclic_certified and right.acyclic_certified
        assert find_cycle(left) is None and find_cycle(right) is None

    def test_example1_partner(self, example1):
        """{1,6,8} pairs with {1,2,6,8}: 2 is the last element of X dividing both 6 and 8."""
        mt = dowker_matching(example1, SIDE_LEFT)
        face = mt.complex.universe.face
        assert mt.mu[face(["1", "6", "8"])] == face(["1", "2", "6", "8"])

    def test_order_changes_partner(self, example1):
        """With 1 ranked above 2 the same face loses 1 instead."""
        b = biclique_complex(example1)
        order = ["2", "3", "4", "1", "5", "6", "7", "8"]
        mt = dowker_matching(example1, SIDE_LEFT, order, b=b)
        face = b.universe.face
        assert mt.mu[face(["1", "6", "8"])] == face(["6", "8"])
        assert mt.acyclic_certified

    def test_unknown_side(self, example1):
        with pytest.raises(PreconditionError):
            dowker_matching(example1, "up")


class TestCollapseSequence:
    """Tests for certificate extraction and replay."""

    def test_example1_certificates_verify(self, example1, example1_counts):
        b = biclique_complex(example1)
        targets = {SIDE_LEFT: dowker_left(example1), SIDE_RIGHT: dowker_right(example1)}
        for side, target in targets.items():
            cert = collapse_sequence(b, target, dowker_matching(example1, side, b=b))
            assert len(cert) == example1_counts["certificate"][side]
            assert verify_certificate(cert).ok

    def test_steps_are_covers_by_descending_size(self, example1):
        b = biclique_complex(example1)
        cert = collapse_sequence(b, dowker_left(example1), dowker_matching(example1, b=b))
        sizes = [sigma.bit_count() for _, sigma in cert.steps]
        assert sizes == sorted(sizes, reverse=True)
        assert all(is_cover(tau, sigma) for tau, sigma in cert.steps)

    def test_swapped_steps_fail(self):
        """Removing {1,2} before {2,3} leaves {2} with two cofaces."""
        d = closure([["1", "2"], ["2", "3"]], ["1", "2", "3"])
        g = closure([["1"]], ["1", "2", "3"])
        face = d.universe.face
        good = CollapseCertificate(d, g, (
            (face(["3"]), face(["2", "3"])),
            (face(["2"]), face(["1", "2"])),
        ))
        assert verify_certificate(good).ok
        bad = CollapseCertificate(d, g, tuple(reversed(good.steps)))
        result = verify_certificate(bad)
        assert not result.ok
        assert result.step == 0
        assert result.reason == "tau is not free"

    def test_wrong_target_fails_at_the_end(self):
        d = closure([["1", "2"]], ["1", "2"])
        face = d.universe.face
        target = closure([["2"]], ["1", "2"])
        cert = CollapseCertificate(d, target, ((face(["2"]), face(["1", "2"])),))
        result = verify_certificate(cert)
        assert result.step == 1
        assert "differs" in result.reason

    def test_cyclic_matching_rejected(self, triangle, triangle_matching):
        point = closure([[]], ["1", "2", "3"])
        with pytest.raises(CyclicMatchingError) as info:
            collapse_sequence(triangle, point, triangle_matching)
        assert len(info.value.cycle) == 3

    def test_mismatched_target(self, example1):
        """The left matching does not collapse B onto C_Y."""
        b = biclique_complex(example1)
        with pytest.raises(MatchingMismatchError):
            collapse_sequence(b, dowker_right(example1), dowker_matching(example1, SIDE_LEFT, b=b))

    def test_replay_stride(self, example1):
        b = biclique_complex(example1)
        cert = collapse_sequence(b, dowker_left(example1), dowker_matching(example1, b=b))
        snapshots = list(replay_complexes(cert, 5))
        assert [steps for steps, _ in snapshots] == [5, 10, 15, 20, 22]
        assert snapshots[-1][1].same_faces(dowker_left(example1))
        assert list(replay_complexes(cert, 0)) == []


class TestZigzag:
    """Tests for zigzags between Dowker complexes and between isomorphic complexes."""

    def test_example1_zigzag_verifies(self, example1):
        z = barmak_zigzag(example1)
        assert len(z.nodes) == 5
        assert [a.kind for a in z.arrows] == [
            ARROW_RELABEL, ARROW_COLLAPSE, ARROW_COLLAPSE, ARROW_RELABEL
        ]
        assert z.verify().ok

    def test_expand_relabels(self, example1):
        """Expanding the two relabelings leaves only collapse arrows."""
        z = barmak_zigzag(example1).expand_relabels()
        assert all(a.kind == ARROW_COLLAPSE for a in z.arrows)
        assert len(z.arrows) == 10
        assert z.verify().ok

    def test_tampered_zigzag_fails(self, example1):
        z = barmak_zigzag(example1)
        swapped = Zigzag(z.nodes[::-1], z.arrows)
        assert not swapped.verify().ok

    def test_isomorphic_zigzag(self, triangle):
        other = closure([["a", "b"], ["b", "c"], ["a", "c"]], ["a", "b", "c"])
        z = isomorphic_zigzag(triangle, other, {"1": "b", "2": "c", "3": "a"})
        assert z.nodes[0].same_faces(triangle)
        assert z.nodes[-1].same_faces(other)
        assert z.verify().ok

    def test_isomorphic_zigzag_rejects_non_isomorphism(self, triangle):
        """An edge missing from the target is named."""
        path = closure([["a", "b"], ["b", "c"]], ["a", "b", "c"])
        with pytest.raises(PreconditionError):
            isomorphic_zigzag(triangle, path, {"1": "a", "2": "b", "3": "c"})

    def test_isomorphic_zigzag_rejects_void(self):
        void = closure([], ["a"])
        with pytest.raises(PreconditionError):
            isomorphic_zigzag(void, void, {})

    def test_shared_labels(self):
        """X and Y share labels; the zigzag goes through the tagged copy."""
        r = Relation.from_pairs(["a", "b"], ["a", "b"], [("a", "a"), ("a", "b"), ("b", "b")])
        z = barmak_zigzag(r)
        assert z.nodes[0].universe.labels == ("a", "b")
        assert z.verify().ok

