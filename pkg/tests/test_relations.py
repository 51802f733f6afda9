"""
Tests for dowkit.relations - relations, morphisms and disjointification.
"""

import pytest

from dowkit.complex.simplicial import closure
from dowkit.dowker.complexes import dowker_left
from dowkit.errors import ConstructionError, DomainError, PreconditionError, UnknownVertexError
from dowkit.relations.morphism import (
    RelationMorphism,
    compose_morphisms,
    disjointify,
    identity_morphism,
    induced_biclique_map,
    induced_left_map,
    induced_right_map,
    untag,
)
from dowkit.relations.relation import (
    Relation,
    bold_r,
    containment_relation,
    relabel_left,
    transpose,
    x_neighbors,
    y_neighbors,
)


class TestRelation:
    """Tests for relation construction and neighbor queries."""

    def test_neighbors(self, example1):
        """Common neighbors in declaration order."""
        assert y_neighbors(example1, ["1", "2"]) == ["6", "8"]
        assert y_neighbors(example1, ["2", "3"]) == ["6"]
        assert y_neighbors(example1, ["3", "4"]) == []
        assert x_neighbors(example1, ["6"]) == ["1", "2", "3"]

    def test_neighbors_of_empty_set(self, example1):
        """The empty set is related to everything."""
        assert y_neighbors(example1, []) == ["5", "6", "7", "8"]
        assert x_neighbors(example1, []) == ["1", "2", "3", "4"]

    def test_bold_r(self, example1):
        assert bold_r(example1, ["1", "2"], ["6", "8"])
        assert not bold_r(example1, ["1", "2"], ["5"])
        assert bold_r(example1, [], ["5"])
        assert bold_r(example1, ["3"], [])

    def test_outside_domain(self, example1):
        with pytest.raises(DomainError):
            y_neighbors(example1, ["9"])
        with pytest.raises(DomainError):
            bold_r(example1, ["1"], ["1"])

    def test_unknown_pair_element(self):
        with pytest.raises(UnknownVertexError) as info:
            Relation.from_pairs(["a"], ["b"], [("a", "c")])
        assert info.value.label == "c"

    def test_from_matrix(self, example1):
        """Dense rows in X order give the same relation."""
        matrix = [
            [1, 1, 1, 1],
            [0, 1, 0, 1],
            [0, 1, 0, 0],
            [0, 0, 0, 1],
        ]
        r = Relation.from_matrix(["1", "2", "3", "4"], ["5", "6", "7", "8"], matrix)
        assert r == example1

    def test_from_matrix_shape(self):
        with pytest.raises(ConstructionError):
            Relation.from_matrix(["a"], ["b", "c"], [[1]])
        with pytest.raises(ConstructionError):
            Relation.from_matrix(["a"], ["b"], [[2]])

    def test_transpose(self, example1):
        t = transpose(example1)
        assert t.x_universe == example1.y_universe
        assert ("6", "2") in t
        assert transpose(t) == example1

    def test_is_bipartite(self, example1):
        assert example1.is_bipartite
        assert not Relation.from_pairs(["a", "b"], ["b"], [("a", "b")]).is_bipartite


class TestMorphisms:
    """Tests for relation morphisms."""

    def test_identity_and_composition(self, example1):
        ident = identity_morphism(example1)
        composed = compose_morphisms(ident, ident)
        assert composed.phi_l == ident.phi_l
        assert composed.phi_r == ident.phi_r

    def test_not_relation_preserving(self, example1):
        """Sending (3,6) to (3,5) leaves the target relation."""
        phi_r = {y: y for y in example1.y_universe}
        phi_r["6"] = "5"
        with pytest.raises(ConstructionError, match="preserve"):
            RelationMorphism(example1, example1, {x: x for x in example1.x_universe}, phi_r)

    def test_partial_map_rejected(self, example1):
        with pytest.raises(ConstructionError, match="undefined"):
            RelationMorphism(example1, example1, {"1": "1"}, {y: y for y in example1.y_universe})

    def test_collapse_to_a_point(self, example1):
        """Everything onto the single pair (*, o) induces maps onto points."""
        point = Relation.from_pairs(["*"], ["o"], [("*", "o")])
        phi = RelationMorphism(
            example1, point,
            {x: "*" for x in example1.x_universe},
            {y: "o" for y in example1.y_universe},
        )
        assert len(induced_left_map(phi).target) == 2
        assert len(induced_right_map(phi).target) == 2
        assert len(induced_biclique_map(phi).target) == 4


class TestDisjointify:
    """Tests for tagging X and Y apart."""

    def test_shared_labels(self):
        """X = Y = {a, b}: tags make them disjoint, untag restores them."""
        r = Relation.from_pairs(["a", "b"], ["a", "b"], [("a", "a"), ("a", "b"), ("b", "b")])
        tagged, phi = disjointify(r)
        assert tagged.is_bipartite
        assert tagged.x_universe.labels == ("(a,0)", "(b,0)")
        assert tagged.y_universe.labels == ("(a,1)", "(b,1)")
        assert ("(a,0)", "(b,1)") in tagged
        assert phi.source == r and phi.target == tagged
        assert untag(tagged) == r

    def test_bipartite_input_is_retagged(self, example1):
        tagged, _ = disjointify(example1)
        assert tagged.x_universe.labels[0] == "(1,0)"
        assert len(tagged) == len(example1)

    def test_untag_requires_tags(self, example1):
        with pytest.raises(PreconditionError):
            untag(example1)


class TestContainmentRelation:
    """Tests for the vertex-in-face relation of a complex."""

    def test_left_dowker_complex_recovers_complex(self, triangle):
        rel = containment_relation(triangle)
        assert rel.x_universe.labels == ("1", "2", "3")
        assert "F:1,2" in rel.y_universe
        assert dowker_left(rel).same_faces(triangle)

    def test_void_rejected(self):
        with pytest.raises(PreconditionError):
            containment_relation(closure([], ["a"]))

    def test_reserved_prefix(self):
        with pytest.raises(PreconditionError, match="reserved"):
            containment_relation(closure([["F:x"]], ["F:x"]))

    def test_comma_label_rejected(self):
        """{"1,2"} and {"1", "2"} would both be labelled F:1,2."""
        c = closure([["1,2"], ["1", "2"]], ["1,2", "1", "2"])
        with pytest.raises(PreconditionError, match="ambiguous"):
            containment_relation(c)
        with pytest.raises(PreconditionError, match="ambiguous"):
            containment_relation(closure([["a)", "(b"]], ["a)", "(b"]))

    def test_tagged_labels_accepted(self):
        c = closure([["(1,0)", "(2,0)"]], ["(1,0)", "(2,0)"])
        rel = containment_relation(c)
        assert "F:(1,0),(2,0)" in rel.y_universe
        assert dowker_left(rel).same_faces(c)

    def test_relabel_left(self, triangle):
        rel = containment_relation(triangle)
        alpha = {"1": "a", "2": "b", "3": "c"}
        renamed = relabel_left(rel, alpha, ["a", "b", "c"])
        assert ("a", "F:1,2") in renamed
        with pytest.raises(PreconditionError):
            relabel_left(rel, {"1": "a", "2": "a", "3": "c"}, ["a", "c"])
