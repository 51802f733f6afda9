"""
Property-based tests for zigzags between isomorphic complexes.

For any complex D and any relabeling alpha onto fresh vertices, the
zigzag of collapses from D to alpha(D) through the containment relations
verifies arrow by arrow.
"""

from hypothesis import given, settings, strategies as st

from dowkit.complex.maps import SimplicialMap, apply_map
from dowkit.complex.simplicial import SimplicialComplex, closure
from dowkit.constants import ARROW_COLLAPSE
from dowkit.morse.zigzag import isomorphic_zigzag

SOURCE_LABELS = ["a", "b", "c", "d", "e"]
TARGET_LABELS = ["p", "q", "r", "s", "t"]


# ============================================================================
# Strategies for generating test data
# ============================================================================

@st.composite
def complex_strategy(draw):
    """Closure of at most three random facets of up to three vertices over a..e."""
    facets = draw(st.lists(
        st.lists(st.sampled_from(SOURCE_LABELS), min_size=1, max_size=3, unique=True),
        min_size=1,
        max_size=3,
    ))
    return closure(facets, SOURCE_LABELS)


@st.composite
def relabeled_pair(draw):
    """A complex, its image under a random bijection, and that bijection."""
    d = draw(complex_strategy())
    images = draw(st.permutations(TARGET_LABELS))
    alpha = dict(zip(SOURCE_LABELS, images))
    simplex = closure([TARGET_LABELS], TARGET_LABELS)
    image = apply_map(SimplicialMap(d, simplex, alpha))
    return d, SimplicialComplex(simplex.universe, image.faces), alpha


# ============================================================================
# Property Tests
# ============================================================================

class TestIsomorphicZigzag:
    """Zigzags along an isomorphism are collapse-only and verify."""

    @settings(max_examples=50, deadline=None)
    @given(triple=relabeled_pair())
    def test_zigzag_verifies(self, triple):
        d, d2, alpha = triple
        z = isomorphic_zigzag(d, d2, alpha)
        assert z.nodes[0].same_faces(d)
        assert z.nodes[-1].same_faces(d2)
        assert all(arrow.kind == ARROW_COLLAPSE for arrow in z.arrows)
        assert z.verify().ok

    @settings(max_examples=20, deadline=None)
    @given(triple=relabeled_pair())
    def test_inverse_direction_verifies(self, triple):
        d, d2, alpha = triple
        inverse = {image: label for label, image in alpha.items()}
        assert isomorphic_zigzag(d2, d, inverse).verify().ok
