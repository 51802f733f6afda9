"""
Binary relations, their morphisms, and the containment relation of a complex.
"""

from dowkit.relations.relation import (  # noqa: F401
    Relation,
    bold_r,
    containment_relation,
    face_label,
    relabel_left,
    transpose,
    x_neighbors,
    y_neighbors,
)
from dowkit.relations.morphism import (  # noqa: F401
    RelationMorphism,
    compose_morphisms,
    disjointify,
    identity_morphism,
    induced_biclique_map,
    induced_left_map,
    induced_right_map,
    tag_label,
    untag,
    untag_label,
)
