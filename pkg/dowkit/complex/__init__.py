"""
Faces, simplicial complexes and simplicial maps.
"""

from dowkit.complex.faces import (  # noqa: F401
    EMPTY_FACE,
    Face,
    Universe,
    VertexId,
    as_universe,
    is_cover,
    iter_bits,
    sorted_faces,
    submasks,
)
from dowkit.complex.simplicial import (  # noqa: F401
    SimplicialComplex,
    closure,
    closure_of_masks,
    complex_from_label_faces,
    empty_face_complex,
    euler_characteristic,
    f_vector,
    is_subcomplex,
    minimal_ground_set,
    void_complex,
)
from dowkit.complex.maps import (  # noqa: F401
    SimplicialMap,
    apply_map,
    compose_maps,
    identity_map,
    inclusion_map,
    is_isomorphism,
)
