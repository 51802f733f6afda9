"""
Dowker complexes, the biclique complex and the rectangle complex.
"""

from dowkit.dowker.complexes import (  # noqa: F401
    STRATEGIES,
    DowkerOutput,
    dowker_complexes,
    dowker_left,
    dowker_right,
)
from dowkit.dowker.biclique import (  # noqa: F401
    PROVENANCE_BICLIQUE,
    PROVENANCE_EMPTY,
    PROVENANCE_LEFT,
    PROVENANCE_RIGHT,
    biclique_complex,
    biclique_universe,
    bicliques,
    provenance,
    require_bipartite,
    split_face,
)
from dowkit.dowker.rectangle import (  # noqa: F401
    estimate_rectangle_faces,
    pair_label,
    rectangle_complex,
    rectangle_projections,
    rectangle_universe,
)
