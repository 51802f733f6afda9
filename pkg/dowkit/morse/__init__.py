"""
Matchings, collapse certificates and zigzags.
"""

from dowkit.morse.matching import (  # noqa: F401
    Matching,
    dowker_matching,
    find_cycle,
    order_ranks,
    pairing_matching,
    upper_face_graph,
)
from dowkit.morse.collapse import (  # noqa: F401
    CollapseCertificate,
    VerificationResult,
    collapse_sequence,
    replay_complexes,
    verify_certificate,
)
from dowkit.morse.zigzag import (  # noqa: F401
    Zigzag,
    ZigzagArrow,
    barmak_zigzag,
    collapse_arrow,
    isomorphic_zigzag,
    relabel_arrow,
    zigzag_through_bicliques,
)
