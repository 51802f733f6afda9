"""
Dowkit: Dowker complexes of relations, the biclique complex and certified
collapses between them.

Faces are bit sets over ordered vertex universes. Every collapse the library
claims comes with a certificate that can be replayed independently, and an
integral homology oracle cross-checks the results.
"""

import logging

__version__ = "0.1.0"

# Logger for dowkit operations (the library never attaches handlers)
logger = logging.getLogger("dowkit")

from dowkit.errors import (  # noqa: E402,F401
    ComplexTooLargeError,
    ConstructionError,
    CyclicMatchingError,
    DomainError,
    DowkitError,
    ImageConditionError,
    MatchingMismatchError,
    ParseError,
    PreconditionError,
    UniverseCapError,
    UnknownVertexError,
)
from dowkit.complex import (  # noqa: E402,F401
    SimplicialComplex,
    SimplicialMap,
    Universe,
    closure,
    euler_characteristic,
    f_vector,
)
from dowkit.relations import (  # noqa: E402,F401
    Relation,
    RelationMorphism,
    containment_relation,
    disjointify,
    transpose,
)
from dowkit.dowker import (  # noqa: E402,F401
    biclique_complex,
    dowker_left,
    dowker_right,
    rectangle_complex,
)
from dowkit.morse import (  # noqa: E402,F401
    CollapseCertificate,
    Matching,
    Zigzag,
    barmak_zigzag,
    collapse_sequence,
    dowker_matching,
    isomorphic_zigzag,
    pairing_matching,
    verify_certificate,
)
from dowkit.homology import HomologyProfile, homology  # noqa: E402,F401
from dowkit.fuzz import random_relation  # noqa: E402,F401
from dowkit.pipeline import PipelineOptions, PipelineReport, run_pipeline  # noqa: E402,F401
