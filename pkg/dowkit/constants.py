"""
Consolidated constants and configuration for dowkit.

Limits that depend on the machine can be overridden with environment
variables, read once at import time:

- DOWKIT_MAX_HOMOLOGY_COLUMNS: largest boundary matrix the homology oracle
  accepts (columns per dimension).
- DOWKIT_MAX_RECTANGLE_FACES: estimated face budget above which the pipeline
  skips the rectangle complex.
- DOWKIT_REPLAY_STRIDE: homology spot-check stride while replaying collapse
  certificates in the pipeline (0 disables it).
- DOWKIT_DEBUG_CHECKS: set to "1" to re-verify downward closure of every
  enumerated complex.
"""

import os

# ============================================================================
# Face encoding
# ============================================================================

# Faces are bit sets keyed by vertex index; this is the word width.
MAX_UNIVERSE_SIZE: int = 64

# ============================================================================
# Oracle and pipeline limits
# ============================================================================

MAX_HOMOLOGY_COLUMNS: int = int(os.environ.get("DOWKIT_MAX_HOMOLOGY_COLUMNS", 5000))

MAX_RECTANGLE_FACES: int = int(os.environ.get("DOWKIT_MAX_RECTANGLE_FACES", 250000))

REPLAY_STRIDE: int = int(os.environ.get("DOWKIT_REPLAY_STRIDE", 0))

DEBUG_CHECKS: bool = os.environ.get("DOWKIT_DEBUG_CHECKS", "") == "1"

# ============================================================================
# Labels
# ============================================================================

# Face labels of containment relations: "F:" + comma-joined member labels.
FACE_LABEL_PREFIX = "F:"
FACE_LABEL_SEPARATOR = ","

# Disjointification tags, rendered as "(label,tag)".
LEFT_TAG = "0"
RIGHT_TAG = "1"

# ============================================================================
# Sides, arrows, strategies
# ============================================================================

SIDE_LEFT = "left"
SIDE_RIGHT = "right"
SIDES = (SIDE_LEFT, SIDE_RIGHT)

LEFTWARD = "leftward"
RIGHTWARD = "rightward"

ARROW_COLLAPSE = "collapse"
ARROW_RELABEL = "relabel"

STRATEGY_INTERSECTION = "intersection"
STRATEGY_MAXIMAL = "maximal"

# ============================================================================
# Random relations
# ============================================================================

PRNG_NAME = "numpy.random.PCG64"
PRNG_VERSION = 1
