"""
Random relations for fuzzing.

Pairs are drawn independently with numpy's PCG64 generator, so a seed fixes
the relation on every platform. The generator name and version are part of
every pipeline report.
"""

from typing import Optional

import numpy as np

from dowkit.constants import MAX_UNIVERSE_SIZE, PRNG_NAME, PRNG_VERSION
from dowkit.errors import PreconditionError, UniverseCapError
from dowkit.relations.relation import Relation


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def prng_description() -> str:
    return f"{PRNG_NAME} v{PRNG_VERSION}"


def random_relation(nx: int, ny: int, density: float, seed: Optional[int] = None,
                    rng: Optional[np.random.Generator] = None) -> Relation:
    """
    Relation on ``x0..x{nx-1}`` × ``y0..y{ny-1}`` with each pair present
    independently with probability ``density``.

    Args:
        nx: Size of X.
        ny: Size of Y.
        density: Inclusion probability in [0, 1].
        seed: Seed for a fresh PCG64 generator; ignored when ``rng`` is given.
        rng: Generator to draw from (property suites share one).

    Raises:
        PreconditionError: Negative sizes or density outside [0, 1].
        UniverseCapError: ``nx + ny`` exceeds the bit-set width.
    """
    if nx < 0 or ny < 0:
        raise PreconditionError(f"sizes must be nonnegative, got {nx} and {ny}")
    if not 0.0 <= density <= 1.0:
        raise PreconditionError(f"density must lie in [0, 1], got {density}")
    if nx + ny > MAX_UNIVERSE_SIZE:
        raise UniverseCapError(nx + ny, MAX_UNIVERSE_SIZE)
    if rng is None:
        rng = make_rng(seed)
    x = tuple(f"x{i}" for i in range(nx))
    y = tuple(f"y{j}" for j in range(ny))
    present = rng.random((nx, ny)) < density
    pairs = frozenset((x[i], y[j]) for i, j in zip(*np.nonzero(present)))
    return Relation(x, y, pairs)
