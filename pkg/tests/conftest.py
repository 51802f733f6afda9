"""
Pytest configuration and fixtures for dowkit tests.
"""

import json
import os
from pathlib import Path

import pytest

# Re-verify downward closure of every enumerated complex during tests
os.environ['DOWKIT_DEBUG_CHECKS'] = '1'

from dowkit.complex.simplicial import closure  # noqa: E402
from dowkit.morse.matching import Matching  # noqa: E402
from dowkit.relations.relation import Relation  # noqa: E402

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def example1_counts():
    """Hand-checked face counts of the divides relation on {1..4} × {5..8}."""
    return json.loads((DATA_DIR / "example1_counts.json").read_text(encoding="utf-8"))


@pytest.fixture
def example1(example1_counts):
    """The divides relation: x R y iff x divides y."""
    data = example1_counts["relation"]
    return Relation.from_pairs(data["x"], data["y"], data["pairs"])


@pytest.fixture
def triangle():
    """Boundary of the triangle on 1, 2, 3."""
    return closure([["1", "2"], ["2", "3"], ["1", "3"]], ["1", "2", "3"])


@pytest.fixture
def triangle_matching(triangle):
    """{1}↔{1,2}, {2}↔{2,3}, {3}↔{1,3}: a matching with a cycle."""
    face = triangle.universe.face
    return Matching.from_pairs(triangle, [
        (face(["1"]), face(["1", "2"])),
        (face(["2"]), face(["2", "3"])),
        (face(["3"]), face(["1", "3"])),
    ])


@pytest.fixture
def full_simplex():
    """The full simplex Δ on 1, 2, 3."""
    return closure([["1", "2", "3"]], ["1", "2", "3"])


@pytest.fixture
def simplex_matching(full_simplex):
    """The same three pairs on Δ; M = Δ ∖ {∅, {1,2,3}} and μ has a cycle."""
    face = full_simplex.universe.face
    return Matching.from_pairs(full_simplex, [
        (face(["1"]), face(["1", "2"])),
        (face(["2"]), face(["2", "3"])),
        (face(["3"]), face(["1", "3"])),
    ])


@pytest.fixture
def example1_file(tmp_path, example1_counts):
    """Example 1 written as a relation JSON file."""
    path = tmp_path / "example1.json"
    path.write_text(json.dumps(example1_counts["relation"]), encoding="utf-8")
    return path
