"""
JSON codecs for relations, complexes, matchings, certificates, zigzags and
homology profiles.

Every ``load_*`` takes a path (``-`` for standard input) and every
``save_*`` a path (``-`` for standard output); files are UTF-8. The
``*_to_dict`` / ``*_from_dict`` pairs do the actual conversion.
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from dowkit.complex.faces import Face
from dowkit.complex.simplicial import SimplicialComplex, closure
from dowkit.constants import ARROW_COLLAPSE, ARROW_RELABEL, RIGHTWARD
from dowkit.errors import DowkitError, ParseError
from dowkit.homology.profile import HomologyProfile
from dowkit.morse.collapse import CollapseCertificate
from dowkit.morse.matching import Matching
from dowkit.morse.zigzag import Zigzag, ZigzagArrow
from dowkit.relations.relation import Relation

PathLike = Union[str, Path]

STDIO = "-"


# ============================================================================
# Reading and writing
# ============================================================================

def read_json(path: PathLike) -> Any:
    """
    Decode a JSON document.

    Raises:
        ParseError: The file is unreadable or not valid JSON; carries
            ``path:line:col`` when the decoder reports a position.
    """
    source = str(path)
    try:
        if source == STDIO:
            text = sys.stdin.read()
        else:
            text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(source, f"cannot read: {e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(source, e.msg, e.lineno, e.colno) from None


def write_json(data: Any, path: PathLike) -> None:
    text = json.dumps(data, ensure_ascii=False, indent=2) + "\n"
    if str(path) == STDIO:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load(path: PathLike, decode):
    data = read_json(path)
    try:
        return decode(data)
    except ParseError:
        raise
    except (DowkitError, KeyError, TypeError, ValueError) as e:
        detail = f"missing key {e}" if isinstance(e, KeyError) else str(e)
        raise ParseError(str(path), detail) from None


def _labels(values: Any, what: str) -> List[str]:
    if not isinstance(values, list):
        raise ValueError(f"{what} must be a list")
    return [str(v) for v in values]


# ============================================================================
# Relations
# ============================================================================

def relation_to_dict(r: Relation) -> Dict[str, Any]:
    return {
        "x": list(r.x_universe.labels),
        "y": list(r.y_universe.labels),
        "pairs": [list(p) for p in r.sorted_pairs],
    }


def relation_from_dict(data: Dict[str, Any]) -> Relation:
    """Accepts the ``pairs`` form or the dense ``matrix`` form."""
    x = _labels(data["x"], "x")
    y = _labels(data["y"], "y")
    if "matrix" in data:
        return Relation.from_matrix(x, y, data["matrix"])
    pairs = data["pairs"]
    for pair in pairs:
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"pair {pair!r} must be a two-element list")
    return Relation.from_pairs(x, y, [(str(a), str(b)) for a, b in pairs])


def load_relation(path: PathLike) -> Relation:
    return _load(path, relation_from_dict)


def save_relation(r: Relation, path: PathLike) -> None:
    write_json(relation_to_dict(r), path)


# ============================================================================
# Complexes
# ============================================================================

def complex_to_dict(c: SimplicialComplex) -> Dict[str, Any]:
    """Universe plus facets; ``{∅}`` has the single facet ``[]``, the void complex none."""
    return {
        "universe": list(c.universe.labels),
        "facets": [c.labels_of(face) for face in c.facets()],
    }


def complex_from_dict(data: Dict[str, Any]) -> SimplicialComplex:
    universe = _labels(data["universe"], "universe")
    facets = data["facets"]
    if not isinstance(facets, list):
        raise ValueError("facets must be a list")
    return closure([_labels(f, "facet") for f in facets], universe)


def load_complex(path: PathLike) -> SimplicialComplex:
    return _load(path, complex_from_dict)


def save_complex(c: SimplicialComplex, path: PathLike) -> None:
    write_json(complex_to_dict(c), path)


# ============================================================================
# Matchings
# ============================================================================

def matching_to_dict(mt: Matching) -> Dict[str, Any]:
    labels = mt.complex.labels_of
    return {
        "complex": complex_to_dict(mt.complex),
        "pairs": [[labels(lower), labels(upper)] for lower, upper in mt.pairs()],
    }


def matching_from_dict(data: Dict[str, Any]) -> Matching:
    """Without a ``complex`` key, the closure of the matched faces over their labels is used."""
    label_pairs = []
    for a, b in data["pairs"]:
        lower, upper = _labels(a, "face"), _labels(b, "face")
        if len(set(lower)) > len(set(upper)):
            lower, upper = upper, lower
        label_pairs.append((lower, upper))
    if "complex" in data:
        c = complex_from_dict(data["complex"])
    else:
        universe: List[str] = []
        for a, b in label_pairs:
            for label in a + b:
                if label not in universe:
                    universe.append(label)
        c = closure([upper for _, upper in label_pairs], universe)
    face = c.universe.face
    return Matching.from_pairs(c, [(face(a), face(b)) for a, b in label_pairs])


def load_matching(path: PathLike) -> Matching:
    return _load(path, matching_from_dict)


def save_matching(mt: Matching, path: PathLike) -> None:
    write_json(matching_to_dict(mt), path)


# ============================================================================
# Certificates
# ============================================================================

def certificate_to_dict(c: CollapseCertificate) -> Dict[str, Any]:
    return {
        "from": complex_to_dict(c.from_complex),
        "to": complex_to_dict(c.to_complex),
        "steps": [{"tau": tau, "sigma": sigma} for tau, sigma in c.labelled_steps()],
    }


def certificate_from_dict(data: Dict[str, Any]) -> CollapseCertificate:
    source = complex_from_dict(data["from"])
    target = complex_from_dict(data["to"])
    steps = []
    for step in data["steps"]:
        tau: Face = source.universe.face(_labels(step["tau"], "tau"))
        sigma: Face = source.universe.face(_labels(step["sigma"], "sigma"))
        steps.append((tau, sigma))
    return CollapseCertificate(source, target, tuple(steps))


def load_certificate(path: PathLike) -> CollapseCertificate:
    return _load(path, certificate_from_dict)


def save_certificate(c: CollapseCertificate, path: PathLike) -> None:
    write_json(certificate_to_dict(c), path)


# ============================================================================
# Zigzags and homology
# ============================================================================

def zigzag_to_dict(z: Zigzag) -> Dict[str, Any]:
    arrows = []
    for arrow in z.arrows:
        entry: Dict[str, Any] = {"kind": arrow.kind, "direction": arrow.direction}
        if arrow.kind == ARROW_COLLAPSE:
            entry["certificate"] = certificate_to_dict(arrow.certificate)
        else:
            entry["map"] = dict(sorted(arrow.vertex_map.items()))
        arrows.append(entry)
    return {"nodes": [complex_to_dict(c) for c in z.nodes], "arrows": arrows}


def zigzag_from_dict(data: Dict[str, Any]) -> Zigzag:
    nodes = [complex_from_dict(c) for c in data["nodes"]]
    arrows = []
    for entry in data["arrows"]:
        kind = entry["kind"]
        if kind == ARROW_RELABEL:
            vertex_map = {str(k): str(v) for k, v in entry["map"].items()}
            arrows.append(ZigzagArrow(kind, entry.get("direction", RIGHTWARD), vertex_map=vertex_map))
        else:
            cert = certificate_from_dict(entry["certificate"])
            arrows.append(ZigzagArrow(kind, entry["direction"], certificate=cert))
    return Zigzag(tuple(nodes), tuple(arrows))


def load_zigzag(path: PathLike) -> Zigzag:
    return _load(path, zigzag_from_dict)


def save_zigzag(z: Zigzag, path: PathLike) -> None:
    write_json(zigzag_to_dict(z), path)


def save_profile(p: HomologyProfile, path: PathLike) -> None:
    write_json(p.to_dict(), path)


def load_order(path: Optional[PathLike]) -> Optional[List[str]]:
    """A total order file: a JSON list of labels, or ``{"order": [...]}``."""
    if path is None:
        return None

    def decode(data: Any) -> List[str]:
        if isinstance(data, dict):
            data = data["order"]
        return _labels(data, "order")

    return _load(path, decode)


def load_vertex_map(path: PathLike) -> Dict[str, str]:
    """A vertex bijection file: a JSON object from source to target labels."""

    def decode(data: Any) -> Dict[str, str]:
        if not isinstance(data, dict):
            raise ValueError("vertex map must be a JSON object")
        return {str(k): str(v) for k, v in data.items()}

    return _load(path, decode)


def load_verifiable(path: PathLike) -> Union[CollapseCertificate, Zigzag]:
    """A certificate, or a zigzag when the document has ``nodes``."""

    def decode(data: Any) -> Union[CollapseCertificate, Zigzag]:
        if not isinstance(data, dict):
            raise ValueError("expected a JSON object")
        if "nodes" in data:
            return zigzag_from_dict(data)
        return certificate_from_dict(data)

    return _load(path, decode)
