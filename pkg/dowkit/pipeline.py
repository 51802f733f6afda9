"""
End-to-end verification pipeline.

Runs, on one relation: disjointify → Dowker complexes → biclique complex →
both Dowker matchings → acyclicity → both collapse certificates → replay →
zigzag check → homology cross-check (the rectangle complex included when
within budget). Every check is recorded by name; the run passes when no
check fails. Timings are kept apart from the rest so that two runs on the
same input produce identical reports once timings are dropped.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence

from dowkit import constants
from dowkit.complex.simplicial import (
    SimplicialComplex,
    euler_characteristic,
    f_vector,
    is_subcomplex,
)
from dowkit.constants import (
    SIDE_LEFT,
    SIDE_RIGHT,
    SIDES,
    STRATEGY_INTERSECTION,
    STRATEGY_MAXIMAL,
)
from dowkit.dowker.biclique import biclique_complex, bicliques
from dowkit.dowker.complexes import dowker_left, dowker_right
from dowkit.dowker.rectangle import (
    estimate_rectangle_faces,
    rectangle_complex,
    rectangle_projections,
)
from dowkit.errors import ComplexTooLargeError, DowkitError
from dowkit.fuzz import prng_description
from dowkit.homology.boundary import boundary_squared_is_zero
from dowkit.homology.profile import HomologyProfile, homology, profiles_equal
from dowkit.morse.collapse import (
    CollapseCertificate,
    collapse_sequence,
    replay_complexes,
    verify_certificate,
)
from dowkit.morse.matching import Matching, dowker_matching, find_cycle
from dowkit.morse.zigzag import zigzag_through_bicliques
from dowkit.relations.morphism import RelationMorphism, disjointify
from dowkit.relations.relation import Relation

logger = logging.getLogger(__name__)


@dataclass
class PipelineOptions:
    """
    Knobs of a pipeline run.

    Attributes:
        order: Total order on X ∪ Y for the matchings, as labels of the input
            relation (or of its tagged copy when X and Y share labels).
        strategy: Enumeration strategy for the Dowker complexes.
        rectangle: Include the rectangle complex.
        replay_stride: Homology spot-check every N certificate steps (0: off).
        seed: Seed that produced the relation, echoed in the report.
        max_homology_columns: Column cap of the homology oracle.
        max_rectangle_faces: Estimated face budget of the rectangle complex.
    """
    order: Optional[Sequence[str]] = None
    strategy: str = STRATEGY_INTERSECTION
    rectangle: bool = True
    replay_stride: int = field(default_factory=lambda: constants.REPLAY_STRIDE)
    seed: Optional[int] = None
    max_homology_columns: Optional[int] = None
    max_rectangle_faces: Optional[int] = None


@dataclass
class CheckResult:
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "skipped": self.skipped, "detail": self.detail}


@dataclass
class PipelineReport:
    """Everything a run measured and checked."""
    relation: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    prng: str = ""
    sizes: Dict[str, Optional[int]] = field(default_factory=dict)
    f_vectors: Dict[str, List[int]] = field(default_factory=dict)
    matchings: Dict[str, int] = field(default_factory=dict)
    certificates: Dict[str, int] = field(default_factory=dict)
    homology: Dict[str, Optional[HomologyProfile]] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed or check.skipped for check in self.checks)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(name, bool(passed), False, detail))
        if not passed:
            logger.warning(f"check failed: {name} {detail}".rstrip())
        return bool(passed)

    def skip(self, name: str, detail: str) -> None:
        self.checks.append(CheckResult(name, True, True, detail))
        logger.warning(f"check skipped: {name}: {detail}")

    def failed_checks(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "relation": dict(self.relation),
            "seed": self.seed,
            "prng": self.prng,
            "sizes": dict(self.sizes),
            "f_vectors": {k: list(v) for k, v in self.f_vectors.items()},
            "matchings": dict(self.matchings),
            "certificates": dict(self.certificates),
            "homology": {k: (p.to_dict() if p is not None else None) for k, p in self.homology.items()},
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
        }
        if include_timings:
            data["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return data


@contextmanager
def _timed(report: PipelineReport, stage: str) -> Iterator[None]:
    t0 = time.perf_counter()
    try:
        yield
    finally:
        report.timings[stage] = time.perf_counter() - t0


def tagged_order(order: Optional[Sequence[str]], phi: RelationMorphism) -> Optional[List[str]]:
    """Translate an order on input labels to the tagged labels of ``B(R̃)``."""
    if order is None:
        return None
    result = []
    for label in order:
        label = str(label)
        in_x, in_y = label in phi.phi_l, label in phi.phi_r
        if in_x and not in_y:
            result.append(phi.phi_l[label])
        elif in_y and not in_x:
            result.append(phi.phi_r[label])
        else:
            result.append(label)
    return result


def _profile(report: PipelineReport, name: str, c: SimplicialComplex,
             options: PipelineOptions) -> Optional[HomologyProfile]:
    try:
        profile = homology(c, options.max_homology_columns)
    except ComplexTooLargeError as e:
        report.skip(f"homology {name}", str(e))
        profile = None
    report.homology[name] = profile
    return profile


def _record_complex(report: PipelineReport, name: str, c: SimplicialComplex) -> None:
    report.sizes[name] = len(c)
    report.f_vectors[name] = f_vector(c)


# ============================================================================
# Stages
# ============================================================================

def _certify(report: PipelineReport, side: str, b: SimplicialComplex, target: SimplicialComplex,
             mt: Matching, options: PipelineOptions) -> Optional[CollapseCertificate]:
    report.matchings[side] = len(mt)
    report.check(f"{side} matching satisfies the monotonicity condition", mt.acyclic_certified)
    cycle = find_cycle(mt)
    report.check(f"{side} matching is acyclic", cycle is None,
                 "" if cycle is None else f"cycle {[b.labels_of(f) for f in cycle]}")
    try:
        cert = collapse_sequence(b, target, mt)
    except DowkitError as e:
        report.check(f"{side} collapse certificate extracted", False, str(e))
        return None
    report.certificates[side] = len(cert)
    report.check(f"{side} certificate has |M|/2 steps", len(cert) * 2 == len(mt))
    verdict = verify_certificate(cert)
    report.check(f"{side} certificate replays", verdict.ok, "" if verdict.ok else verdict.describe())

    if options.replay_stride > 0 and verdict.ok:
        start = _profile_or_none(b, options)
        if start is None:
            report.skip(f"{side} replay keeps homology", "complex above the homology cap")
        else:
            for steps, current in replay_complexes(cert, options.replay_stride):
                current_profile = _profile_or_none(current, options)
                if current_profile is not None and not profiles_equal(start, current_profile):
                    report.check(f"{side} replay keeps homology", False, f"changed after {steps} steps")
                    break
            else:
                report.check(f"{side} replay keeps homology", True)
    return cert


def _profile_or_none(c: SimplicialComplex, options: PipelineOptions) -> Optional[HomologyProfile]:
    try:
        return homology(c, options.max_homology_columns)
    except ComplexTooLargeError:
        return None


def _compare(report: PipelineReport, a: str, b: str) -> None:
    pa, pb = report.homology.get(a), report.homology.get(b)
    name = f"homology of {a} equals homology of {b}"
    if pa is None or pb is None:
        report.skip(name, "a profile is missing")
        return
    report.check(name, profiles_equal(pa, pb), f"{pa.betti} vs {pb.betti}")


def _rectangle_stage(report: PipelineReport, r: Relation,
                     options: PipelineOptions) -> Optional[SimplicialComplex]:
    name = "rectangle complex"
    report.sizes["E"] = None
    if not options.rectangle:
        report.skip(name, "disabled")
        return None
    if len(r.pairs) > constants.MAX_UNIVERSE_SIZE:
        report.skip(name, f"{len(r.pairs)} pairs exceed the cap of {constants.MAX_UNIVERSE_SIZE}")
        return None
    budget = options.max_rectangle_faces
    if budget is None:
        budget = constants.MAX_RECTANGLE_FACES
    estimate = estimate_rectangle_faces(r)
    if estimate > budget:
        report.skip(name, f"estimated {estimate} faces exceed the budget of {budget}")
        return None
    e = rectangle_complex(r)
    _record_complex(report, "E", e)
    try:
        rectangle_projections(r, e)
        report.check("rectangle projections are simplicial", True)
    except DowkitError as error:
        report.check("rectangle projections are simplicial", False, str(error))
    return e


def run_pipeline(r: Relation, options: Optional[PipelineOptions] = None) -> PipelineReport:
    """
    Run every construction and check on ``r``.

    Args:
        r: Any relation; it is disjointified before the biclique stages.
        options: Run options; defaults apply when omitted.

    Returns:
        The report; ``report.passed`` is the overall verdict.
    """
    options = options or PipelineOptions()
    report = PipelineReport(seed=options.seed, prng=prng_description())
    report.relation = {
        "x": len(r.x_universe),
        "y": len(r.y_universe),
        "pairs": len(r.pairs),
        "bipartite": r.is_bipartite,
    }
    logger.info(f"pipeline: |X|={len(r.x_universe)}, |Y|={len(r.y_universe)}, pairs={len(r.pairs)}")

    with _timed(report, "dowker"):
        tagged, phi = disjointify(r)
        cx = dowker_left(r, options.strategy)
        cy = dowker_right(r, options.strategy)
        cx_tagged, cy_tagged = dowker_left(tagged), dowker_right(tagged)
        _record_complex(report, "C_X", cx)
        _record_complex(report, "C_Y", cy)
        other = STRATEGY_MAXIMAL if options.strategy == STRATEGY_INTERSECTION else STRATEGY_INTERSECTION
        report.check("enumeration strategies agree",
                     dowker_left(r, other).faces == cx.faces and dowker_right(r, other).faces == cy.faces)
        report.check("tagging preserves the Dowker complexes",
                     len(cx_tagged) == len(cx) and len(cy_tagged) == len(cy))

    with _timed(report, "biclique"):
        b = biclique_complex(tagged)
        _record_complex(report, "B", b)
        report.sizes["bicliques"] = len(bicliques(tagged))
        report.check("C_X and C_Y are subcomplexes of B",
                     is_subcomplex(cx_tagged, b) and is_subcomplex(cy_tagged, b))
        report.check("B is the union of bicliques, C_X and C_Y",
                     len(b) == report.sizes["bicliques"] + len(cx_tagged) + len(cy_tagged) - 1)

    certificates: Dict[str, Optional[CollapseCertificate]] = {}
    with _timed(report, "collapse"):
        order = tagged_order(options.order, phi)
        for side, target in zip(SIDES, (cx_tagged, cy_tagged)):
            mt = dowker_matching(tagged, side, order, b=b)
            certificates[side] = _certify(report, side, b, target, mt, options)

    with _timed(report, "zigzag"):
        if certificates[SIDE_LEFT] is not None and certificates[SIDE_RIGHT] is not None:
            zigzag = zigzag_through_bicliques(phi, b, certificates[SIDE_LEFT], certificates[SIDE_RIGHT])
            verdict = zigzag.verify()
            report.check("zigzag from C_X to C_Y verifies", verdict.ok, verdict.describe())
        else:
            report.skip("zigzag from C_X to C_Y verifies", "a certificate is missing")

    with _timed(report, "rectangle"):
        e = _rectangle_stage(report, r, options)

    with _timed(report, "homology"):
        complexes = {"C_X": cx, "C_Y": cy, "B": b}
        if e is not None:
            complexes["E"] = e
        for name, c in complexes.items():
            profile = _profile(report, name, c, options)
            if profile is None:
                continue
            report.check(f"Euler characteristic of {name} matches its Betti numbers",
                         sum((-1) ** k * n for k, n in enumerate(profile.betti)) == euler_characteristic(c))
            report.check(f"boundary of boundary vanishes on {name}",
                         boundary_squared_is_zero(c, options.max_homology_columns))
        _compare(report, "C_X", "C_Y")
        _compare(report, "B", "C_X")
        if "E" in complexes:
            _compare(report, "E", "C_X")

    logger.info(f"pipeline {'passed' if report.passed else 'failed'}: "
                f"{len(report.failed_checks())} failed of {len(report.checks)} checks")
    return report
