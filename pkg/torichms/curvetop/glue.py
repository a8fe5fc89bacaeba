"""
Global mirror curve from the per-cone pieces

Each cone contributes its affine curve. Across an interior edge tau the
punctures of the matching type form |G_tau^v| circles on both sides; a
circle is the coset theta<rho_i> and carries the label obtained by
restricting theta to the edge cokernel model. Gluing identifies circles
with equal labels.
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from torichms.curvetop.affine import AffineCurveModel, affine_curve
from torichms.curvetop.pick import PickCounts, pick_counts
from torichms.exceptions import CheckFailedException, ConventionViolationException, LabelMismatchException
from torichms.logging import getLogger
from torichms.toricdata.fan import FanEdge, StackyFan
from torichms.toricdata.group import Character
from torichms.toricdata.lattice import lattice_length, on_segment
from torichms.toricdata.picard import CokernelModel, PicardClass, stacky_picard

logger = getLogger(__name__)

Orbit = Tuple[Character, ...]


@dataclass(frozen=True)
class CircleLabeling:
    """Circles of one cone at one edge, keyed by their edge label"""
    cone: int
    edge: FanEdge
    puncture_type: int
    circles: Dict[PicardClass, Orbit]

    @property
    def labels(self) -> Tuple[PicardClass, ...]:
        return tuple(sorted(self.circles))


@dataclass(frozen=True)
class EdgeIdentification:
    edge: FanEdge
    sides: Tuple[CircleLabeling, CircleLabeling]

    @property
    def labels(self) -> Tuple[PicardClass, ...]:
        return self.sides[0].labels

    def pairs(self) -> List[Tuple[Orbit, Orbit]]:
        """Identified circles, as (coset in first cone, coset in second cone)"""
        first, second = self.sides
        return [(first.circles[label], second.circles[label]) for label in self.labels]


@dataclass(frozen=True)
class GlobalCurveModel:
    fan: StackyFan
    cones: Tuple[AffineCurveModel, ...]
    identifications: Tuple[EdgeIdentification, ...]
    pick: PickCounts
    chi: int
    boundary_punctures: Tuple[Tuple[int, ...], ...]

    @property
    def genus(self) -> int:
        return self.pick.interior

    @property
    def punctures(self) -> int:
        return self.pick.boundary

    def topology(self) -> Dict[str, int]:
        return {'genus': self.genus, 'punctures': self.punctures, 'chi': self.chi}


def cone_models(fan: StackyFan) -> List[CokernelModel]:
    return [stacky_picard(fan, t) for t in range(len(fan.triangles))]


def puncture_type(fan: StackyFan, model: CokernelModel, edge: FanEdge) -> int:
    """Normal-form position of the ray of the cone opposite the edge"""
    others = [k for k, ray in enumerate(model.rays) if ray not in edge.rays]
    if len(others) != 1:
        raise ConventionViolationException(
            f"edge {edge.rays} is not an edge of cone over rays {model.rays}",
            counterexample={'edge': list(edge.rays), 'cone': list(model.rays)},
        )
    return model.normal_form.position_of(others[0])


def circle_labels(cone: int, model: CokernelModel, edge: FanEdge, edge_model: CokernelModel, kind: int) -> CircleLabeling:
    """
    Label each coset of rho_kind by its restriction to the edge

    Raises:
        LabelMismatchException: members of one coset restrict differently,
            or two cosets share a label
    """
    structure = model.structure
    circles: Dict[PicardClass, Orbit] = {}
    for orbit in structure.group.orbits(structure.rho(kind)):
        restricted = {model.project(model.from_character(theta), edge_model) for theta in orbit}
        if len(restricted) != 1:
            raise LabelMismatchException(
                "one circle restricts to several edge labels",
                counterexample={'cone': cone, 'edge': list(edge.rays), 'labels': sorted(map(repr, restricted))},
            )
        label = restricted.pop()
        if label in circles:
            raise LabelMismatchException(
                "two circles restrict to the same edge label",
                counterexample={'cone': cone, 'edge': list(edge.rays), 'label': repr(label)},
            )
        circles[label] = orbit
    return CircleLabeling(cone=cone, edge=edge, puncture_type=kind, circles=circles)


def identify_edge(fan: StackyFan, models: List[CokernelModel], edge: FanEdge) -> EdgeIdentification:
    edge_model = stacky_picard(fan, edge)
    sides = []
    for cone in edge.cones:
        model = models[cone]
        sides.append(circle_labels(cone, model, edge, edge_model, puncture_type(fan, model, edge)))

    first, second = sides
    expected = set(edge_model.elements())
    if len(first.circles) != len(second.circles) or set(first.circles) != expected or set(second.circles) != expected:
        raise LabelMismatchException(
            f"circle labels across edge {edge.rays} do not match",
            counterexample={
                'edge': list(edge.rays),
                'cones': list(edge.cones),
                'sizes': [len(first.circles), len(second.circles), len(expected)],
            },
        )
    return EdgeIdentification(edge=edge, sides=(first, second))


def _boundary_punctures(fan: StackyFan) -> Tuple[Tuple[int, ...], ...]:
    """Per hull side, the sorted puncture counts of the fan edges on it"""
    result = []
    for a, b in fan.hull_edges():
        counts = sorted(
            lattice_length(fan.points[e.i], fan.points[e.j])
            for e in fan.boundary_edges()
            if on_segment(fan.points[e.i], a, b) and on_segment(fan.points[e.j], a, b)
        )
        result.append(tuple(counts))
    return tuple(result)


def glue_curve(fan: StackyFan) -> GlobalCurveModel:
    """
    Join the affine curves along interior edges

    Raises:
        LabelMismatchException: circle label sets disagree across an edge
        CheckFailedException: Euler characteristic differs from 2 - 2g - b
    """
    models = cone_models(fan)
    curves = tuple(affine_curve(m.normal_form) for m in models)

    for edge in fan.boundary_edges():
        cone = edge.cones[0]
        kind = puncture_type(fan, models[cone], edge)
        length = lattice_length(fan.points[edge.i], fan.points[edge.j])
        if curves[cone].punctures[kind - 1] != length:
            raise ConventionViolationException(
                "puncture count differs from the boundary edge length",
                counterexample={'cone': cone, 'edge': list(edge.rays), 'punctures': curves[cone].punctures[kind - 1], 'length': length},
            )

    identifications = tuple(identify_edge(fan, models, edge) for edge in fan.interior_edges())

    pick = pick_counts(fan.polygon())
    # circles have chi 0, so the glued chi is the sum of the open pieces
    chi = sum(curve.open_chi for curve in curves)
    expected = 2 - 2 * pick.interior - pick.boundary
    if chi != expected:
        raise CheckFailedException(
            "glued Euler characteristic differs from the lattice count",
            counterexample={'chi': chi, 'expected': expected, 'genus': pick.interior, 'punctures': pick.boundary},
        )

    model = GlobalCurveModel(
        fan=fan,
        cones=curves,
        identifications=identifications,
        pick=pick,
        chi=chi,
        boundary_punctures=_boundary_punctures(fan),
    )
    logger.debug("global curve glued", extra=model.topology())
    return model
