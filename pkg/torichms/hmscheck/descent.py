"""
Descent diagram of the fan

One entry per 3-cone, one per 2-cone (interior and boundary) and a
restriction arrow from every cone to each of its edges. An arrow records
which generator family reaches the edge chart and the edge label each
character of the cone restricts to; the label is the projection of the
cone's Picard class to the edge cokernel.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from torichms.curvetop.glue import puncture_type
from torichms.exceptions import ProjectionMismatchException
from torichms.fukaya.hom_table import Generator
from torichms.fukaya.series import check_truncation
from torichms.logging import getLogger
from torichms.mfside.ext import generator_set
from torichms.toricdata.cone import ConeNormalForm
from torichms.toricdata.fan import FanEdge, StackyFan
from torichms.toricdata.group import Character
from torichms.toricdata.picard import CokernelModel, PicardClass, stacky_picard

logger = getLogger(__name__)


@dataclass(frozen=True)
class ConeEntry:
    cone: int
    rays: Tuple[int, int, int]
    model: CokernelModel
    generators: Tuple[Generator, ...]
    provenance: str = 'affine_hom_table = ext_affine = ext_mf'

    @property
    def normal_form(self) -> ConeNormalForm:
        return self.model.normal_form


@dataclass(frozen=True)
class EdgeEntry:
    edge: FanEdge
    model: CokernelModel
    provenance: str = 'circle_hom_series = ext_chart'

    @property
    def cones(self) -> Tuple[int, ...]:
        return self.edge.cones

    @property
    def labels(self) -> Tuple[PicardClass, ...]:
        return tuple(self.model.elements())


@dataclass(frozen=True)
class Restriction:
    """
    Arrow cone -> edge

    A type-i edge (opposite the i-th normal-form ray) sees the chart where
    z_i is invertible; the family O_{A^1_j} with j = 3 - i reaches it for
    i = 1, 2, and the z3-axis family for i = 3.
    """
    cone: int
    edge: FanEdge
    puncture_type: int
    family: int
    labels: Dict[Character, PicardClass] = field(compare=False)

    def image(self) -> Tuple[PicardClass, ...]:
        return tuple(sorted(set(self.labels.values())))

    def fibre(self, label: PicardClass) -> Tuple[Character, ...]:
        return tuple(sorted(theta for theta, image in self.labels.items() if image == label))


@dataclass(frozen=True)
class DescentDiagram:
    fan: StackyFan
    truncate: int
    whole: CokernelModel
    cones: Tuple[ConeEntry, ...]
    edges: Tuple[EdgeEntry, ...]
    restrictions: Dict[Tuple[int, str], Restriction] = field(compare=False)

    def edge_entry(self, edge: FanEdge) -> EdgeEntry:
        for entry in self.edges:
            if entry.edge.key() == edge.key():
                return entry
        raise KeyError(edge.key())

    def routes(self, edge: FanEdge) -> List[Restriction]:
        return [self.restrictions[(cone, edge.key())] for cone in self.fan.adjacent_cones(edge)]

    def interior(self) -> List[EdgeEntry]:
        return [entry for entry in self.edges if entry.edge.is_interior]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'truncate': self.truncate,
            'cones': [
                {'cone': c.cone, 'rays': list(c.rays), 'rms': list(c.normal_form.key), 'generators': len(c.generators)}
                for c in self.cones
            ],
            'edges': [
                {'edge': list(e.edge.rays), 'kind': e.edge.kind, 'cones': list(e.cones), 'labels': len(e.labels)}
                for e in self.edges
            ],
            'restrictions': [
                {'cone': r.cone, 'edge': list(r.edge.rays), 'type': r.puncture_type, 'family': r.family}
                for _, r in sorted(self.restrictions.items())
            ],
        }


def _restriction(fan: StackyFan, entry: ConeEntry, edge_entry: EdgeEntry) -> Restriction:
    model = entry.model
    kind = puncture_type(fan, model, edge_entry.edge)
    family = 3 - kind if kind in (1, 2) else 3
    labels = {
        theta: model.project(model.from_character(theta), edge_entry.model)
        for theta in model.structure.group.characters()
    }
    expected = set(edge_entry.labels)
    if set(labels.values()) != expected:
        raise ProjectionMismatchException(
            f"cone {entry.cone} does not reach every label of edge {edge_entry.edge.rays}",
            counterexample={
                'cone': entry.cone,
                'edge': list(edge_entry.edge.rays),
                'reached': sorted(repr(x) for x in set(labels.values())),
                'expected': sorted(repr(x) for x in expected),
            },
        )
    return Restriction(entry.cone, edge_entry.edge, kind, family, labels)


def commuting_squares(diagram: DescentDiagram, bound: int = 1) -> int:
    """
    Check whole -> cone -> edge against whole -> edge for every route

    Returns the number of squares checked.

    Raises:
        ProjectionMismatchException: two routes disagree on a class
    """
    checked = 0
    samples = list(diagram.whole.sample_elements(bound))
    for edge_entry in diagram.interior():
        for x in samples:
            direct = diagram.whole.project(x, edge_entry.model)
            for cone in edge_entry.cones:
                cone_model = diagram.cones[cone].model
                via = cone_model.project(diagram.whole.project(x, cone_model), edge_entry.model)
                if via != direct:
                    raise ProjectionMismatchException(
                        f"restriction routes into edge {edge_entry.edge.rays} disagree",
                        counterexample={
                            'edge': list(edge_entry.edge.rays),
                            'cone': cone,
                            'class': repr(x),
                            'direct': repr(direct),
                            'via_cone': repr(via),
                        },
                    )
        checked += 1
    return checked


def build_descent(fan: StackyFan, truncate: int) -> DescentDiagram:
    """
    Raises:
        TruncationException: truncate < 0
        ProjectionMismatchException: a route misses an edge label, or two
            routes into an interior edge disagree
    """
    check_truncation(truncate)
    whole = stacky_picard(fan)
    cones = tuple(
        ConeEntry(t, tuple(fan.triangles[t]), model, tuple(generator_set(model.structure)))
        for t, model in ((t, stacky_picard(fan, t)) for t in range(len(fan.triangles)))
    )
    edges = tuple(EdgeEntry(edge, stacky_picard(fan, edge)) for edge in sorted(fan.edges, key=lambda e: e.rays))

    restrictions: Dict[Tuple[int, str], Restriction] = {}
    for edge_entry in edges:
        for cone in edge_entry.cones:
            restrictions[(cone, edge_entry.edge.key())] = _restriction(fan, cones[cone], edge_entry)

    diagram = DescentDiagram(fan, truncate, whole, cones, edges, restrictions)
    squares = commuting_squares(diagram)
    logger.debug(
        "descent diagram built",
        extra={'cones': len(cones), 'edges': len(edges), 'squares': squares},
    )
    return diagram
