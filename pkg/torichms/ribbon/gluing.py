"""
Global skeleton by circle gluing

Every cone contributes a lifted base skeleton with circles at the puncture
types of its interior edges. Two circles with equal edge labels are joined
by cutting one circle edge on each side and re-pairing the four half-edges
crosswise; the two circles become one circle through all n1 + n2 of their
vertices, which is the wheel Gamma(n1, n2) with the first circle's spokes
up and the second's down.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from torichms.curvetop.glue import GlobalCurveModel, cone_models, glue_curve
from torichms.defaults import PLACEMENTS
from torichms.exceptions import (
    CheckFailedException,
    ConventionViolationException,
    InputException,
    PlacementException,
)
from torichms.logging import getLogger
from torichms.ribbon.graph import RibbonGraph, VoltageLift, voltage_lift
from torichms.ribbon.skeleton import BaseSkeleton, dumbbell, theta
from torichms.ribbon.wheel import DOWN, UP, wheel_signature
from torichms.support.config import Config
from torichms.toricdata.fan import FanEdge, StackyFan
from torichms.toricdata.group import Character
from torichms.toricdata.picard import CokernelModel, PicardClass

logger = getLogger(__name__)

# (vertex, incoming half-edge, outgoing half-edge) in union ids
Step = Tuple[int, int, int]


@dataclass(frozen=True)
class Placement:
    cone: int
    base: str
    circle_types: Tuple[int, ...]


@dataclass(frozen=True)
class ConePiece:
    cone: int
    model: CokernelModel
    placement: Placement
    skeleton: BaseSkeleton
    lift: VoltageLift
    half_edge_offset: int
    vertex_offset: int

    def half_edge(self, h: int, theta_: Character) -> int:
        return self.half_edge_offset + self.lift.half_edge(h, theta_)


@dataclass(frozen=True)
class CircleWalk:
    """A lifted boundary cycle of a cone, read along the boundary permutation"""
    cone: int
    puncture_type: int
    steps: Tuple[Step, ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(step[0] for step in self.steps)

    def cut(self, k: int) -> Tuple[int, int]:
        """Circle edge entering step k: (out_{k-1}, in_k)"""
        return (self.steps[k - 1][2], self.steps[k][1])


@dataclass(frozen=True)
class GluingSite:
    edge: FanEdge
    label: PicardClass
    cones: Tuple[int, int]
    puncture_types: Tuple[int, int]
    n1: int
    n2: int
    cuts: Tuple[int, int]
    signature: Optional[Tuple[str, ...]]
    rerouted: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'edge': list(self.edge.rays),
            'label': repr(self.label),
            'cones': list(self.cones),
            'puncture_types': list(self.puncture_types),
            'wheel': [self.n1, self.n2],
            'rerouted': self.rerouted,
        }


@dataclass(frozen=True)
class GlobalSkeleton:
    fan: StackyFan
    curve: GlobalCurveModel
    pieces: Tuple[ConePiece, ...]
    graph: RibbonGraph
    sites: Tuple[GluingSite, ...]
    circles: Dict[Tuple[int, int, PicardClass], CircleWalk] = field(repr=False, compare=False, default_factory=dict)

    @property
    def placements(self) -> Tuple[Placement, ...]:
        return tuple(piece.placement for piece in self.pieces)

    @property
    def rerouted(self) -> bool:
        return any(site.rerouted for site in self.sites)

    def euler_characteristic(self) -> int:
        return self.graph.euler_characteristic()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'placements': [
                {'cone': p.cone, 'base': p.base, 'circles': list(p.circle_types)} for p in self.placements
            ],
            'chi': self.euler_characteristic(),
            'faces': len(self.graph.faces()),
            'sites': [site.to_dict() for site in self.sites],
        }


def _interior_types(curve: GlobalCurveModel) -> Dict[int, List[int]]:
    types: Dict[int, List[int]] = {cone: [] for cone in range(len(curve.fan.triangles))}
    for ident in curve.identifications:
        for side in ident.sides:
            types[side.cone].append(side.puncture_type)
    return types


def choose_placement(curve: GlobalCurveModel, policy: Optional[str] = None) -> Tuple[Placement, ...]:
    """
    Base skeleton per cone

    auto uses the theta graph for cones with three interior edges and a
    dumbbell otherwise; dumbbell refuses such cones.

    Raises:
        InputException: unknown policy
        PlacementException: a dumbbell cannot expose every required circle
    """
    policy = Config.choice('hms.placement', PLACEMENTS, policy)

    placements = []
    for cone, kinds in sorted(_interior_types(curve).items()):
        needed = sorted(set(kinds))
        if len(needed) == 3:
            if policy == 'dumbbell':
                raise PlacementException(
                    f"cone {cone} has three interior edges; a dumbbell exposes only two circles"
                )
            placements.append(Placement(cone, 'theta', (1, 2, 3)))
            continue
        for kind in (1, 2, 3):
            if len(needed) == 2:
                break
            if kind not in needed:
                needed.append(kind)
        placements.append(Placement(cone, 'dumbbell', tuple(sorted(needed))))
    return tuple(placements)


def _base_for(placement: Placement, model: CokernelModel) -> BaseSkeleton:
    if placement.base == 'theta':
        return theta(model.structure)
    i, j = placement.circle_types
    return dumbbell(model.structure, i, j)


def _walk(graph: RibbonGraph, start: int) -> Tuple[Step, ...]:
    steps = []
    h = start
    while True:
        incoming = graph.tau[h]
        outgoing = graph.sigma(incoming)
        steps.append((graph.vertex_of[incoming], incoming, outgoing))
        h = outgoing
        if h == start:
            return tuple(steps)


def _face_count(tau: Sequence[int], graph: RibbonGraph) -> int:
    seen = [False] * len(tau)
    count = 0
    for h in graph.half_edges:
        if seen[h]:
            continue
        count += 1
        current = h
        while not seen[current]:
            seen[current] = True
            current = graph.sigma(tau[current])
    return count


def _candidates(first: CircleWalk, second: CircleWalk) -> Iterator[Tuple[int, int]]:
    yield (0, 0)
    for k in range(first.length):
        for k2 in range(second.length):
            if (k, k2) != (0, 0):
                yield (k, k2)


def _circle_walk(piece: ConePiece, union: RibbonGraph, kind: int, orbit: Sequence[Character]) -> CircleWalk:
    start = piece.half_edge(piece.skeleton.face_start(kind), orbit[0])
    steps = _walk(union, start)
    expected = len(orbit) * piece.skeleton.face_length(kind)
    vertices = [step[0] for step in steps]
    if len(steps) != expected or len(set(vertices)) != len(vertices) or any(union.valency(v) != 3 for v in vertices):
        raise PlacementException(
            f"cone {piece.cone} has no clean circle of type {kind} at label {orbit[0]!r}"
        )
    return CircleWalk(piece.cone, kind, steps)


def _merge(tau: List[int], first: CircleWalk, second: CircleWalk, k: int, k2: int) -> None:
    a, a2 = first.cut(k)
    b, b2 = second.cut(k2)
    tau[a], tau[b] = b, a
    tau[a2], tau[b2] = b2, a2


def _site_signature(graph: RibbonGraph, first: CircleWalk, second: CircleWalk, k: int) -> Optional[Tuple[str, ...]]:
    induced, remap = graph.induced(first.vertices + second.vertices)
    start_out = first.steps[k][2]
    return wheel_signature(induced, induced.vertex_of[remap[start_out]], remap[start_out])


def glue_skeletons(fan: StackyFan, policy: Optional[str] = None,
                   curve: Optional[GlobalCurveModel] = None) -> GlobalSkeleton:
    """
    Glue the per-cone skeleta along every interior edge

    Interior edges are processed in sorted order and labels in sorted order
    within an edge. Each gluing must lower the number of boundary cycles by
    two; the cut position (0, 0) is tried first.

    Raises:
        PlacementException: no circle is exposed, or no cut merges the two circles
        ConventionViolationException: a dumbbell site is not Gamma(n1, 0) + Gamma(0, n2)
        CheckFailedException: glued graph is disconnected or its topology is wrong
    """
    curve = curve or glue_curve(fan)
    placements = choose_placement(curve, policy)
    models = cone_models(fan)
    bases = [_base_for(p, models[p.cone]) for p in placements]
    lifts = [_named_lift(base, models[p.cone], p.cone) for p, base in zip(placements, bases)]
    union, offsets = RibbonGraph.disjoint_union([lift.graph for lift in lifts])
    pieces = tuple(
        ConePiece(p.cone, models[p.cone], p, base, lift, h_off, v_off)
        for p, base, lift, (h_off, v_off) in zip(placements, bases, lifts, offsets)
    )

    tau = list(union.tau)
    faces = _face_count(tau, union)
    sites = []
    circles: Dict[Tuple[int, int, PicardClass], CircleWalk] = {}

    for ident in curve.identifications:
        first_side, second_side = ident.sides
        for label in ident.labels:
            walks = []
            for side in (first_side, second_side):
                piece = pieces[side.cone]
                if side.puncture_type not in piece.placement.circle_types:
                    raise PlacementException(
                        f"cone {side.cone} exposes no circle of type {side.puncture_type}"
                    )
                walk = _circle_walk(piece, union, side.puncture_type, side.circles[label])
                circles[(side.cone, side.puncture_type, label)] = walk
                walks.append(walk)
            first, second = walks

            chosen = None
            for k, k2 in _candidates(first, second):
                cuts = first.cut(k) + second.cut(k2)
                if any(tau[h] != union.tau[h] for h in cuts):
                    continue
                trial = list(tau)
                _merge(trial, first, second, k, k2)
                if _face_count(trial, union) == faces - 2:
                    chosen = (k, k2)
                    tau = trial
                    faces -= 2
                    break
            if chosen is None:
                raise PlacementException(
                    f"circles at edge {ident.edge.rays} label {label!r} cannot be merged"
                )

            current = union.with_tau(tau)
            signature = _site_signature(current, first, second, chosen[0])
            expected = (UP,) * first.length + (DOWN,) * second.length
            rerouted = signature != expected
            if rerouted:
                if all(pieces[c].placement.base == 'dumbbell' for c in ident.edge.cones):
                    raise ConventionViolationException(
                        "gluing site is not a wheel with the expected spokes",
                        counterexample={
                            'edge': list(ident.edge.rays),
                            'label': repr(label),
                            'expected': [first.length, second.length],
                            'signature': list(signature) if signature else None,
                        },
                    )
                logger.debug(
                    "gluing site rerouted through a theta piece",
                    extra={'edge': list(ident.edge.rays), 'label': repr(label)},
                )
            sites.append(GluingSite(
                edge=ident.edge,
                label=label,
                cones=(first.cone, second.cone),
                puncture_types=(first.puncture_type, second.puncture_type),
                n1=first.length,
                n2=second.length,
                cuts=chosen,
                signature=signature,
                rerouted=rerouted,
            ))

    graph = union.with_tau(tau)
    _check_topology(graph, curve)
    skeleton = GlobalSkeleton(fan, curve, pieces, graph, tuple(sites), circles)
    logger.debug("global skeleton glued", extra=skeleton.to_dict())
    return skeleton


def _named_lift(base: BaseSkeleton, model: CokernelModel, cone: int) -> VoltageLift:
    names = [f"c{cone}.{base.graph.vertex_label(v)}" for v in base.graph.vertices]
    return voltage_lift(base.graph, base.voltage, list(model.structure.group.characters()), names)


def _check_topology(graph: RibbonGraph, curve: GlobalCurveModel) -> None:
    components = len(graph.components())
    chi = graph.euler_characteristic()
    faces = len(graph.faces())
    expected_chi = 2 - 2 * curve.genus - curve.punctures
    if components != 1 or chi != expected_chi or faces != curve.punctures:
        raise CheckFailedException(
            "glued skeleton does not have the topology of the global curve",
            counterexample={
                'components': components,
                'chi': chi,
                'expected_chi': expected_chi,
                'faces': faces,
                'punctures': curve.punctures,
            },
        )
