"""
Skeleta of the affine mirror curve

The pair of pants retracts onto a dumbbell: two loops joined by a segment.
The affine curve is the cover of the pair of pants with deck group the
character group, so its skeleton is the voltage lift of the dumbbell with
the loop at circle 1 carrying rho1 and the loop at circle 2 carrying rho2.
A theta graph is the alternative base when circles are needed at all three
puncture types.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from torichms.curvetop.affine import affine_curve
from torichms.curvetop.monodromy import MonodromyData, monodromy
from torichms.exceptions import ConventionViolationException, InputException
from torichms.logging import getLogger
from torichms.ribbon.graph import RibbonGraph, VoltageLift, voltage_lift
from torichms.ribbon.predicates import Subgraph
from torichms.ribbon.wheel import wheel_type
from torichms.toricdata.cone import ConeNormalForm
from torichms.toricdata.group import Character, StructureGroup, sequence_data, structure_group

logger = getLogger(__name__)

Orbit = Tuple[Character, ...]

# dumbbell half-edges: loop h0 -- h1 at v1, segment h2 -- h3, loop h4 -- h5 at v2
DUMBBELL_TAU = (1, 0, 3, 2, 5, 4)
DUMBBELL_ROTATION = ((0, 1, 2), (3, 4, 5))
DUMBBELL_LOOP_1 = (0, 1)
DUMBBELL_SEGMENT = (2, 3)
DUMBBELL_LOOP_2 = (4, 5)

# theta half-edges: a1 a2 a3 at a, b3 b2 b1 at b, a_k -- b_k
THETA_TAU = (5, 4, 3, 2, 1, 0)
THETA_ROTATION = ((0, 1, 2), (3, 4, 5))


@dataclass(frozen=True)
class BaseSkeleton:
    """
    Skeleton of the pair of pants with a voltage

    face_types maps the first half-edge of each boundary cycle to its
    puncture type; circle_types are the types whose boundary cycles are
    exposed as circles for gluing.
    """
    name: str
    graph: RibbonGraph
    voltage: Tuple[Character, ...]
    face_types: Dict[int, int]
    circle_types: Tuple[int, ...]

    def face_start(self, puncture_type: int) -> int:
        for start, kind in self.face_types.items():
            if kind == puncture_type:
                return start
        raise InputException(f"{self.name} has no boundary cycle of type {puncture_type}")

    def face_length(self, puncture_type: int) -> int:
        start = self.face_start(puncture_type)
        for face in self.graph.faces():
            if start in face:
                return len(face)
        return 0


def dumbbell(structure: StructureGroup, i: int = 1, j: int = 2) -> BaseSkeleton:
    """
    Dumbbell with circles of types i and j

    Boundary cycles: (h1) has type i, (h5) type j and the outer cycle
    (h0, h2, h4, h3) the remaining type.
    """
    if {i, j} - {1, 2, 3} or i == j:
        raise InputException(f"dumbbell needs two distinct types in 1..3, got ({i}, {j})")
    k = ({1, 2, 3} - {i, j}).pop()
    rho_i, rho_j = structure.rho(i), structure.rho(j)
    one = structure.group.trivial_character
    graph = RibbonGraph(
        DUMBBELL_TAU,
        DUMBBELL_ROTATION,
        ('v1', 'v2'),
        ('h0', 'h1', 'h2', 'h3', 'h4', 'h5'),
    )
    voltage = (rho_i, rho_i.inverse(), one, one, rho_j, rho_j.inverse())
    return BaseSkeleton('dumbbell', graph, voltage, {1: i, 5: j, 0: k}, (i, j))


def theta(structure: StructureGroup) -> BaseSkeleton:
    """
    Theta graph with circles of all three types

    Boundary cycles: (a1, b3) type 2, (a2, b1) type 3, (a3, b2) type 1.
    """
    one = structure.group.trivial_character
    rho2, rho3 = structure.rho2, structure.rho3
    graph = RibbonGraph(
        THETA_TAU,
        THETA_ROTATION,
        ('a', 'b'),
        ('a1', 'a2', 'a3', 'b3', 'b2', 'b1'),
    )
    voltage = (one, rho3, rho2.inverse(), rho2, rho3.inverse(), one)
    return BaseSkeleton('theta', graph, voltage, {0: 2, 1: 3, 2: 1}, (1, 2, 3))


def lift_base(base: BaseSkeleton, structure: StructureGroup) -> VoltageLift:
    return voltage_lift(base.graph, base.voltage, list(structure.group.characters()))


@dataclass(frozen=True)
class LabeledSkeleton:
    """
    Lifted dumbbell with its labels

    interval (1, theta) is the circle-1 edge leaving (v1, theta); interval
    (2, theta) the circle-2 edge leaving (v2, theta); segment theta joins
    (v1, theta) to (v2, theta). The base lift is the one at the trivial label.
    """
    normal_form: ConeNormalForm
    structure: StructureGroup
    monodromy: MonodromyData
    base: BaseSkeleton
    lift: VoltageLift
    circles1: Tuple[Orbit, ...]
    circles2: Tuple[Orbit, ...]

    @property
    def graph(self) -> RibbonGraph:
        return self.lift.graph

    @property
    def base_label(self) -> Character:
        return self.structure.group.trivial_character

    def interval(self, side: int, theta: Character) -> Tuple[int, int]:
        loop = DUMBBELL_LOOP_1 if side == 1 else DUMBBELL_LOOP_2
        h = self.lift.half_edge(loop[0], theta)
        return (h, self.graph.tau[h])

    def segment(self, theta: Character) -> Tuple[int, int]:
        h = self.lift.half_edge(DUMBBELL_SEGMENT[0], theta)
        return (h, self.graph.tau[h])

    def segments(self) -> Dict[Character, Tuple[int, int]]:
        return {theta: self.segment(theta) for theta in self.lift.characters}

    def site(self, j: int, theta: Character) -> Tuple[int, Character]:
        """Circle and interval label where the generator (j, theta) sits"""
        if j == 1:
            return (2, theta)
        if j == 2:
            return (1, theta * self.structure.rho1.inverse())
        raise InputException(f"generator side must be 1 or 2, got {j}")

    def euler_characteristic(self) -> int:
        return self.graph.euler_characteristic()


def _circles_from_graph(lift: VoltageLift, loop: Tuple[int, int]) -> List[Orbit]:
    """Read the lifted loop edges as label cycles: theta -> label at the far end"""
    seen = set()
    result = []
    for theta in lift.characters:
        if theta in seen:
            continue
        cycle = []
        current = theta
        while current not in seen:
            seen.add(current)
            cycle.append(current)
            partner = lift.graph.tau[lift.half_edge(loop[0], current)]
            _, current = lift.decode_half_edge(partner)
        result.append(tuple(cycle))
    return sorted(result)


def affine_skeleton(nf: ConeNormalForm, structure: Optional[StructureGroup] = None,
                    mono: Optional[MonodromyData] = None) -> LabeledSkeleton:
    """
    Labeled skeleton of the affine mirror curve

    Raises:
        ConventionViolationException: circles read off the lifted graph are not
            the monodromy orbits, or the counts disagree with (m_i, r_i) or chi
    """
    structure = structure or structure_group(nf)
    mono = mono or monodromy(nf, structure)
    base = dumbbell(structure, 1, 2)
    lift = lift_base(base, structure)

    circles1 = tuple(_circles_from_graph(lift, DUMBBELL_LOOP_1))
    circles2 = tuple(_circles_from_graph(lift, DUMBBELL_LOOP_2))
    rms = list(nf.key)

    for side, circles, orbits in ((1, circles1, mono.orbits_x), (2, circles2, mono.orbits_y)):
        if {frozenset(c) for c in circles} != {frozenset(o) for o in orbits}:
            raise ConventionViolationException(
                f"circle-{side} labels are not the monodromy orbits",
                counterexample={'rms': rms, 'side': side, 'circles': [list(map(repr, c)) for c in circles]},
            )

    pairs = sequence_data(nf)
    for side, circles in ((1, circles1), (2, circles2)):
        pair = pairs[side - 1]
        if len(circles) != pair.m or any(len(c) != pair.r for c in circles):
            raise ConventionViolationException(
                f"circle-{side} has wrong orbit structure",
                counterexample={'rms': rms, 'side': side, 'expected': [pair.m, pair.r],
                                'sizes': [len(c) for c in circles]},
            )

    curve = affine_curve(nf)
    chi = lift.graph.euler_characteristic()
    expected = 2 - 2 * curve.genus - curve.puncture_count
    if chi != expected:
        raise ConventionViolationException(
            "skeleton Euler characteristic differs from the curve",
            counterexample={'rms': rms, 'chi': chi, 'expected': expected},
        )

    skeleton = LabeledSkeleton(
        normal_form=nf,
        structure=structure,
        monodromy=mono,
        base=base,
        lift=lift,
        circles1=circles1,
        circles2=circles2,
    )
    logger.debug("affine skeleton built", extra={'rms': rms, 'chi': chi, 'segments': len(lift.characters)})
    return skeleton


@dataclass(frozen=True)
class OpenCover:
    gamma1: Subgraph
    gamma2: Subgraph
    gamma3: Subgraph
    wheels1: Tuple[Tuple[int, int], ...]
    wheels3: Tuple[Tuple[int, int], ...]


def open_cover(skeleton: LabeledSkeleton) -> OpenCover:
    """
    Gamma1 (circle-1 wheels), Gamma2 (segments), Gamma3 (circle-2 wheels)

    Raises:
        ConventionViolationException: Gamma1 is not m1 copies of Gamma(r1, 0)
            or Gamma3 is not m2 copies of Gamma(r2, 0)
    """
    lift = skeleton.lift
    graph = skeleton.graph

    def at_vertex(v: int) -> Subgraph:
        vertices = frozenset(lift.vertex(v, theta) for theta in lift.characters)
        half_edges = frozenset(h for w in vertices for h in graph.rotation[w])
        return Subgraph(vertices, half_edges)

    gamma1 = at_vertex(0)
    gamma3 = at_vertex(1)
    gamma2 = Subgraph(
        frozenset(),
        frozenset(h for theta in lift.characters for h in skeleton.segment(theta)),
    )

    pairs = sequence_data(skeleton.normal_form)
    found = []
    for sub, pair, name in ((gamma1, pairs[0], 'Gamma1'), (gamma3, pairs[1], 'Gamma3')):
        induced, _ = graph.induced(sub.vertices)
        wheels = []
        for component in induced.components():
            piece, _ = induced.induced(component)
            wheels.append(wheel_type(piece))
        expected = [(pair.r, 0)] * pair.m
        if sorted(w for w in wheels if w is not None) != expected or None in wheels:
            raise ConventionViolationException(
                f"{name} is not {pair.m} copies of Gamma({pair.r}, 0)",
                counterexample={'rms': list(skeleton.normal_form.key), 'wheels': [list(w) if w else None for w in wheels]},
            )
        found.append(tuple(wheels))

    return OpenCover(gamma1, gamma2, gamma3, found[0], found[1])
