"""
Equivariant Ext series of the generators O_{A^1_j}(theta)

ext_affine reads the answer rings of the dimensional reduction,
k[z_{3-j}, v]/(z_{3-j} v) and u_j k[v], with g v = rho3(g) v and
g u_j = rho_j(g)^-1 u_j. ext_mf recounts the same data from the 2-periodic
resolution, where z3 plays the part of v, by testing invariance on every
group element instead of in the character group. ext_chart is the torus
chart Hom of k[z, z^-1](theta).
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from torichms.fukaya.hom_table import Generator, HomTable, Pair
from torichms.fukaya.series import EVEN, ODD, Bucket, GradedSeries, check_truncation
from torichms.logging import getLogger
from torichms.mfside.rings import RingGenerator, WeightedCharacterRing
from torichms.toricdata.group import Character, StructureGroup

logger = getLogger(__name__)

# v and z3 weigh 2 so that u1 u2 = v is weight preserving
V_WEIGHT = 2


@dataclass(frozen=True)
class ExtQuery:
    source: Generator
    target: Generator
    truncate: int

    @property
    def twist(self) -> Character:
        """theta^-1 theta'"""
        return self.target.label / self.source.label

    @property
    def same_side(self) -> bool:
        return self.source.side == self.target.side


def generator_set(structure: StructureGroup) -> List[Generator]:
    """O_{A^1_j}(theta) for j = 1, 2; the j = 3 family is generated by these"""
    characters = sorted(structure.group.characters())
    return [Generator(side, theta) for side in (1, 2) for theta in characters]


def answer_ring(structure: StructureGroup, query: ExtQuery) -> Tuple[WeightedCharacterRing, Optional[RingGenerator]]:
    """Ring and, for crossing queries, the odd module generator u_j"""
    j = query.source.side
    v = RingGenerator('v', V_WEIGHT, EVEN, structure.rho3)
    if query.same_side:
        z = RingGenerator(f"z{3 - j}", 1, EVEN, structure.rho(3 - j))
        return WeightedCharacterRing((z, v), ((z.name, v.name),)), None
    u = RingGenerator(f"u{j}", 1, ODD, structure.rho(j).inverse())
    return WeightedCharacterRing((v,)), u


def ext_affine(structure: StructureGroup, query: ExtQuery) -> GradedSeries:
    """
    Example:
        # trivial group, End(O_1): z2^a and v^b
        ext_affine(s, ExtQuery(Generator(1, one), Generator(1, one), 4)).to_dict()['dims'][0]
        # [1, 1, 2, 1, 2]
    """
    check_truncation(query.truncate)
    ring, module = answer_ring(structure, query)
    return ring.series(query.truncate, query.twist, module)


def unfiltered_series(structure: StructureGroup, query: ExtQuery) -> GradedSeries:
    """The same monomials without the invariance filter"""
    ring, module = answer_ring(structure, query)
    return ring.series(query.truncate, query.twist, module, filtered=False)


def _invariant(elements: List[Tuple[Tuple[Fraction, ...], Fraction]],
               vector: Tuple[int, int, int], odd_side: int = 0) -> bool:
    for t, twist_value in elements:
        total = sum(e * x for e, x in zip(vector, t)) + twist_value
        if odd_side:
            total -= t[odd_side - 1]
        if total.denominator != 1:
            return False
    return True


def ext_mf(structure: StructureGroup, query: ExtQuery) -> GradedSeries:
    """
    Same counts from k[z_{3-j}, z3]/(z_{3-j} z3) and u_j k[z3], with
    invariance tested on group elements

    Raises:
        TruncationException: truncate < 0
    """
    check_truncation(query.truncate)
    truncate = query.truncate
    group = structure.group
    # (exponents of g, theta'(g) - theta(g))
    elements = [
        (g.exponents, query.target.label.evaluate(g) - query.source.label.evaluate(g))
        for g in group.elements()
    ]
    j = query.source.side
    counts: Dict[Bucket, int] = {}

    def add(parity: int, weight: int) -> None:
        counts[(parity, weight)] = counts.get((parity, weight), 0) + 1

    if query.same_side:
        # z_{3-j} z3 = 0: pure z_{3-j} powers, then pure z3 powers
        for a in range(truncate + 1):
            vector = [0, 0, 0]
            vector[2 - j] = a
            if _invariant(elements, tuple(vector)):
                add(EVEN, a)
        for c in range(1, truncate // V_WEIGHT + 1):
            if _invariant(elements, (0, 0, c)):
                add(EVEN, V_WEIGHT * c)
    else:
        for c in range((truncate - 1) // V_WEIGHT + 1 if truncate >= 1 else 0):
            if _invariant(elements, (0, 0, c), odd_side=j):
                add(ODD, 1 + V_WEIGHT * c)
    return GradedSeries.from_counts(truncate, counts)


def ext_chart(acting: Character, theta: Character, theta_prime: Character, truncate: int) -> GradedSeries:
    """k[z, z^-1] with z acted on by acting: 1 at a with acting^a theta^-1 theta' trivial"""
    check_truncation(truncate)
    twist = theta_prime / theta
    return GradedSeries.from_counts(
        truncate,
        {(EVEN, a): 1 for a in range(-truncate, truncate + 1) if ((acting ** a) * twist).is_trivial},
        laurent=True,
    )


def ext_table(structure: StructureGroup, truncate: int, method: str = 'affine') -> HomTable:
    """Series for every ordered generator pair by ext_affine or ext_mf"""
    check_truncation(truncate)
    compute = ext_mf if method == 'mf' else ext_affine
    gens = generator_set(structure)
    # both methods see the labels only through theta^-1 theta'
    by_twist: Dict[Tuple[int, int, Character], GradedSeries] = {}
    entries: Dict[Pair, GradedSeries] = {}
    for source, target in product(gens, repeat=2):
        query = ExtQuery(source, target, truncate)
        key = (source.side, target.side, query.twist)
        if key not in by_twist:
            by_twist[key] = compute(structure, query)
        entries[(source, target)] = by_twist[key]
    logger.debug(
        "B-side table computed",
        extra={'method': method, 'pairs': len(entries), 'series': len(by_twist), 'truncate': truncate},
    )
    return HomTable(truncate, entries)
