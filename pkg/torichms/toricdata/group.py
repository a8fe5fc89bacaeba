"""
The orbifold group G = ker(phi) and its characters

    phi(t1, t2, t3) = (t1^r, t1^-s t2^m, t1 t2 t3)

An element t = exp(2 pi i a) of (C*)^3 is recorded by its exponent triple
a in (Q/Z)^3, so G is the set of a with E.a = 0 mod 1 where

    E = [[r, 0, 0], [-s, m, 0], [1, 1, 1]].

The Smith form U.E.V = D identifies G with the sum of Z/d_j: residues c
correspond to exponents a = sum_j c_j V[:, j] / d_j. Characters are residue
tuples e against the same invariant factors, paired by sum_j e_j c_j / d_j.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from torichms.exceptions import InputException
from torichms.logging import getLogger
from torichms.toricdata.cone import ConeNormalForm
from torichms.toricdata.smith import smith_normal_form

logger = getLogger(__name__)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _mod_one(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class Character:
    """Element of the dual group, ordered by residues"""
    residues: Tuple[int, ...]
    factors: Tuple[int, ...] = field(compare=False)

    def __post_init__(self) -> None:
        if len(self.residues) != len(self.factors):
            raise InputException("character residues do not match the invariant factors")
        normalized = tuple(e % d for e, d in zip(self.residues, self.factors))
        object.__setattr__(self, 'residues', normalized)

    def __mul__(self, other: 'Character') -> 'Character':
        self._same_group(other)
        return Character(tuple(a + b for a, b in zip(self.residues, other.residues)), self.factors)

    def __truediv__(self, other: 'Character') -> 'Character':
        return self * other.inverse()

    def __pow__(self, exponent: int) -> 'Character':
        return Character(tuple(e * exponent for e in self.residues), self.factors)

    def inverse(self) -> 'Character':
        return Character(tuple(-e for e in self.residues), self.factors)

    @property
    def is_trivial(self) -> bool:
        return not any(self.residues)

    @property
    def order(self) -> int:
        return reduce(_lcm, (d // gcd(e, d) for e, d in zip(self.residues, self.factors)), 1)

    def evaluate(self, element: 'GroupElement') -> Fraction:
        """Value on an element as a rational mod 1 (exponent of 2 pi i)"""
        total = sum(
            (Fraction(e * c, d) for e, c, d in zip(self.residues, element.residues, self.factors)),
            Fraction(0),
        )
        return _mod_one(total)

    def _same_group(self, other: 'Character') -> None:
        if self.factors != other.factors:
            raise InputException("characters of different groups cannot be combined")

    def __repr__(self) -> str:
        return f"Character{self.residues}"


@dataclass(frozen=True, order=True)
class GroupElement:
    """Element of G: residues over the invariant factors and its exponent triple"""
    residues: Tuple[int, ...]
    factors: Tuple[int, ...] = field(compare=False)
    exponents: Tuple[Fraction, Fraction, Fraction] = field(compare=False)

    def __repr__(self) -> str:
        shown = ", ".join(str(a) for a in self.exponents)
        return f"GroupElement{self.residues}<{shown}>"


class FiniteAbelianGroup:
    """
    Finite abelian group presented by invariant factors d1 | d2 | ...

    columns holds, per invariant factor, the exponent triple of the
    corresponding generator; factors equal to 1 are already dropped.
    """

    def __init__(self, factors: Sequence[int], columns: Sequence[Tuple[Fraction, Fraction, Fraction]]):
        self.factors: Tuple[int, ...] = tuple(factors)
        self.columns: Tuple[Tuple[Fraction, Fraction, Fraction], ...] = tuple(columns)
        self._by_exponents: Dict[Tuple[Fraction, ...], GroupElement] = {}

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.factors

    @property
    def order(self) -> int:
        return reduce(lambda a, b: a * b, self.factors, 1)

    def __len__(self) -> int:
        return self.order

    def element(self, residues: Sequence[int]) -> GroupElement:
        residues = tuple(c % d for c, d in zip(residues, self.factors))
        exponents = [Fraction(0)] * 3
        for c, column in zip(residues, self.columns):
            for i in range(3):
                exponents[i] += c * column[i]
        return GroupElement(residues, self.factors, tuple(_mod_one(a) for a in exponents))

    @property
    def identity(self) -> GroupElement:
        return self.element((0,) * len(self.factors))

    def elements(self) -> Iterator[GroupElement]:
        for residues in product(*(range(d) for d in self.factors)):
            yield self.element(residues)

    def element_from_exponents(self, exponents: Sequence[Fraction]) -> GroupElement:
        """
        Inverse of the embedding (t1, t2, t3) -> residues

        Raises:
            InputException: the triple does not lie in G
        """
        if not self._by_exponents:
            self._by_exponents = {g.exponents: g for g in self.elements()}
        target = tuple(_mod_one(Fraction(x)) for x in exponents)
        try:
            return self._by_exponents[target]
        except KeyError:
            raise InputException(f"exponents {tuple(str(x) for x in target)} are not in the group")

    def character(self, residues: Sequence[int]) -> Character:
        return Character(tuple(residues), self.factors)

    @property
    def trivial_character(self) -> Character:
        return self.character((0,) * len(self.factors))

    def characters(self) -> Iterator[Character]:
        for residues in product(*(range(d) for d in self.factors)):
            yield self.character(residues)

    def coordinate_character(self, index: int) -> Character:
        """rho_index for index in 1..3: picks the index-th exponent"""
        if index not in (1, 2, 3):
            raise InputException(f"coordinate character index must be 1, 2 or 3, got {index}")
        residues = []
        for column, d in zip(self.columns, self.factors):
            value = column[index - 1] * d
            residues.append(int(value) % d)
        return self.character(residues)

    def character_from_monomial(self, exponents: Sequence[int]) -> Character:
        """Character of z1^a z2^b z3^c, that is rho1^a rho2^b rho3^c"""
        result = self.trivial_character
        for i, power in enumerate(exponents, start=1):
            result = result * (self.coordinate_character(i) ** power)
        return result

    def kernel_size(self, character: Character) -> int:
        return sum(1 for g in self.elements() if character.evaluate(g) == 0)

    def orbits(self, shift: Character) -> List[Tuple[Character, ...]]:
        """
        Cosets of <shift> in the character group

        Each orbit starts at its smallest member and follows theta, theta*shift, ...
        Orbits are sorted by their first member.
        """
        seen = set()
        result: List[Tuple[Character, ...]] = []
        for theta in sorted(self.characters()):
            if theta in seen:
                continue
            orbit = [theta]
            current = theta * shift
            while current != theta:
                orbit.append(current)
                current = current * shift
            seen.update(orbit)
            result.append(tuple(orbit))
        return result

    def __repr__(self) -> str:
        return f"FiniteAbelianGroup{self.factors}"


class StructureGroup(NamedTuple):
    """G with its coordinate characters and the two distinguished elements"""
    group: FiniteAbelianGroup
    rho1: Character
    rho2: Character
    rho3: Character
    eta1: GroupElement
    eta2: GroupElement

    @property
    def rhos(self) -> Tuple[Character, Character, Character]:
        return (self.rho1, self.rho2, self.rho3)

    def rho(self, index: int) -> Character:
        return self.rhos[index - 1]

    def eta_bijection(self) -> Dict[Tuple[int, int], GroupElement]:
        """
        Map (a, b) in Z/r x Z/m to eta1^a eta2^b

        Raises:
            InputException: two pairs land on the same element
        """
        r = self.eta1_order_bound
        m = self.eta2_order_bound
        table: Dict[Tuple[int, int], GroupElement] = {}
        seen: Dict[GroupElement, Tuple[int, int]] = {}
        for a in range(r):
            for b in range(m):
                exponents = tuple(
                    a * x + b * y for x, y in zip(self.eta1.exponents, self.eta2.exponents)
                )
                element = self.group.element_from_exponents(exponents)
                if element in seen:
                    raise InputException(f"eta map is not injective: {seen[element]} and {(a, b)}")
                seen[element] = (a, b)
                table[(a, b)] = element
        return table

    @property
    def eta1_order_bound(self) -> int:
        return self.eta1.exponents[0].denominator if self.eta1.exponents[0] else 1

    @property
    def eta2_order_bound(self) -> int:
        return self.eta2.exponents[1].denominator if self.eta2.exponents[1] else 1


def structure_group(nf: ConeNormalForm) -> StructureGroup:
    """
    G = ker(phi) for the normal form, with rho1..rho3, eta1, eta2

    Example:
        sg = structure_group(normal_form_of(3, 1, 1))
        sg.group.order                       # 3
        sg.eta1.exponents                    # (1/3, 1/3, 1/3)
    """
    r, m, s = nf.r, nf.m, nf.s
    E = [[r, 0, 0], [-s, m, 0], [1, 1, 1]]
    form = smith_normal_form(E)

    factors: List[int] = []
    columns: List[Tuple[Fraction, Fraction, Fraction]] = []
    for j, d in enumerate(form.diagonal):
        if d > 1:
            factors.append(d)
            columns.append(tuple(_mod_one(Fraction(int(form.V[i, j]), d)) for i in range(3)))

    group = FiniteAbelianGroup(factors, columns)
    if group.order != r * m:
        raise InputException(f"|G| = {group.order} differs from rm = {r * m}")

    rho1, rho2, rho3 = (group.coordinate_character(i) for i in (1, 2, 3))

    eta1 = group.element_from_exponents(
        (Fraction(1, r), Fraction(s, r * m), -Fraction(1, r) - Fraction(s, r * m))
    )
    eta2 = group.element_from_exponents((Fraction(0), Fraction(1, m), Fraction(-1, m)))

    logger.debug("structure group built", extra={'rms': [r, m, s], 'factors': list(factors)})
    return StructureGroup(group, rho1, rho2, rho3, eta1, eta2)


class SequencePair(NamedTuple):
    """(m_i, r_i): kernel and image orders of rho_i"""
    m: int
    r: int


def sequence_data(nf: ConeNormalForm) -> Tuple[SequencePair, SequencePair, SequencePair]:
    """
    The pairs (m_i, r_i) from the gcd formulas

    m_i is also the lattice length of the moment-triangle edge opposite b_i.
    """
    r, m, s = nf.r, nf.m, nf.s
    order = r * m
    g2 = gcd(r, s)
    g3 = gcd(m + s, r)
    return (
        SequencePair(m, r),
        SequencePair(g2, order // g2),
        SequencePair(g3, order // g3),
    )
