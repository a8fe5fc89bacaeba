"""
Deck group and monodromy of the quotient covering

The covering (X, Y) -> (X^r Y^-s, Y^m) acts on loops of the ambient torus by
A = [[r, -s], [0, m]]. Its deck group is Z^2 modulo the lattice spanned by
the columns (r, 0) and (-s, m). Sending e1 -> rho1 and e2 -> rho2 identifies
it with the character group, so the loop around X = 0 acts as rho1 and the
loop around Y = 0 as rho2.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from torichms.exceptions import ConventionViolationException
from torichms.logging import getLogger
from torichms.toricdata.cone import ConeNormalForm
from torichms.toricdata.group import Character, StructureGroup, sequence_data, structure_group
from torichms.toricdata.smith import SmithForm, smith_normal_form

logger = getLogger(__name__)

Orbit = Tuple[Character, ...]


@dataclass(frozen=True)
class MonodromyData:
    normal_form: ConeNormalForm
    structure: StructureGroup
    deck: SmithForm
    sigma_x: Tuple[int, ...]
    sigma_y: Tuple[int, ...]
    sigma_x_character: Character
    sigma_y_character: Character
    orbits_x: Tuple[Orbit, ...]
    orbits_y: Tuple[Orbit, ...]

    @property
    def deck_factors(self) -> Tuple[int, ...]:
        return self.deck.torsion

    def deck_class(self, loop: Sequence[int]) -> Tuple[int, ...]:
        return deck_class(self.deck, loop)

    def deck_to_character(self, residues: Sequence[int]) -> Character:
        return deck_to_character(self.deck, self.structure, residues)

    def orbit_sizes(self, which: str) -> Dict[int, int]:
        orbits = self.orbits_x if which == 'x' else self.orbits_y
        sizes: Dict[int, int] = {}
        for orbit in orbits:
            sizes[len(orbit)] = sizes.get(len(orbit), 0) + 1
        return sizes

    def to_dict(self) -> dict:
        return {
            'rms': list(self.normal_form.key),
            'deck_factors': list(self.deck_factors),
            'sigma_x': list(self.sigma_x),
            'sigma_y': list(self.sigma_y),
            'orbits_x': self.orbit_sizes('x'),
            'orbits_y': self.orbit_sizes('y'),
        }


def deck_lattice(nf: ConeNormalForm) -> Matrix:
    """Columns (r, 0) and (-s, m)"""
    return Matrix([[nf.r, -nf.s], [0, nf.m]])


def deck_class(deck: SmithForm, loop: Sequence[int]) -> Tuple[int, ...]:
    y = deck.U * Matrix(list(loop))
    return tuple(int(y[i]) % d for i, d in enumerate(deck.diagonal) if d > 1)


def deck_to_character(deck: SmithForm, structure: StructureGroup, residues: Sequence[int]) -> Character:
    """Lift residues to a loop (a, b) and read rho1^a rho2^b"""
    y = []
    it = iter(residues)
    for d in deck.diagonal:
        y.append(next(it) if d > 1 else 0)
    a, b = (int(v) for v in deck.U.inv() * Matrix(y))
    return (structure.rho1 ** a) * (structure.rho2 ** b)


def _generated(structure: StructureGroup, generators: List[Character]) -> int:
    reached = {structure.group.trivial_character}
    frontier = list(reached)
    while frontier:
        current = frontier.pop()
        for g in generators:
            nxt = current * g
            if nxt not in reached:
                reached.add(nxt)
                frontier.append(nxt)
    return len(reached)


def monodromy(nf: ConeNormalForm, structure: Optional[StructureGroup] = None) -> MonodromyData:
    """
    sigma_X, sigma_Y and their orbits on the character group

    Raises:
        ConventionViolationException: sigma_X is not rho1, sigma_Y is not rho2,
            the orbit counts differ from (m_i, r_i), or the cover is disconnected
    """
    structure = structure or structure_group(nf)
    deck = smith_normal_form(deck_lattice(nf))

    sigma_x = deck_class(deck, (1, 0))
    sigma_y = deck_class(deck, (0, 1))
    chi_x = deck_to_character(deck, structure, sigma_x)
    chi_y = deck_to_character(deck, structure, sigma_y)

    data = MonodromyData(
        normal_form=nf,
        structure=structure,
        deck=deck,
        sigma_x=sigma_x,
        sigma_y=sigma_y,
        sigma_x_character=chi_x,
        sigma_y_character=chi_y,
        orbits_x=tuple(structure.group.orbits(chi_x)),
        orbits_y=tuple(structure.group.orbits(chi_y)),
    )
    verify_monodromy(data)
    logger.debug("monodromy computed", extra=data.to_dict())
    return data


def verify_monodromy(data: MonodromyData) -> None:
    nf = data.normal_form
    structure = data.structure
    base = {'rms': list(nf.key)}

    if data.sigma_x_character != structure.rho1:
        raise ConventionViolationException(
            "sigma_X does not act as rho1",
            counterexample={**base, 'sigma_x': repr(data.sigma_x_character), 'rho1': repr(structure.rho1)},
        )
    if data.sigma_y_character != structure.rho2:
        raise ConventionViolationException(
            "sigma_Y does not act as rho2",
            counterexample={**base, 'sigma_y': repr(data.sigma_y_character), 'rho2': repr(structure.rho2)},
        )

    pairs = sequence_data(nf)
    for which, pair in (('x', pairs[0]), ('y', pairs[1])):
        expected = {pair.r: pair.m}
        if data.orbit_sizes(which) != expected:
            raise ConventionViolationException(
                f"sigma_{which.upper()} orbits do not match (m, r) = ({pair.m}, {pair.r})",
                counterexample={**base, 'orbits': data.orbit_sizes(which), 'expected': expected},
            )

    if _generated(structure, [data.sigma_x_character, data.sigma_y_character]) != structure.group.order:
        raise ConventionViolationException("monodromy does not act transitively", counterexample=base)
