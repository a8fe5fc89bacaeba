"""
Graded rings with a character on every generator

Monomials are exponent vectors; a relation (a, b) kills every monomial in
which both a and b appear. All generator weights are positive, so the
monomials of weight at most N form a finite set.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from torichms.exceptions import InputException
from torichms.fukaya.series import EVEN, ODD, Bucket, GradedSeries, check_truncation
from torichms.toricdata.group import Character


@dataclass(frozen=True)
class RingGenerator:
    name: str
    weight: int
    parity: int
    character: Character

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise InputException(f"generator {self.name} needs a positive weight, got {self.weight}")
        if self.parity not in (EVEN, ODD):
            raise InputException(f"generator {self.name} has parity {self.parity}")


@dataclass(frozen=True)
class Monomial:
    exponents: Tuple[int, ...]
    weight: int
    parity: int
    character: Character


@dataclass(frozen=True)
class WeightedCharacterRing:
    generators: Tuple[RingGenerator, ...]
    relations: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InputException(f"duplicate generator names in {names}")
        for a, b in self.relations:
            if a not in names or b not in names:
                raise InputException(f"relation ({a}, {b}) names an unknown generator")

    def _index(self, name: str) -> int:
        return [g.name for g in self.generators].index(name)

    def _allowed(self, exponents: Sequence[int]) -> bool:
        return not any(
            exponents[self._index(a)] and exponents[self._index(b)] for a, b in self.relations
        )

    def monomials(self, max_weight: int, one: Character) -> Iterator[Monomial]:
        """Surviving monomials of weight at most max_weight; one is the trivial character"""
        def extend(position: int, remaining: int, exponents: List[int]) -> Iterator[List[int]]:
            if position == len(self.generators):
                yield exponents
                return
            weight = self.generators[position].weight
            for e in range(remaining // weight + 1):
                yield from extend(position + 1, remaining - e * weight, exponents + [e])

        powers = [
            [gen.character ** e for e in range(max(max_weight, 0) // gen.weight + 1)]
            for gen in self.generators
        ]
        for exponents in extend(0, max_weight, []):
            if not self._allowed(exponents):
                continue
            weight = parity = 0
            character = one
            for e, gen, table in zip(exponents, self.generators, powers):
                weight += e * gen.weight
                parity += e * gen.parity
                if e:
                    character = character * table[e]
            yield Monomial(tuple(exponents), weight, parity % 2, character)

    def series(self, truncate: int, twist: Character, module_generator: Optional[RingGenerator] = None,
               filtered: bool = True) -> GradedSeries:
        """
        Count monomials m (times module_generator when given) with
        character(m) * twist trivial

        filtered=False counts every monomial regardless of character.
        """
        check_truncation(truncate)
        one = twist / twist
        offset_weight, offset_parity, offset_character = 0, EVEN, one
        if module_generator is not None:
            offset_weight = module_generator.weight
            offset_parity = module_generator.parity
            offset_character = module_generator.character
        counts: Dict[Bucket, int] = {}
        for mono in self.monomials(truncate - offset_weight, one) if truncate >= offset_weight else ():
            character = mono.character * offset_character
            if filtered and not (character * twist).is_trivial:
                continue
            bucket = ((mono.parity + offset_parity) % 2, mono.weight + offset_weight)
            counts[bucket] = counts.get(bucket, 0) + 1
        return GradedSeries.from_counts(truncate, counts)
