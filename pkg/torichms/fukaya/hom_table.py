"""
Hom-series tables over generator pairs
"""
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Tuple

from torichms.exceptions import InputException
from torichms.fukaya.series import GradedSeries
from torichms.ribbon.graph import format_character
from torichms.toricdata.group import Character


@dataclass(frozen=True, order=True)
class Generator:
    """Object (side, label): the A-side arc, or on the B-side O_{A^1_side}(label)"""
    side: int
    label: Character

    def __post_init__(self) -> None:
        if self.side not in (1, 2):
            raise InputException(f"generator side must be 1 or 2, got {self.side}")

    def to_list(self) -> list:
        return [self.side, list(self.label.residues)]

    def __str__(self) -> str:
        return f"({self.side},{format_character(self.label)})"


Pair = Tuple[Generator, Generator]


@dataclass(frozen=True)
class HomTable:
    """Series for every ordered generator pair (source, target)"""
    truncate: int
    entries: Dict[Pair, GradedSeries]

    def __len__(self) -> int:
        return len(self.entries)

    def pairs(self) -> Iterator[Pair]:
        return iter(sorted(self.entries))

    def series(self, source: Generator, target: Generator) -> GradedSeries:
        try:
            return self.entries[(source, target)]
        except KeyError:
            raise InputException(f"no entry for Hom({source}, {target})")

    def first_difference(self, other: 'HomTable') -> Optional[Dict[str, Any]]:
        """
        Counterexample coordinates of the first disagreement, in pair order

        A pair present in only one table is reported with the missing side
        as null.
        """
        for pair in sorted(set(self.entries) | set(other.entries)):
            mine, theirs = self.entries.get(pair), other.entries.get(pair)
            where = {'pair': [pair[0].to_list(), pair[1].to_list()]}
            if mine is None or theirs is None:
                return {**where, 'left': None if mine is None else mine.to_dict(),
                        'right': None if theirs is None else theirs.to_dict()}
            diff = mine.first_difference(theirs)
            if diff is not None:
                return {**where, **diff}
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'truncate': self.truncate,
            'pairs': [
                {'source': s.to_list(), 'target': t.to_list(), 'series': self.entries[(s, t)].to_dict()}
                for s, t in self.pairs()
            ],
        }
