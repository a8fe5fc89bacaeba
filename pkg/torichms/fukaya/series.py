"""
Truncated Z/2-graded dimension series
"""
from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Tuple

from torichms.exceptions import InputException, TruncationException

EVEN = 0
ODD = 1
PARITY_NAMES = ('even', 'odd')

Bucket = Tuple[int, int]


def check_truncation(truncate: int) -> int:
    if not isinstance(truncate, int) or isinstance(truncate, bool):
        raise InputException(f"truncation bound must be an integer, got {truncate!r}")
    if truncate < 0:
        raise TruncationException(f"truncation bound must be non-negative, got {truncate}")
    return truncate


@dataclass(frozen=True)
class GradedSeries:
    """
    Dimensions by (parity, weight) for min_weight <= weight <= truncate

    min_weight is 0 for path and polynomial counts and -truncate for
    Laurent counts. Only non-zero entries are stored, sorted, so equality
    of two series with the same window is entrywise equality.

    Example:
        s = GradedSeries.from_counts(4, {(0, 0): 1, (0, 2): 1})
        s.dim(0, 2)       # 1
        s.to_dict()       # {'truncate': 4, 'min_weight': 0, 'dims': [[1, 0, 1, 0, 0], [0, 0, 0, 0, 0]]}
    """
    truncate: int
    min_weight: int
    entries: Tuple[Tuple[Bucket, int], ...]

    @classmethod
    def from_counts(cls, truncate: int, counts: Mapping[Bucket, int], laurent: bool = False) -> 'GradedSeries':
        check_truncation(truncate)
        low = -truncate if laurent else 0
        for (parity, weight), dim in counts.items():
            if parity not in (EVEN, ODD):
                raise InputException(f"parity must be 0 or 1, got {parity}")
            if dim < 0:
                raise InputException(f"negative dimension {dim} at weight {weight}")
        kept = tuple(sorted(
            ((parity, weight), dim)
            for (parity, weight), dim in counts.items()
            if dim and low <= weight <= truncate
        ))
        return cls(truncate, low, kept)

    @classmethod
    def zero(cls, truncate: int, laurent: bool = False) -> 'GradedSeries':
        return cls.from_counts(truncate, {}, laurent)

    @classmethod
    def accumulate(cls, truncate: int, buckets: Iterable[Bucket], laurent: bool = False) -> 'GradedSeries':
        """One basis element per bucket occurrence"""
        counts: Dict[Bucket, int] = {}
        for bucket in buckets:
            counts[bucket] = counts.get(bucket, 0) + 1
        return cls.from_counts(truncate, counts, laurent)

    @property
    def is_laurent(self) -> bool:
        return self.min_weight < 0

    @property
    def weights(self) -> range:
        return range(self.min_weight, self.truncate + 1)

    def as_mapping(self) -> Dict[Bucket, int]:
        return dict(self.entries)

    def dim(self, parity: int, weight: int) -> int:
        return self.as_mapping().get((parity, weight), 0)

    def total(self, parity: Optional[int] = None) -> int:
        return sum(d for (p, _), d in self.entries if parity is None or p == parity)

    def buckets(self) -> Iterator[Tuple[int, int, int]]:
        """(parity, weight, dim) over the whole window, zeros included"""
        table = self.as_mapping()
        for parity in (EVEN, ODD):
            for weight in self.weights:
                yield parity, weight, table.get((parity, weight), 0)

    def truncated(self, truncate: int) -> 'GradedSeries':
        check_truncation(truncate)
        if truncate > self.truncate:
            raise InputException(f"cannot widen a series truncated at {self.truncate} to {truncate}")
        return GradedSeries.from_counts(truncate, self.as_mapping(), self.is_laurent)

    def __add__(self, other: 'GradedSeries') -> 'GradedSeries':
        if (self.truncate, self.min_weight) != (other.truncate, other.min_weight):
            raise InputException("series with different windows cannot be added")
        counts = self.as_mapping()
        for bucket, dim in other.entries:
            counts[bucket] = counts.get(bucket, 0) + dim
        return GradedSeries.from_counts(self.truncate, counts, self.is_laurent)

    def first_difference(self, other: 'GradedSeries') -> Optional[Dict[str, Any]]:
        """
        Smallest (parity, weight) where the two series differ, on the shared window

        Returns None when they agree.
        """
        truncate = min(self.truncate, other.truncate)
        low = max(self.min_weight, other.min_weight)
        left, right = self.as_mapping(), other.as_mapping()
        for parity in (EVEN, ODD):
            for weight in range(low, truncate + 1):
                a, b = left.get((parity, weight), 0), right.get((parity, weight), 0)
                if a != b:
                    return {'parity': PARITY_NAMES[parity], 'weight': weight, 'left': a, 'right': b}
        return None

    def agrees_with(self, other: 'GradedSeries') -> bool:
        return self.first_difference(other) is None

    def to_dict(self) -> Dict[str, Any]:
        table = self.as_mapping()
        return {
            'truncate': self.truncate,
            'min_weight': self.min_weight,
            'dims': [[table.get((parity, w), 0) for w in self.weights] for parity in (EVEN, ODD)],
        }
