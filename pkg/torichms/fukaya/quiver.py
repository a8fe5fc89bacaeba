"""
Quivers of wheels and path counting
"""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from torichms.exceptions import InputException
from torichms.fukaya.series import EVEN, GradedSeries, check_truncation
from torichms.ribbon.wheel import UP, Wheel


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """
    Vertices, arrows and forbidden two-letter subwords

    laurent marks the bare circle, which has no intervals and is modelled
    by the Laurent polynomial ring instead of a path algebra.
    """
    vertices: Tuple[int, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[Tuple[str, str], ...] = ()
    laurent: bool = False

    def __post_init__(self) -> None:
        names = {a.name for a in self.arrows}
        for arrow in self.arrows:
            if arrow.source not in self.vertices or arrow.target not in self.vertices:
                raise InputException(f"arrow {arrow.name} leaves the vertex set")
        for first, second in self.relations:
            if first not in names or second not in names:
                raise InputException(f"relation ({first}, {second}) names an unknown arrow")

    def arrows_from(self, vertex: int) -> List[Arrow]:
        return [a for a in self.arrows if a.source == vertex]

    def path_counts(self, source: int, target: int, length: int) -> List[int]:
        """
        Number of paths source -> target of each length 0..length

        Paths containing a forbidden subword are not counted.
        """
        for v in (source, target):
            if v not in self.vertices:
                raise InputException(f"vertex {v} is not in the quiver")
        forbidden = set(self.relations)
        # state: (vertex, last arrow name or None)
        frontier: Dict[Tuple[int, object], int] = {(source, None): 1}
        counts = [1 if source == target else 0]
        for _ in range(length):
            nxt: Dict[Tuple[int, object], int] = {}
            for (vertex, last), ways in frontier.items():
                for arrow in self.arrows_from(vertex):
                    if last is not None and (last, arrow.name) in forbidden:
                        continue
                    key = (arrow.target, arrow.name)
                    nxt[key] = nxt.get(key, 0) + ways
            frontier = nxt
            counts.append(sum(ways for (vertex, _), ways in frontier.items() if vertex == target))
        return counts


def wheel_quiver(wheel: Wheel) -> Quiver:
    """
    One vertex per interval, one arrow per spoke

    Spoke t sits between I_t and I_{t+1}; an up spoke gives I_t -> I_{t+1},
    a down spoke I_{t+1} -> I_t.

    Example:
        wheel_quiver(make_wheel(1, 1)).arrows
        # (Arrow('s0', 0, 1), Arrow('s1', 0, 1))
    """
    n = wheel.size
    if n == 0:
        return Quiver((0,), (), laurent=True)
    arrows = []
    for t, direction in enumerate(wheel.arrangement):
        before, after = t, (t + 1) % n
        if direction == UP:
            arrows.append(Arrow(f"s{t}", before, after))
        else:
            arrows.append(Arrow(f"s{t}", after, before))
    return Quiver(tuple(range(n)), tuple(arrows))


def wheel_hom_series(wheel: Wheel, i: int, j: int, truncate: int) -> GradedSeries:
    """
    Paths from I_j to I_i by length, all in even parity

    Gamma(0, 0) has the single object of the Laurent ring: dimension 1 at
    every weight in [-N, N].

    Raises:
        TruncationException: truncate < 0
        InputException: i or j is not an interval of the wheel
    """
    check_truncation(truncate)
    quiver = wheel_quiver(wheel)
    if quiver.laurent:
        if i != 0 or j != 0:
            raise InputException(f"the bare circle has only interval 0, got ({i}, {j})")
        return GradedSeries.from_counts(truncate, {(EVEN, w): 1 for w in range(-truncate, truncate + 1)}, laurent=True)
    counts = quiver.path_counts(j, i, truncate)
    return GradedSeries.from_counts(truncate, {(EVEN, w): c for w, c in enumerate(counts)})


def wheel_twist(p: int, q: int, k: int) -> Tuple[int, int]:
    """
    Twist of I_k as (y-part, x-part) in <x, y | p y = q x>

    I_k = k y for k <= p and I_{p+q-t} = t x.
    """
    n = p + q
    if not 0 <= k < max(n, 1):
        raise InputException(f"interval {k} out of range for Gamma({p},{q})")
    if k <= p:
        return (k, 0)
    return (0, n - k)


def wheel_twist_degree(p: int, q: int, k: int) -> int:
    """Twist of I_k in the integer grading deg X = p, deg Y = q"""
    y_part, x_part = wheel_twist(p, q, k)
    return y_part * q + x_part * p
