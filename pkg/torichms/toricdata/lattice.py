"""
Planar lattice points and exact polygon helpers
"""
from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Sequence, Tuple


@dataclass(frozen=True, order=True)
class LatticePoint:
    """Integer point (x, y); the ray it stands for is (x, y, 1)"""
    x: int
    y: int

    def lift(self) -> Tuple[int, int, int]:
        return (self.x, self.y, 1)

    def __sub__(self, other: 'LatticePoint') -> Tuple[int, int]:
        return (self.x - other.x, self.y - other.y)

    def as_list(self) -> List[int]:
        return [self.x, self.y]

    @classmethod
    def of(cls, value: Sequence[int]) -> 'LatticePoint':
        """Build from (x, y) or a height-1 ray (x, y, 1)"""
        if len(value) == 3:
            return cls(int(value[0]), int(value[1]))
        x, y = value
        return cls(int(x), int(y))


def cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """Doubled signed area of (o, a, b); positive when counter-clockwise"""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def lattice_length(a: LatticePoint, b: LatticePoint) -> int:
    """Number of lattice points on segment ab minus one"""
    return gcd(abs(b.x - a.x), abs(b.y - a.y))


def on_segment(p: LatticePoint, a: LatticePoint, b: LatticePoint, strict: bool = False) -> bool:
    """True if p lies on segment ab (strictly inside when strict)"""
    if cross(a, b, p) != 0:
        return False
    if not (min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)):
        return False
    if strict and p in (a, b):
        return False
    return True


def convex_hull(points: Iterable[LatticePoint]) -> List[LatticePoint]:
    """
    Vertices of the convex hull, counter-clockwise, collinear points dropped

    Starts at the lexicographically smallest point (monotone chain).
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    lower: List[LatticePoint] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)

    upper: List[LatticePoint] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)

    return lower[:-1] + upper[:-1]


def polygon_doubled_area(vertices: Sequence[LatticePoint]) -> int:
    """Shoelace formula, absolute value"""
    total = 0
    for i, p in enumerate(vertices):
        q = vertices[(i + 1) % len(vertices)]
        total += p.x * q.y - q.x * p.y
    return abs(total)
