"""
Lattice point counts of convex lattice polygons
"""
from typing import Iterable, NamedTuple, Sequence, Union

from torichms.exceptions import InputException
from torichms.toricdata.lattice import (
    LatticePoint,
    convex_hull,
    cross,
    on_segment,
    polygon_doubled_area,
)

PointLike = Union[LatticePoint, Sequence[int]]


class PickCounts(NamedTuple):
    interior: int
    boundary: int

    @property
    def total(self) -> int:
        return self.interior + self.boundary


def _points(polygon: Iterable[PointLike]) -> list:
    return [p if isinstance(p, LatticePoint) else LatticePoint.of(p) for p in polygon]


def pick_counts(polygon: Iterable[PointLike]) -> PickCounts:
    """
    Interior and boundary lattice points of the convex hull of the input

    Counts by enumerating the bounding box, then re-checks Pick's relation
    2A = 2i + b - 2.

    Raises:
        InputException: empty or collinear input

    Example:
        pick_counts([(0, 0), (0, 1), (3, -1)])  # PickCounts(interior=1, boundary=3)
    """
    points = _points(polygon)
    if not points:
        raise InputException("cannot count lattice points of an empty polygon")

    hull = convex_hull(points)
    if len(hull) < 3:
        raise InputException(f"polygon {[p.as_list() for p in hull]} is degenerate (collinear)")

    sides = [(hull[k], hull[(k + 1) % len(hull)]) for k in range(len(hull))]
    xs = [p.x for p in hull]
    ys = [p.y for p in hull]

    interior = 0
    boundary = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = LatticePoint(x, y)
            if any(on_segment(p, a, b) for a, b in sides):
                boundary += 1
            elif all(cross(a, b, p) > 0 for a, b in sides):
                interior += 1

    assert polygon_doubled_area(hull) == 2 * interior + boundary - 2, "Pick relation violated"
    return PickCounts(interior, boundary)
