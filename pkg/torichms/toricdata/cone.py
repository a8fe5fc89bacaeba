"""
Normal form of a Calabi-Yau 3-cone

Every cone over a height-1 lattice triangle is carried, by a unimodular
height-preserving change of basis, onto the cone spanned by
    b1 = (r, -s, 1),  b2 = (0, m, 1),  b3 = (0, 0, 1)
with r, m > 0 and 0 <= s < r.
"""
from dataclasses import dataclass
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

from sympy import ImmutableMatrix, Matrix

from torichms.exceptions import DegenerateConeException
from torichms.logging import getLogger
from torichms.toricdata.lattice import LatticePoint

logger = getLogger(__name__)

Ray = Union[LatticePoint, Sequence[int]]


@dataclass(frozen=True)
class ConeNormalForm:
    """
    (r, m, s) with the basis change realizing it

    ray_order[k] is the index of the input ray that became b_{k+1}.
    """
    r: int
    m: int
    s: int
    basis_change: ImmutableMatrix
    ray_order: Tuple[int, int, int] = (0, 1, 2)

    @property
    def order(self) -> int:
        return self.r * self.m

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.r, self.m, self.s)

    def position_of(self, input_index: int) -> int:
        """Normal-form position (1, 2 or 3) of the input ray with this index"""
        return self.ray_order.index(input_index) + 1

    def rays(self) -> Tuple[Tuple[int, int, int], ...]:
        return ((self.r, -self.s, 1), (0, self.m, 1), (0, 0, 1))

    def moment_triangle(self) -> Tuple[LatticePoint, LatticePoint, LatticePoint]:
        """Vertices (0,0), (0,m), (r,-s) of the dual triangle"""
        return (LatticePoint(0, 0), LatticePoint(0, self.m), LatticePoint(self.r, -self.s))

    def __str__(self) -> str:
        return f"(r={self.r}, m={self.m}, s={self.s})"


def _as_point(ray: Ray) -> LatticePoint:
    if isinstance(ray, LatticePoint):
        return ray
    values = list(ray)
    if len(values) == 3 and values[2] != 1:
        raise DegenerateConeException(f"ray {tuple(values)} is not at height 1")
    return LatticePoint.of(values)


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Returns (g, x, y) with a*x + b*y = g >= 0"""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _mat_mul(a: List[List[int]], b: List[List[int]]) -> List[List[int]]:
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _normalize_ordered(p1: LatticePoint, p2: LatticePoint, p3: LatticePoint) -> Tuple[int, int, int, List[List[int]]]:
    v1 = p1 - p3
    v2 = p2 - p3
    m = gcd(abs(v2[0]), abs(v2[1]))
    if m == 0:
        raise DegenerateConeException(f"rays {p2} and {p3} coincide")
    a, b = v2[0] // m, v2[1] // m
    _, x, y = _extended_gcd(a, b)
    # A sends the primitive direction of v2 to (0, 1)
    A = [[b, -a], [x, y]]

    x1 = A[0][0] * v1[0] + A[0][1] * v1[1]
    y1 = A[1][0] * v1[0] + A[1][1] * v1[1]
    if x1 == 0:
        raise DegenerateConeException(f"rays {p1}, {p2}, {p3} span a degenerate cone")
    if x1 < 0:
        A = [[-A[0][0], -A[0][1]], A[1]]
        x1 = -x1

    r = x1
    s = (-y1) % r
    k = (-s - y1) // r
    L = _mat_mul([[1, 0], [k, 1]], A)

    shift = [-(L[0][0] * p3.x + L[0][1] * p3.y), -(L[1][0] * p3.x + L[1][1] * p3.y)]
    basis = [
        [L[0][0], L[0][1], shift[0]],
        [L[1][0], L[1][1], shift[1]],
        [0, 0, 1],
    ]
    return r, m, s, basis


def normalize_cone(b1: Ray, b2: Ray, b3: Ray) -> ConeNormalForm:
    """
    Bring three height-1 rays into normal form

    All three cyclic rotations are tried; the lexicographically smallest
    (r, m, s) wins and ties keep the earliest rotation.

    Raises:
        DegenerateConeException: rays not at height 1 or not spanning a cone

    Example:
        normalize_cone((-1, -1, 1), (1, 0, 1), (0, 1, 1)).key  # (3, 1, 1)
    """
    points = [_as_point(b) for b in (b1, b2, b3)]

    best = None
    for shift in range(3):
        order = (shift, (shift + 1) % 3, (shift + 2) % 3)
        r, m, s, basis = _normalize_ordered(*(points[i] for i in order))
        if best is None or (r, m, s) < best[0]:
            best = ((r, m, s), basis, order)

    (r, m, s), basis, order = best
    nf = ConeNormalForm(r=r, m=m, s=s, basis_change=ImmutableMatrix(basis), ray_order=order)

    if __debug__:
        image = Matrix(basis) * Matrix([list(points[i].lift()) for i in order]).T
        assert image == Matrix(nf.rays()).T, "basis change does not reach the normal form"

    logger.debug("cone normalized", extra={'rays': [p.as_list() for p in points], 'rms': [r, m, s]})
    return nf


def normalize_rays(rays: Iterable[Ray]) -> ConeNormalForm:
    values = list(rays)
    if len(values) != 3:
        raise DegenerateConeException(f"a 3-cone needs exactly 3 rays, got {len(values)}")
    return normalize_cone(*values)


def normal_form_of(r: int, m: int, s: int) -> ConeNormalForm:
    """
    Normal form taken literally from (r, m, s), identity basis change

    No rotation search: (4, 1, 1) stays (4, 1, 1) even though its triangle
    also normalizes to (2, 2, 1).
    """
    if r < 1 or m < 1 or not 0 <= s < r:
        raise DegenerateConeException(f"invalid normal form (r={r}, m={m}, s={s})")
    identity = ImmutableMatrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    return ConeNormalForm(r=r, m=m, s=s, basis_change=identity)
