"""
Stacky fan input: a triangulated lattice polygon

Document schema (JSON):
    {"points": [[x, y], ...], "triangles": [[i, j, k], ...]}

Indices are 0-based. Points not used by any triangle are allowed; they are
ignored as rays. Validation errors are keyed by index paths such as
'points[3]', 'triangles[1]' or 'edges[0,2]'.
"""
import json
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Mapping, Tuple, Union

from torichms.exceptions import FanValidationException
from torichms.logging import getLogger
from torichms.toricdata.lattice import (
    LatticePoint,
    convex_hull,
    cross,
    on_segment,
    polygon_doubled_area,
)

logger = getLogger(__name__)

INTERIOR = 'interior'
BOUNDARY = 'boundary'


@dataclass(frozen=True)
class FanEdge:
    """A 2-cone: point indices i < j, its kind and the cones containing it"""
    i: int
    j: int
    kind: str
    cones: Tuple[int, ...]

    @property
    def rays(self) -> Tuple[int, int]:
        return (self.i, self.j)

    @property
    def is_interior(self) -> bool:
        return self.kind == INTERIOR

    def key(self) -> str:
        return f"{self.i}-{self.j}"


@dataclass(frozen=True)
class StackyFan:
    """
    Validated triangulated polygon

    triangles are stored counter-clockwise; edges are sorted by (i, j);
    dual_graph lists (cone, cone) pairs joined by an interior edge.
    """
    points: Tuple[LatticePoint, ...]
    triangles: Tuple[Tuple[int, int, int], ...]
    edges: Tuple[FanEdge, ...]
    dual_graph: Tuple[Tuple[int, int], ...]

    @property
    def used_indices(self) -> Tuple[int, ...]:
        return tuple(sorted({i for t in self.triangles for i in t}))

    @property
    def unused_indices(self) -> Tuple[int, ...]:
        used = set(self.used_indices)
        return tuple(i for i in range(len(self.points)) if i not in used)

    def cone_rays(self, cone: int) -> Tuple[Tuple[int, int, int], ...]:
        """Height-1 rays of a cone, counter-clockwise"""
        return tuple(self.points[i].lift() for i in self.triangles[cone])

    def adjacent_cones(self, edge: FanEdge) -> Tuple[int, ...]:
        return edge.cones

    def interior_edges(self) -> Tuple[FanEdge, ...]:
        return tuple(e for e in self.edges if e.is_interior)

    def boundary_edges(self) -> Tuple[FanEdge, ...]:
        return tuple(e for e in self.edges if not e.is_interior)

    def polygon(self) -> List[LatticePoint]:
        """Convex hull of the used points, counter-clockwise"""
        return convex_hull(self.points[i] for i in self.used_indices)

    def hull_edges(self) -> List[Tuple[LatticePoint, LatticePoint]]:
        hull = self.polygon()
        return [(hull[k], hull[(k + 1) % len(hull)]) for k in range(len(hull))]

    def to_document(self) -> Dict[str, Any]:
        return {
            'points': [p.as_list() for p in self.points],
            'triangles': [list(t) for t in self.triangles],
        }


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _add(errors: Dict[str, List[str]], key: str, message: str) -> None:
    errors.setdefault(key, []).append(message)


def _decode(document: Union[str, bytes, Mapping[str, Any]]) -> Mapping[str, Any]:
    if isinstance(document, Mapping):
        return document
    try:
        decoded = json.loads(document)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise FanValidationException({'document': [f"not valid JSON: {exc}"]})
    if not isinstance(decoded, Mapping):
        raise FanValidationException({'document': ["top level must be an object"]})
    return decoded


def _read_points(raw: Any, errors: Dict[str, List[str]]) -> List[LatticePoint]:
    if not isinstance(raw, list):
        _add(errors, 'points', "must be a list of [x, y] pairs")
        return []
    points: List[LatticePoint] = []
    seen: Dict[LatticePoint, int] = {}
    for idx, entry in enumerate(raw):
        if not (isinstance(entry, list) and len(entry) == 2 and all(_is_int(v) for v in entry)):
            _add(errors, f'points[{idx}]', "must be a pair of integers")
            points.append(LatticePoint(0, 0))
            continue
        point = LatticePoint(entry[0], entry[1])
        if point in seen:
            _add(errors, f'points[{idx}]', f"duplicate of points[{seen[point]}]")
        seen.setdefault(point, idx)
        points.append(point)
    return points


def _read_triangles(raw: Any, count: int, errors: Dict[str, List[str]]) -> List[Tuple[int, int, int]]:
    if not isinstance(raw, list) or not raw:
        _add(errors, 'triangles', "must be a non-empty list of [i, j, k] index triples")
        return []
    triangles: List[Tuple[int, int, int]] = []
    seen: Dict[frozenset, int] = {}
    for idx, entry in enumerate(raw):
        key = f'triangles[{idx}]'
        if not (isinstance(entry, list) and len(entry) == 3 and all(_is_int(v) for v in entry)):
            _add(errors, key, "must be a triple of integer indices")
            continue
        if any(v < 0 or v >= count for v in entry):
            _add(errors, key, f"index out of range 0..{count - 1}")
            continue
        if len(set(entry)) != 3:
            _add(errors, key, "indices must be distinct")
            continue
        as_set = frozenset(entry)
        if as_set in seen:
            _add(errors, key, f"duplicate of triangles[{seen[as_set]}]")
            continue
        seen[as_set] = idx
        triangles.append((entry[0], entry[1], entry[2]))
    return triangles


def _orient(points: List[LatticePoint], tri: Tuple[int, int, int]) -> Tuple[int, int, int]:
    a, b, c = tri
    if cross(points[a], points[b], points[c]) < 0:
        return (a, c, b)
    return tri


def _separated(points: List[LatticePoint], t1: Tuple[int, int, int], t2: Tuple[int, int, int]) -> bool:
    """Separating axis test on counter-clockwise triangles (touching allowed)"""
    for first, second in ((t1, t2), (t2, t1)):
        for k in range(3):
            a, b = points[first[k]], points[first[(k + 1) % 3]]
            if all(cross(a, b, points[v]) <= 0 for v in second):
                return True
    return False


def _connected(nodes: int, pairs: List[Tuple[int, int]]) -> bool:
    if nodes == 0:
        return True
    adjacency: Dict[int, List[int]] = defaultdict(list)
    for a, b in pairs:
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == nodes


def parse_fan(document: Union[str, bytes, Mapping[str, Any]]) -> StackyFan:
    """
    Parse and validate a fan document

    Raises:
        FanValidationException: malformed document, degenerate triangle,
            overlapping triangles, non-convex union, dangling interior edge
            or disconnected dual graph

    Example:
        fan = parse_fan('{"points": [[0,0],[1,0],[0,1],[1,1]], "triangles": [[0,1,3],[0,3,2]]}')
        len(fan.interior_edges())  # 1
    """
    data = _decode(document)
    errors: Dict[str, List[str]] = {}

    for required in ('points', 'triangles'):
        if required not in data:
            _add(errors, required, "field is required")
    if errors:
        raise FanValidationException(errors)

    points = _read_points(data['points'], errors)
    triangles = _read_triangles(data['triangles'], len(points), errors)
    if errors:
        raise FanValidationException(errors)

    for idx, (a, b, c) in enumerate(triangles):
        if cross(points[a], points[b], points[c]) == 0:
            _add(errors, f'triangles[{idx}]', "degenerate triangle (zero area)")
    if errors:
        raise FanValidationException(errors)

    oriented = [_orient(points, t) for t in triangles]

    for (i1, t1), (i2, t2) in combinations(enumerate(oriented), 2):
        if not _separated(points, t1, t2):
            _add(errors, f'triangles[{i1}]', f"interior overlaps triangles[{i2}]")

    used = sorted({v for t in oriented for v in t})
    for idx, tri in enumerate(oriented):
        for k in range(3):
            a, b = tri[k], tri[(k + 1) % 3]
            for v in used:
                if on_segment(points[v], points[a], points[b], strict=True):
                    _add(errors, f'triangles[{idx}]', f"edge ({a}, {b}) passes through points[{v}]")
    if errors:
        raise FanValidationException(errors)

    hull = convex_hull(points[v] for v in used)
    hull_sides = [(hull[k], hull[(k + 1) % len(hull)]) for k in range(len(hull))]

    def on_hull(i: int, j: int) -> bool:
        return any(
            on_segment(points[i], p, q) and on_segment(points[j], p, q)
            for p, q in hull_sides
        )

    owners: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for idx, tri in enumerate(oriented):
        for k in range(3):
            a, b = tri[k], tri[(k + 1) % 3]
            owners[(min(a, b), max(a, b))].append(idx)

    edges: List[FanEdge] = []
    dual: List[Tuple[int, int]] = []
    for (i, j), cones in sorted(owners.items()):
        boundary = on_hull(i, j)
        if len(cones) == 1 and not boundary:
            _add(errors, f'edges[{i},{j}]', f"dangling interior edge: only in triangles[{cones[0]}]")
            continue
        if len(cones) == 2 and boundary:
            _add(errors, f'edges[{i},{j}]', "boundary edge shared by two triangles")
            continue
        kind = BOUNDARY if boundary else INTERIOR
        edges.append(FanEdge(i, j, kind, tuple(cones)))
        if kind == INTERIOR:
            dual.append((cones[0], cones[1]))

    total = sum(
        abs(cross(points[a], points[b], points[c])) for a, b, c in oriented
    )
    hull_area = polygon_doubled_area(hull)
    if total != hull_area:
        _add(
            errors,
            'triangles',
            f"union of triangles is not convex (doubled area {total}, hull {hull_area})",
        )

    if not errors and not _connected(len(oriented), dual):
        _add(errors, 'triangles', "dual graph is disconnected")

    if errors:
        raise FanValidationException(errors)

    fan = StackyFan(
        points=tuple(points),
        triangles=tuple(oriented),
        edges=tuple(edges),
        dual_graph=tuple(sorted(dual)),
    )

    logger.debug(
        "fan parsed",
        extra={
            'cones': len(fan.triangles),
            'interior_edges': len(fan.interior_edges()),
            'unused_points': list(fan.unused_indices),
        },
    )
    return fan


async def load_fan(path) -> StackyFan:
    """Read and parse a fan document from disk"""
    from torichms.support import Storage
    from torichms.exceptions import InputException

    try:
        text = await Storage.read_text(path)
    except OSError as exc:
        raise InputException(f"cannot read fan file {path}: {exc}")
    return parse_fan(text)
