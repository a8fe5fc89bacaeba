"""
Wheels Gamma(p, q)

A central circle through p + q trivalent vertices, each carrying one spoke
(a leg). Vertex t owns half-edges in_t = 3t, out_t = 3t + 1 and
spoke_t = 3t + 2; the circle edge out_{t-1} -- in_t is the interval I_t.
An up vertex has rotation (in, out, spoke), a down vertex (in, spoke, out).
Gamma(0, 0) is a single vertex with a loop.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from torichms.exceptions import InputException
from torichms.ribbon.graph import RibbonGraph

UP = 'up'
DOWN = 'down'


@dataclass(frozen=True)
class Wheel:
    p: int
    q: int
    arrangement: Tuple[str, ...]
    graph: RibbonGraph

    @property
    def size(self) -> int:
        return self.p + self.q

    @property
    def is_bare_circle(self) -> bool:
        return self.size == 0

    def interval(self, t: int) -> Tuple[int, int]:
        """Circle edge (out_{t-1}, in_t)"""
        n = self.size
        if n == 0:
            return (0, 1)
        if not 0 <= t < n:
            raise InputException(f"interval {t} out of range for Gamma({self.p},{self.q})")
        return (3 * ((t - 1) % n) + 1, 3 * t)

    def spoke(self, t: int) -> int:
        return 3 * t + 2


def make_wheel(p: int, q: int, arrangement: Optional[Sequence[str]] = None) -> Wheel:
    """
    Build Gamma(p, q)

    arrangement lists 'up'/'down' per vertex; the default is p ups then q downs.

    Example:
        make_wheel(2, 3).graph.euler_characteristic()  # -5
    """
    if p < 0 or q < 0:
        raise InputException(f"spoke counts must be non-negative, got ({p}, {q})")
    if arrangement is None:
        arrangement = (UP,) * p + (DOWN,) * q
    arrangement = tuple(arrangement)
    if len(arrangement) != p + q or arrangement.count(UP) != p or arrangement.count(DOWN) != q:
        raise InputException(f"arrangement {arrangement} does not have {p} up and {q} down spokes")

    n = p + q
    if n == 0:
        # out0 = 0 and in0 = 1 close a loop at the only vertex
        graph = RibbonGraph((1, 0), ((1, 0),), ('c',), ('out0', 'in0'))
        return Wheel(0, 0, (), graph)

    tau: List[int] = [0] * (3 * n)
    rotation = []
    half_labels = []
    for t in range(n):
        incoming, outgoing, spoke = 3 * t, 3 * t + 1, 3 * t + 2
        nxt = 3 * ((t + 1) % n)
        tau[outgoing] = nxt
        tau[nxt] = outgoing
        tau[spoke] = spoke
        if arrangement[t] == UP:
            rotation.append((incoming, outgoing, spoke))
        else:
            rotation.append((incoming, spoke, outgoing))
        half_labels.extend([f"in{t}", f"out{t}", f"spoke{t}"])

    graph = RibbonGraph(
        tuple(tau),
        tuple(rotation),
        tuple(f"w{t}" for t in range(n)),
        tuple(half_labels),
    )
    return Wheel(p, q, arrangement, graph)


def wheel_signature(graph: RibbonGraph, start_vertex: int, start_out: int) -> Optional[Tuple[str, ...]]:
    """
    Up/down pattern of a wheel, read from start_vertex leaving along start_out

    Returns None unless the non-leg half-edges form one circle through every
    vertex and each vertex carries exactly one leg.
    """
    if graph.vertex_of[start_out] != start_vertex:
        return None
    for v in graph.vertices:
        legs = [h for h in graph.rotation[v] if graph.is_external(h)]
        if graph.valency(v) != 3 or len(legs) != 1:
            return None

    signature: List[str] = []
    visited = set()
    v, out = start_vertex, start_out
    for _ in graph.vertices:
        if graph.is_external(out):
            return None
        incoming = graph.tau[out]
        w = graph.vertex_of[incoming]
        if w in visited:
            return None
        visited.add(w)
        circle = [h for h in graph.rotation[w] if not graph.is_external(h)]
        if incoming not in circle:
            return None
        nxt = circle[0] if circle[1] == incoming else circle[1]
        signature.append(UP if graph.sigma(incoming) == nxt else DOWN)
        v, out = w, nxt

    if v != start_vertex:
        return None
    # vertices were read in the order 1, ..., n-1, 0
    return (signature[-1],) + tuple(signature[:-1])


def wheel_type(graph: RibbonGraph) -> Optional[Tuple[int, int]]:
    """
    (p, q) if the graph is a wheel, else None

    Reading the circle backwards swaps p and q; the reading with p >= q is returned.
    """
    if len(graph.rotation) == 1 and graph.valency(0) == 2 and not graph.legs():
        return (0, 0)
    if not len(graph.rotation):
        return None
    readings = []
    for out in graph.rotation[0]:
        if graph.is_external(out):
            continue
        signature = wheel_signature(graph, 0, out)
        if signature is not None:
            readings.append((signature.count(UP), signature.count(DOWN)))
    return max(readings) if readings else None
