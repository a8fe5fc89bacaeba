"""
Ribbon graphs on integer half-edges

A ribbon graph is a finite set of half-edges 0..H-1 with
    tau       an involution; fixed points are external edges (legs)
    vertex_of the vertex each half-edge is attached to
    rotation  the cyclic order of the half-edges at each vertex

sigma(h) is the next half-edge after h at its vertex. Boundary cycles
(faces) are the orbits of phi = sigma . tau.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from torichms.exceptions import InputException
from torichms.toricdata.group import Character


@dataclass(frozen=True)
class RibbonGraph:
    tau: Tuple[int, ...]
    rotation: Tuple[Tuple[int, ...], ...]
    vertex_labels: Tuple[str, ...] = ()
    half_edge_labels: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.tau)
        for h, partner in enumerate(self.tau):
            if not 0 <= partner < n or self.tau[partner] != h:
                raise InputException(f"tau is not an involution at half-edge {h}")
        seen: List[int] = [h for cycle in self.rotation for h in cycle]
        if sorted(seen) != list(range(n)):
            raise InputException("rotation does not partition the half-edges")
        if self.vertex_labels and len(self.vertex_labels) != len(self.rotation):
            raise InputException("one label per vertex is required")
        if self.half_edge_labels and len(self.half_edge_labels) != n:
            raise InputException("one label per half-edge is required")

    @cached_property
    def vertex_of(self) -> Tuple[int, ...]:
        owner = [0] * len(self.tau)
        for v, cycle in enumerate(self.rotation):
            for h in cycle:
                owner[h] = v
        return tuple(owner)

    @cached_property
    def _successor(self) -> Tuple[int, ...]:
        nxt = [0] * len(self.tau)
        for cycle in self.rotation:
            for k, h in enumerate(cycle):
                nxt[h] = cycle[(k + 1) % len(cycle)]
        return tuple(nxt)

    @property
    def half_edges(self) -> range:
        return range(len(self.tau))

    @property
    def vertices(self) -> range:
        return range(len(self.rotation))

    def sigma(self, h: int) -> int:
        return self._successor[h]

    def phi(self, h: int) -> int:
        """Next half-edge along the boundary cycle through h"""
        return self._successor[self.tau[h]]

    def is_external(self, h: int) -> bool:
        return self.tau[h] == h

    def valency(self, v: int) -> int:
        return len(self.rotation[v])

    def edges(self) -> List[Tuple[int, int]]:
        """tau-orbits (h, tau h) with h <= tau h; legs appear as (h, h)"""
        return [(h, t) for h, t in enumerate(self.tau) if h <= t]

    def legs(self) -> List[int]:
        return [h for h in self.half_edges if self.is_external(h)]

    def euler_characteristic(self) -> int:
        """|V| - |E| with legs counted as edges"""
        return len(self.rotation) - len(self.edges())

    def faces(self) -> List[Tuple[int, ...]]:
        """Orbits of phi, each starting at its smallest half-edge"""
        seen = set()
        result = []
        for h in self.half_edges:
            if h in seen:
                continue
            cycle = [h]
            seen.add(h)
            current = self.phi(h)
            while current != h:
                cycle.append(current)
                seen.add(current)
                current = self.phi(current)
            result.append(tuple(cycle))
        return result

    def components(self) -> List[Tuple[int, ...]]:
        parent = list(self.vertices)

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for h, t in self.edges():
            a, b = find(self.vertex_of[h]), find(self.vertex_of[t])
            if a != b:
                parent[max(a, b)] = min(a, b)

        groups: Dict[int, List[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return [tuple(vs) for _, vs in sorted(groups.items())]

    def cap_external_edges(self) -> 'RibbonGraph':
        """Give every leg a new univalent vertex at its free end"""
        tau = list(self.tau)
        rotation = list(self.rotation)
        labels = list(self.vertex_labels)
        for h in self.legs():
            cap = len(tau)
            tau.append(h)
            tau[h] = cap
            rotation.append((cap,))
            if labels:
                labels.append(f"cap{h}")
        half_labels = list(self.half_edge_labels)
        if half_labels:
            half_labels.extend(f"cap{h}" for h in self.legs())
        return RibbonGraph(tuple(tau), tuple(rotation), tuple(labels), tuple(half_labels))

    def genus(self) -> int:
        """Total genus of the capped graph, summed over components"""
        capped = self.cap_external_edges()
        total = len(capped.rotation) - len(capped.edges()) + len(capped.faces())
        twice = 2 * len(capped.components()) - total
        if twice % 2:
            raise InputException("odd Euler characteristic for a closed orientable surface")
        return twice // 2

    def with_tau(self, tau: Sequence[int]) -> 'RibbonGraph':
        return RibbonGraph(tuple(tau), self.rotation, self.vertex_labels, self.half_edge_labels)

    def vertex_label(self, v: int) -> str:
        return self.vertex_labels[v] if self.vertex_labels else f"v{v}"

    def half_edge_label(self, h: int) -> str:
        return self.half_edge_labels[h] if self.half_edge_labels else f"h{h}"

    def induced(self, vertices: Iterable[int]) -> Tuple['RibbonGraph', Dict[int, int]]:
        """
        Subgraph on a vertex set with all their half-edges

        Half-edges whose partner falls outside become legs. Returns the graph
        and the map from old to new half-edge ids.
        """
        chosen = sorted(set(vertices))
        remap: Dict[int, int] = {}
        for v in chosen:
            for h in self.rotation[v]:
                remap[h] = len(remap)
        tau = [0] * len(remap)
        for h, new in remap.items():
            tau[new] = remap.get(self.tau[h], new)
        rotation = tuple(tuple(remap[h] for h in self.rotation[v]) for v in chosen)
        labels = tuple(self.vertex_label(v) for v in chosen) if self.vertex_labels else ()
        half_labels = tuple(self.half_edge_label(h) for h in remap) if self.half_edge_labels else ()
        return RibbonGraph(tuple(tau), rotation, labels, half_labels), remap

    @classmethod
    def disjoint_union(cls, graphs: Sequence['RibbonGraph']) -> Tuple['RibbonGraph', List[Tuple[int, int]]]:
        """Union with shifted ids; returns (graph, [(half-edge offset, vertex offset)])"""
        tau: List[int] = []
        rotation: List[Tuple[int, ...]] = []
        labels: List[str] = []
        half_labels: List[str] = []
        offsets = []
        for g in graphs:
            h_off, v_off = len(tau), len(rotation)
            offsets.append((h_off, v_off))
            tau.extend(t + h_off for t in g.tau)
            rotation.extend(tuple(h + h_off for h in cycle) for cycle in g.rotation)
            labels.extend(g.vertex_label(v) for v in g.vertices)
            half_labels.extend(g.half_edge_label(h) for h in g.half_edges)
        return cls(tuple(tau), tuple(rotation), tuple(labels), tuple(half_labels)), offsets


@dataclass(frozen=True)
class VoltageLift:
    """
    Cover of a base graph by a character-valued voltage

    Lifted half-edge (h, theta) has id h * n + k where theta is the k-th
    character in sorted order; lifted vertex (v, theta) has id v * n + k.
    tau~(h, theta) = (tau h, theta * mu(h)).
    """
    base: RibbonGraph
    voltage: Tuple[Character, ...]
    characters: Tuple[Character, ...]
    graph: RibbonGraph
    _index: Mapping[Character, int] = field(repr=False, compare=False, default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.characters)

    def half_edge(self, h: int, theta: Character) -> int:
        return h * self.degree + self._index[theta]

    def vertex(self, v: int, theta: Character) -> int:
        return v * self.degree + self._index[theta]

    def decode_half_edge(self, lifted: int) -> Tuple[int, Character]:
        h, k = divmod(lifted, self.degree)
        return h, self.characters[k]

    def face_monodromy(self, face: Sequence[int]) -> Character:
        """Product of the voltage along a base boundary cycle"""
        result = self.characters[0] / self.characters[0]
        for h in face:
            result = result * self.voltage[h]
        return result


def format_character(theta: Character) -> str:
    return "(" + ",".join(str(e) for e in theta.residues) + ")"


def voltage_lift(base: RibbonGraph, voltage: Sequence[Character], characters: Sequence[Character],
                 vertex_names: Optional[Sequence[str]] = None) -> VoltageLift:
    """
    Lift a base graph along a voltage on half-edges

    Raises:
        InputException: mu(tau h) is not the inverse of mu(h)
    """
    voltage = tuple(voltage)
    if len(voltage) != len(base.tau):
        raise InputException("one voltage per half-edge is required")
    for h, t in enumerate(base.tau):
        if voltage[t] != voltage[h].inverse():
            raise InputException(f"voltage on half-edges {h}, {t} is not inverse")

    chars = tuple(sorted(characters))
    index = {theta: k for k, theta in enumerate(chars)}
    n = len(chars)

    tau = [0] * (len(base.tau) * n)
    for h in base.half_edges:
        for theta in chars:
            tau[h * n + index[theta]] = base.tau[h] * n + index[theta * voltage[h]]

    rotation = []
    labels = []
    for v in base.vertices:
        for theta in chars:
            rotation.append(tuple(h * n + index[theta] for h in base.rotation[v]))
            name = vertex_names[v] if vertex_names else base.vertex_label(v)
            labels.append(f"{name}{format_character(theta)}")

    half_labels = [
        f"{base.half_edge_label(h)}{format_character(theta)}" for h in base.half_edges for theta in chars
    ]
    graph = RibbonGraph(tuple(tau), tuple(rotation), tuple(labels), tuple(half_labels))
    return VoltageLift(base=base, voltage=voltage, characters=chars, graph=graph, _index=index)
