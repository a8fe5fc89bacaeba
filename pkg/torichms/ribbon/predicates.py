"""
Open and closed subgraphs

A subgraph is a set of vertices together with a set of half-edges. It is
open when every vertex it contains brings all of its half-edges along, and
closed when its complement is open. A closed subgraph is good when no
vertex of its complement has exactly one half-edge left in the complement.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, NamedTuple

from torichms.exceptions import SubgraphException
from torichms.ribbon.graph import RibbonGraph


@dataclass(frozen=True)
class Subgraph:
    vertices: FrozenSet[int]
    half_edges: FrozenSet[int]

    @classmethod
    def of(cls, vertices: Iterable[int] = (), half_edges: Iterable[int] = ()) -> 'Subgraph':
        return cls(frozenset(vertices), frozenset(half_edges))

    @classmethod
    def star(cls, graph: RibbonGraph, vertices: Iterable[int]) -> 'Subgraph':
        """Vertices with every half-edge attached to them"""
        chosen = frozenset(vertices)
        return cls(chosen, frozenset(h for v in chosen for h in graph.rotation[v]))

    def complement(self, graph: RibbonGraph) -> 'Subgraph':
        return Subgraph(
            frozenset(graph.vertices) - self.vertices,
            frozenset(graph.half_edges) - self.half_edges,
        )


class SubgraphPredicates(NamedTuple):
    is_open: bool
    is_closed: bool
    is_good_open: bool
    is_good_closed: bool


def _check_contained(graph: RibbonGraph, sub: Subgraph) -> None:
    stray_vertices = sorted(v for v in sub.vertices if v not in graph.vertices)
    stray_half_edges = sorted(h for h in sub.half_edges if h not in graph.half_edges)
    if stray_vertices or stray_half_edges:
        raise SubgraphException(
            f"not a subgraph: vertices {stray_vertices}, half-edges {stray_half_edges} are not in the graph"
        )


def _is_open(graph: RibbonGraph, sub: Subgraph) -> bool:
    return all(h in sub.half_edges for v in sub.vertices for h in graph.rotation[v])


def _has_univalent_vertex(graph: RibbonGraph, sub: Subgraph) -> bool:
    return any(
        sum(1 for h in graph.rotation[v] if h in sub.half_edges) == 1
        for v in sub.vertices
    )


def subgraph_predicates(graph: RibbonGraph, sub: Subgraph) -> SubgraphPredicates:
    """
    Openness and goodness of sub inside graph

    Raises:
        SubgraphException: sub names vertices or half-edges the graph lacks
    """
    _check_contained(graph, sub)
    rest = sub.complement(graph)

    is_open = _is_open(graph, sub)
    is_closed = _is_open(graph, rest)
    return SubgraphPredicates(
        is_open=is_open,
        is_closed=is_closed,
        is_good_open=is_open and not _has_univalent_vertex(graph, rest),
        is_good_closed=is_closed and not _has_univalent_vertex(graph, rest),
    )
