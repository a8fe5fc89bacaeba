"""
Graphviz DOT rendering of ribbon graphs

Nodes and edges come out in increasing id order; the cyclic order at each
vertex is written as a comment next to its node.
"""
from typing import Dict, List, Optional

from torichms.ribbon.graph import RibbonGraph
from torichms.ribbon.gluing import GlobalSkeleton


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(graph: RibbonGraph, name: str = 'ribbon', edge_attributes: Optional[Dict[int, str]] = None) -> str:
    """
    Render a ribbon graph; legs end in point-shaped nodes leg<h>

    edge_attributes maps the smaller half-edge id of an edge to extra
    attributes such as 'color=red'.
    """
    edge_attributes = edge_attributes or {}
    lines: List[str] = [f"graph {_quote(name)} {{"]
    for v in graph.vertices:
        rotation = ' '.join(graph.half_edge_label(h) for h in graph.rotation[v])
        lines.append(f"  v{v} [label={_quote(graph.vertex_label(v))}];  // rotation: {rotation}")
    for h, t in graph.edges():
        extra = edge_attributes.get(h)
        tail = f"v{graph.vertex_of[h]}"
        if h == t:
            lines.append(f"  leg{h} [shape=point];")
            head = f"leg{h}"
        else:
            head = f"v{graph.vertex_of[t]}"
        attrs = f"label={_quote(graph.half_edge_label(h))}"
        if extra:
            attrs += f", {extra}"
        lines.append(f"  {tail} -- {head} [{attrs}];")
    lines.append("}")
    return '\n'.join(lines) + '\n'


def skeleton_to_dot(skeleton: GlobalSkeleton, name: str = 'skeleton') -> str:
    """Glued skeleton with the edges re-paired at gluing sites drawn red"""
    union = skeleton.graph
    base_tau = [0] * len(union.tau)
    for piece in skeleton.pieces:
        for h, t in enumerate(piece.lift.graph.tau):
            base_tau[h + piece.half_edge_offset] = t + piece.half_edge_offset
    glued = {
        min(h, union.tau[h]): 'color=red'
        for h in union.half_edges
        if union.tau[h] != base_tau[h]
    }
    return to_dot(union, name, glued)
