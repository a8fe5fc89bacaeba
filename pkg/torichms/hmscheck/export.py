"""
DOT exports of the glued skeleton, the dual graph and the descent diagram
"""
from typing import List, Optional

from torichms.defaults import EXPORT_TARGETS
from torichms.exceptions import InputException
from torichms.hmscheck.descent import DescentDiagram, build_descent
from torichms.ribbon.dot import skeleton_to_dot
from torichms.ribbon.gluing import glue_skeletons
from torichms.toricdata.fan import StackyFan


def dual_graph_dot(fan: StackyFan, name: str = 'dual') -> str:
    """Cones as nodes joined across interior edges; boundary edges end in points"""
    lines: List[str] = [f'graph "{name}" {{']
    for t, tri in enumerate(fan.triangles):
        rays = ','.join(str(i) for i in tri)
        lines.append(f'  c{t} [label="cone {t} ({rays})"];')
    for edge in fan.edges:
        if edge.is_interior:
            a, b = edge.cones
            lines.append(f'  c{a} -- c{b} [label="{edge.key()}"];')
        else:
            lines.append(f'  b{edge.key().replace("-", "_")} [shape=point];')
            lines.append(f'  c{edge.cones[0]} -- b{edge.key().replace("-", "_")} [label="{edge.key()}", style=dashed];')
    lines.append("}")
    return '\n'.join(lines) + '\n'


def descent_dot(diagram: DescentDiagram, name: str = 'descent') -> str:
    """Restriction arrows cone -> edge labelled with puncture type and family"""
    lines: List[str] = [f'digraph "{name}" {{']
    for entry in diagram.cones:
        lines.append(f'  c{entry.cone} [shape=box, label="cone {entry.cone} rms={list(entry.normal_form.key)}"];')
    for entry in diagram.edges:
        node = f"e{entry.edge.i}_{entry.edge.j}"
        style = '' if entry.edge.is_interior else ', style=dashed'
        lines.append(f'  {node} [label="edge {entry.edge.key()} |labels|={len(entry.labels)}"{style}];')
    for (_, _), arrow in sorted(diagram.restrictions.items()):
        node = f"e{arrow.edge.i}_{arrow.edge.j}"
        lines.append(f'  c{arrow.cone} -> {node} [label="type {arrow.puncture_type}, family {arrow.family}"];')
    lines.append("}")
    return '\n'.join(lines) + '\n'


def export_dot(fan: StackyFan, target: str, placement: Optional[str] = None, truncate: int = 0) -> str:
    """
    Raises:
        InputException: unknown target
        PlacementException: the placement cannot expose every interior circle
    """
    if target == 'skeleton':
        return skeleton_to_dot(glue_skeletons(fan, placement))
    if target == 'dual':
        return dual_graph_dot(fan)
    if target == 'descent':
        return descent_dot(build_descent(fan, truncate))
    raise InputException(f"unknown export target '{target}', expected one of {', '.join(EXPORT_TARGETS)}")
