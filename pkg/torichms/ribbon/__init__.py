"""
Ribbon graphs, wheels and the skeleta of mirror curves
"""
from torichms.ribbon.graph import RibbonGraph, VoltageLift, format_character, voltage_lift
from torichms.ribbon.wheel import DOWN, UP, Wheel, make_wheel, wheel_signature, wheel_type
from torichms.ribbon.predicates import Subgraph, SubgraphPredicates, subgraph_predicates
from torichms.ribbon.skeleton import (
    BaseSkeleton,
    LabeledSkeleton,
    OpenCover,
    affine_skeleton,
    dumbbell,
    lift_base,
    open_cover,
    theta,
)
from torichms.ribbon.gluing import (
    CircleWalk,
    ConePiece,
    GlobalSkeleton,
    GluingSite,
    Placement,
    choose_placement,
    glue_skeletons,
)
from torichms.ribbon.dot import skeleton_to_dot, to_dot

__all__ = [
    'RibbonGraph',
    'VoltageLift',
    'format_character',
    'voltage_lift',
    'UP',
    'DOWN',
    'Wheel',
    'make_wheel',
    'wheel_signature',
    'wheel_type',
    'Subgraph',
    'SubgraphPredicates',
    'subgraph_predicates',
    'BaseSkeleton',
    'LabeledSkeleton',
    'OpenCover',
    'affine_skeleton',
    'dumbbell',
    'lift_base',
    'open_cover',
    'theta',
    'CircleWalk',
    'ConePiece',
    'GlobalSkeleton',
    'GluingSite',
    'Placement',
    'choose_placement',
    'glue_skeletons',
    'skeleton_to_dot',
    'to_dot',
]
