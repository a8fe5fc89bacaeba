"""
Mirror curve topology: Hurwitz and Pick counts, monodromy, gluing
"""
from torichms.curvetop.pick import PickCounts, pick_counts
from torichms.curvetop.affine import AffineCurveModel, affine_curve, curve_equation, newton_polygon
from torichms.curvetop.monodromy import MonodromyData, monodromy
from torichms.curvetop.glue import (
    CircleLabeling,
    EdgeIdentification,
    GlobalCurveModel,
    cone_models,
    glue_curve,
    puncture_type,
)

__all__ = [
    'PickCounts',
    'pick_counts',
    'AffineCurveModel',
    'affine_curve',
    'curve_equation',
    'newton_polygon',
    'MonodromyData',
    'monodromy',
    'CircleLabeling',
    'EdgeIdentification',
    'GlobalCurveModel',
    'cone_models',
    'glue_curve',
    'puncture_type',
]
