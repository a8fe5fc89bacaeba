"""
Toric input data: fans, cone normal forms, the orbifold group and
stacky Picard cokernel models
"""
from torichms.toricdata.lattice import LatticePoint, convex_hull
from torichms.toricdata.smith import SmithForm, smith_normal_form, verify_smith_form
from torichms.toricdata.fan import FanEdge, StackyFan, load_fan, parse_fan
from torichms.toricdata.cone import ConeNormalForm, normal_form_of, normalize_cone
from torichms.toricdata.group import (
    Character,
    FiniteAbelianGroup,
    GroupElement,
    SequencePair,
    StructureGroup,
    sequence_data,
    structure_group,
)
from torichms.toricdata.picard import CokernelModel, PicardClass, stacky_picard

__all__ = [
    'LatticePoint',
    'convex_hull',
    'SmithForm',
    'smith_normal_form',
    'verify_smith_form',
    'FanEdge',
    'StackyFan',
    'load_fan',
    'parse_fan',
    'ConeNormalForm',
    'normal_form_of',
    'normalize_cone',
    'Character',
    'FiniteAbelianGroup',
    'GroupElement',
    'SequencePair',
    'StructureGroup',
    'sequence_data',
    'structure_group',
    'CokernelModel',
    'PicardClass',
    'stacky_picard',
]
