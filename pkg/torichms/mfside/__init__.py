"""
B-side: equivariant Ext series of the matrix-factorization generators
"""
from torichms.mfside.rings import Monomial, RingGenerator, WeightedCharacterRing
from torichms.mfside.ext import (
    V_WEIGHT,
    ExtQuery,
    answer_ring,
    ext_affine,
    ext_chart,
    ext_mf,
    ext_table,
    generator_set,
    unfiltered_series,
)

__all__ = [
    'Monomial',
    'RingGenerator',
    'WeightedCharacterRing',
    'V_WEIGHT',
    'ExtQuery',
    'answer_ring',
    'ext_affine',
    'ext_chart',
    'ext_mf',
    'ext_table',
    'generator_set',
    'unfiltered_series',
]
