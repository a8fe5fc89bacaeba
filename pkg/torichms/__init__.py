"""
torichms
Decategorified mirror symmetry checks for toric Calabi-Yau 3-orbifolds

Common entry points:
    from torichms import parse_fan, normal_form_of, check_affine
"""

__version__ = '0.1.0'

from torichms.toricdata import normal_form_of, normalize_cone, parse_fan, structure_group  # noqa: E402
from torichms.hmscheck import check_affine, check_global, crepant_compare  # noqa: E402

__all__ = [
    '__version__',
    'parse_fan',
    'normalize_cone',
    'normal_form_of',
    'structure_group',
    'check_affine',
    'check_global',
    'crepant_compare',
]
