"""
A-side: quivers of wheels, dumbbell words and Hom series on labeled skeleta
"""
from torichms.fukaya.series import EVEN, ODD, PARITY_NAMES, GradedSeries, check_truncation
from torichms.fukaya.quiver import Arrow, Quiver, wheel_hom_series, wheel_quiver, wheel_twist, wheel_twist_degree
from torichms.fukaya.weighted import mu_n_series, weighted_p1_series
from torichms.fukaya.words import PathWord, alternating, concatenate, enumerate_words, identity, letter_character
from torichms.fukaya.hom_table import Generator, HomTable
from torichms.fukaya.affine import affine_hom_series, affine_hom_table, generators, loop_series
from torichms.fukaya.circle import circle_hom_series

__all__ = [
    'EVEN',
    'ODD',
    'PARITY_NAMES',
    'GradedSeries',
    'check_truncation',
    'Arrow',
    'Quiver',
    'wheel_hom_series',
    'wheel_quiver',
    'wheel_twist',
    'wheel_twist_degree',
    'mu_n_series',
    'weighted_p1_series',
    'PathWord',
    'alternating',
    'concatenate',
    'enumerate_words',
    'identity',
    'letter_character',
    'Generator',
    'HomTable',
    'affine_hom_series',
    'affine_hom_table',
    'generators',
    'loop_series',
    'circle_hom_series',
]
