"""
Equivariant Ext series on the B-side
"""
import pytest
from hypothesis import given, settings, strategies as st

from torichms.exceptions import InputException
from torichms.fukaya import EVEN, ODD, Generator, circle_hom_series
from torichms.mfside import (
    ExtQuery,
    RingGenerator,
    WeightedCharacterRing,
    ext_affine,
    ext_chart,
    ext_mf,
    ext_table,
    generator_set,
    unfiltered_series,
)
from torichms.toricdata import normal_form_of, structure_group


@st.composite
def queries(draw):
    r = draw(st.integers(min_value=1, max_value=4))
    m = draw(st.integers(min_value=1, max_value=3))
    s = draw(st.integers(min_value=0, max_value=r - 1))
    structure = structure_group(normal_form_of(r, m, s))
    gens = generator_set(structure)
    source = draw(st.sampled_from(gens))
    target = draw(st.sampled_from(gens))
    return structure, ExtQuery(source, target, draw(st.integers(min_value=0, max_value=9)))


class TestWeightedCharacterRing:
    def test_relation_kills_mixed_monomials(self):
        one = structure_group(normal_form_of(1, 1, 0)).group.trivial_character
        ring = WeightedCharacterRing(
            (RingGenerator('z', 1, EVEN, one), RingGenerator('v', 2, EVEN, one)),
            (('z', 'v'),),
        )
        weights = sorted(m.weight for m in ring.monomials(4, one))
        assert weights == [0, 1, 2, 2, 3, 4, 4]

    def test_unknown_relation(self):
        one = structure_group(normal_form_of(1, 1, 0)).group.trivial_character
        with pytest.raises(InputException):
            WeightedCharacterRing((RingGenerator('z', 1, EVEN, one),), (('z', 'w'),))

    def test_generator_weight_must_be_positive(self):
        one = structure_group(normal_form_of(1, 1, 0)).group.trivial_character
        with pytest.raises(InputException):
            RingGenerator('z', 0, EVEN, one)


class TestExtAffine:
    def test_trivial_group_endomorphisms(self):
        structure = structure_group(normal_form_of(1, 1, 0))
        one = structure.group.trivial_character
        series = ext_affine(structure, ExtQuery(Generator(1, one), Generator(1, one), 4))
        assert series.to_dict()['dims'][0] == [1, 1, 2, 1, 2]

    def test_trivial_group_crossing_is_odd(self):
        structure = structure_group(normal_form_of(1, 1, 0))
        one = structure.group.trivial_character
        series = ext_affine(structure, ExtQuery(Generator(1, one), Generator(2, one), 4))
        assert series.to_dict()['dims'] == [[0, 0, 0, 0, 0], [0, 1, 0, 1, 0]]

    def test_local_p2_endomorphisms(self):
        structure = structure_group(normal_form_of(3, 1, 1))
        one = structure.group.trivial_character
        series = ext_affine(structure, ExtQuery(Generator(1, one), Generator(1, one), 6))
        # z2^0, z2^3, z2^6 and v^3
        assert series.to_dict()['dims'][0] == [1, 0, 0, 1, 0, 0, 2]
        assert series.total(ODD) == 0

    def test_filter_only_removes(self):
        structure = structure_group(normal_form_of(3, 1, 1))
        gens = generator_set(structure)
        query = ExtQuery(gens[0], gens[1], 6)
        assert ext_affine(structure, query).total() <= unfiltered_series(structure, query).total()

    @given(queries())
    @settings(max_examples=60, deadline=None)
    def test_resolution_count_agrees(self, case):
        structure, query = case
        assert ext_mf(structure, query) == ext_affine(structure, query)

    def test_tables_agree(self):
        structure = structure_group(normal_form_of(2, 2, 1))
        assert ext_table(structure, 6).first_difference(ext_table(structure, 6, method='mf')) is None

    @pytest.mark.parametrize('method, compute', [('affine', ext_affine), ('mf', ext_mf)])
    def test_table_entries_match_pairwise_series(self, method, compute):
        structure = structure_group(normal_form_of(3, 2, 1))
        table = ext_table(structure, 7, method=method)
        assert len(table) == len(generator_set(structure)) ** 2
        for source, target in table.pairs():
            assert table.series(source, target) == compute(structure, ExtQuery(source, target, 7))


class TestExtChart:
    @given(st.integers(min_value=1, max_value=3), st.integers(min_value=0, max_value=8), st.data())
    @settings(max_examples=40, deadline=None)
    def test_chart_is_the_inverse_circle(self, side, truncate, data):
        structure = structure_group(normal_form_of(3, 2, 1))
        characters = list(structure.group.characters())
        theta = data.draw(st.sampled_from(characters))
        theta_prime = data.draw(st.sampled_from(characters))
        rho = structure.rho(side)
        assert ext_chart(rho, theta, theta_prime, truncate) == circle_hom_series(
            rho.inverse(), theta, theta_prime, truncate
        )

    def test_trivial_action(self):
        structure = structure_group(normal_form_of(1, 1, 0))
        one = structure.group.trivial_character
        assert ext_chart(one, one, one, 2).total() == 5
