"""
Graded series, wheel path counts and the affine A-side tables
"""
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from torichms.exceptions import InputException, TruncationException
from torichms.fukaya import (
    EVEN,
    ODD,
    Arrow,
    Generator,
    GradedSeries,
    HomTable,
    PathWord,
    Quiver,
    affine_hom_table,
    alternating,
    circle_hom_series,
    concatenate,
    enumerate_words,
    letter_character,
    loop_series,
    mu_n_series,
    weighted_p1_series,
    wheel_hom_series,
    wheel_quiver,
    wheel_twist,
    wheel_twist_degree,
)
from torichms.mfside import ext_table
from torichms.ribbon import affine_skeleton, make_wheel
from torichms.toricdata import normal_form_of, structure_group


class TestGradedSeries:
    def test_documented_example(self):
        series = GradedSeries.from_counts(4, {(0, 0): 1, (0, 2): 1})
        assert series.dim(EVEN, 2) == 1
        assert series.to_dict() == {'truncate': 4, 'min_weight': 0, 'dims': [[1, 0, 1, 0, 0], [0, 0, 0, 0, 0]]}

    def test_entries_outside_the_window_are_dropped(self):
        series = GradedSeries.from_counts(2, {(0, 3): 5, (1, -1): 2, (1, 1): 1})
        assert series.entries == (((1, 1), 1),)

    def test_laurent_window(self):
        series = GradedSeries.from_counts(2, {(0, -2): 1, (0, 2): 1}, laurent=True)
        assert series.is_laurent
        assert list(series.weights) == [-2, -1, 0, 1, 2]
        assert series.total() == 2

    def test_first_difference(self):
        left = GradedSeries.from_counts(4, {(0, 1): 1})
        assert left.first_difference(GradedSeries.zero(4)) == {'parity': 'even', 'weight': 1, 'left': 1, 'right': 0}
        assert left.agrees_with(GradedSeries.from_counts(4, {(0, 1): 1}))

    def test_add(self):
        a = GradedSeries.from_counts(3, {(0, 1): 1})
        b = GradedSeries.from_counts(3, {(0, 1): 2, (1, 3): 1})
        assert (a + b).as_mapping() == {(0, 1): 3, (1, 3): 1}
        with pytest.raises(InputException):
            a + GradedSeries.zero(4)

    def test_truncated(self):
        series = GradedSeries.from_counts(5, {(0, 1): 1, (0, 5): 1})
        assert series.truncated(3).total() == 1
        with pytest.raises(InputException):
            series.truncated(6)

    def test_negative_truncation(self):
        with pytest.raises(TruncationException):
            GradedSeries.zero(-1)

    def test_bad_entries(self):
        with pytest.raises(InputException):
            GradedSeries.from_counts(3, {(2, 0): 1})
        with pytest.raises(InputException):
            GradedSeries.from_counts(3, {(0, 0): -1})


class TestOracles:
    def test_weighted_line(self):
        assert weighted_p1_series(1, 2, 0, 2, 5).total() == 2

    def test_weighted_line_twists_must_match(self):
        with pytest.raises(InputException):
            weighted_p1_series(1, 2, 0, (1, 0), 5)

    def test_mu_n(self):
        series = mu_n_series(2, 0, 0, 4)
        assert series.dim(EVEN, 2) == 1
        assert series.dim(EVEN, 1) == 0

    def test_circle(self):
        structure = structure_group(normal_form_of(3, 1, 1))
        t = structure.group.trivial_character
        dims = circle_hom_series(structure.rho1, t, t, 6).to_dict()['dims'][0]
        assert dims == [1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1]


class TestWheelQuiver:
    def test_single_up_and_down(self):
        assert wheel_quiver(make_wheel(1, 1)).arrows == (Arrow('s0', 0, 1), Arrow('s1', 0, 1))

    def test_two_up_two_down(self):
        series = wheel_hom_series(make_wheel(2, 2), 2, 0, 4)
        assert series.dim(EVEN, 2) == 2
        assert series.total() == 2

    def test_bare_circle_is_laurent(self):
        series = wheel_hom_series(make_wheel(0, 0), 0, 0, 3)
        assert series.is_laurent
        assert series.total() == 7
        with pytest.raises(InputException):
            wheel_hom_series(make_wheel(0, 0), 1, 0, 3)

    def test_relations(self):
        quiver = Quiver((0,), (Arrow('a', 0, 0), Arrow('b', 0, 0)), (('a', 'b'),))
        # words of length 2 avoiding ab: aa, ba, bb
        assert quiver.path_counts(0, 0, 2) == [1, 2, 3]
        with pytest.raises(InputException):
            Quiver((0,), (Arrow('a', 0, 1),))

    @given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=5), st.data())
    @settings(max_examples=40, deadline=None)
    def test_paths_match_weighted_line(self, p, q, data):
        n = p + q
        i = data.draw(st.integers(min_value=0, max_value=n - 1))
        j = data.draw(st.integers(min_value=0, max_value=n - 1))
        expected = weighted_p1_series(p, q, wheel_twist(p, q, j), wheel_twist(p, q, i), 30)
        assert wheel_hom_series(make_wheel(p, q), i, j, 30) == expected

    @pytest.mark.parametrize('p', range(1, 6))
    @pytest.mark.parametrize('q', range(1, 6))
    def test_every_small_wheel_matches_weighted_line(self, p, q):
        wheel = make_wheel(p, q)
        for i, j in product(range(p + q), repeat=2):
            expected = weighted_p1_series(p, q, wheel_twist(p, q, j), wheel_twist(p, q, i), 30)
            assert wheel_hom_series(wheel, i, j, 30) == expected, (i, j)

    @pytest.mark.parametrize('n', range(1, 9))
    def test_all_up_wheel_matches_mu_n(self, n):
        for i, j in product(range(n), repeat=2):
            assert wheel_hom_series(make_wheel(n, 0), i, j, 40) == mu_n_series(n, i, j, 40), (i, j)

    def test_integer_grading_for_coprime_weights(self):
        wheel = make_wheel(2, 1)
        for i in range(3):
            for j in range(3):
                expected = weighted_p1_series(2, 1, wheel_twist_degree(2, 1, j), wheel_twist_degree(2, 1, i), 8)
                assert wheel_hom_series(wheel, i, j, 8) == expected

    def test_twist_out_of_range(self):
        with pytest.raises(InputException):
            wheel_twist(1, 1, 2)


class TestWords:
    def test_alternating(self):
        word = alternating(1, 3)
        assert word.letters == ('u1', 'u2', 'u1')
        assert word.end == 2
        assert word.parity == ODD

    def test_enumerate_same_circle(self):
        words = list(enumerate_words(1, 1, 4))
        # l1^0..l1^4 and crossing strings of length 2 and 4
        assert len(words) == 7
        assert all(w.is_admissible for w in words)

    def test_enumerate_across(self):
        assert [w.weight for w in enumerate_words(2, 1, 5)] == [1, 3, 5]

    def test_concatenate(self):
        assert concatenate(PathWord(1, 1, ('l1',)), alternating(1, 1)) is None
        assert concatenate(alternating(1, 1), alternating(2, 1)).letters == ('u1', 'u2')
        with pytest.raises(InputException):
            concatenate(alternating(1, 1), alternating(1, 1))

    def test_word_must_follow_circles(self):
        with pytest.raises(InputException):
            PathWord(1, 1, ('u1',))
        with pytest.raises(InputException):
            PathWord(1, 1, ('l2',))

    def test_monodromy(self):
        structure = structure_group(normal_form_of(3, 1, 1))
        assert letter_character('u2', structure) == structure.rho3
        assert alternating(1, 2).monodromy(structure) == structure.rho3
        with pytest.raises(InputException):
            letter_character('x', structure)


class TestAffineTable:
    def test_loop_powers_survive_every_third_step(self):
        skeleton = affine_skeleton(normal_form_of(3, 1, 1))
        generator = Generator(1, skeleton.base_label)
        dims = loop_series(skeleton, generator, 6).to_dict()['dims'][0]
        assert dims == [1, 0, 0, 1, 0, 0, 1]

    def test_table_covers_every_pair(self):
        skeleton = affine_skeleton(normal_form_of(2, 2, 1))
        table = affine_hom_table(skeleton, 5)
        assert len(table) == (2 * 4) ** 2

    @pytest.mark.parametrize('rms', [(1, 1, 0), (2, 1, 0), (3, 1, 1), (2, 2, 1), (3, 2, 1)])
    def test_matches_b_side(self, rms):
        nf = normal_form_of(*rms)
        table = affine_hom_table(affine_skeleton(nf), 8)
        assert table.first_difference(ext_table(structure_group(nf), 8)) is None

    def test_missing_pair(self):
        structure = structure_group(normal_form_of(1, 1, 0))
        one = structure.group.trivial_character
        table = HomTable(3, {})
        with pytest.raises(InputException):
            table.series(Generator(1, one), Generator(2, one))

    def test_generator_side(self):
        one = structure_group(normal_form_of(1, 1, 0)).group.trivial_character
        with pytest.raises(InputException):
            Generator(3, one)
