"""
Fans, normal forms, the orbifold group and Picard cokernels
"""
from functools import reduce

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from torichms.exceptions import DegenerateConeException, FanValidationException, InputException
from torichms.toricdata import (
    LatticePoint,
    convex_hull,
    normal_form_of,
    normalize_cone,
    parse_fan,
    sequence_data,
    smith_normal_form,
    stacky_picard,
    structure_group,
    verify_smith_form,
)


@st.composite
def normal_forms(draw, max_r: int = 8, max_m: int = 8):
    r = draw(st.integers(min_value=1, max_value=max_r))
    m = draw(st.integers(min_value=1, max_value=max_m))
    s = draw(st.integers(min_value=0, max_value=r - 1))
    return normal_form_of(r, m, s)


ALL_FORMS = [(r, m, s) for r in range(1, 9) for m in range(1, 9) for s in range(r)]

IDENTITY = ((1, 0), (0, 1))
# generate GL_2(Z): rotation, shear, reflection, lower shear
UNIMODULAR = [((0, -1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1)), ((1, 0), (1, 1))]


def _compose(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


unimodular_maps = st.lists(st.sampled_from(UNIMODULAR), max_size=8).map(
    lambda gens: reduce(_compose, gens, IDENTITY)
)
translations = st.tuples(st.integers(min_value=-5, max_value=5), st.integers(min_value=-5, max_value=5))


int_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
)


square_matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


class TestSmithNormalForm:
    def test_documented_example(self):
        assert smith_normal_form([[3, -1], [0, 1]]).diagonal == (1, 3)

    @given(int_matrices)
    @settings(max_examples=60, deadline=None)
    def test_relation_and_divisibility(self, rows):
        form = smith_normal_form(rows)
        assert verify_smith_form(rows, form)

    @given(square_matrices)
    @settings(max_examples=60, deadline=None)
    def test_invariant_factors_match_sympy(self, rows):
        theirs = sympy_snf(Matrix(rows), domain=ZZ)
        expected = sorted(abs(int(theirs[i, i])) for i in range(min(theirs.shape)) if theirs[i, i] != 0)
        assert sorted(smith_normal_form(rows).invariant_factors) == expected


class TestLattice:
    def test_hull_drops_collinear_points(self):
        points = [LatticePoint(x, y) for x, y in [(0, 0), (1, 0), (2, 0), (0, 2), (1, 1)]]
        assert convex_hull(points) == [LatticePoint(0, 0), LatticePoint(2, 0), LatticePoint(0, 2)]

    def test_point_of_ray(self):
        assert LatticePoint.of((2, -1, 1)) == LatticePoint(2, -1)

    def test_difference_is_a_vector(self):
        assert LatticePoint(3, 1) - LatticePoint(1, 2) == (2, -1)


class TestConeNormalForm:
    def test_local_p2(self):
        assert normalize_cone((-1, -1, 1), (1, 0, 1), (0, 1, 1)).key == (3, 1, 1)

    def test_rotation_invariant(self):
        a = normalize_cone((0, 0, 1), (2, 0, 1), (2, 1, 1))
        b = normalize_cone((2, 1, 1), (0, 0, 1), (2, 0, 1))
        assert a.key == b.key == (1, 2, 0)

    def test_degenerate(self):
        with pytest.raises(DegenerateConeException):
            normalize_cone((0, 0, 1), (1, 1, 1), (2, 2, 1))

    def test_literal_form_is_validated(self):
        with pytest.raises(DegenerateConeException):
            normal_form_of(3, 1, 3)

    def test_moment_triangle(self):
        nf = normal_form_of(3, 1, 1)
        assert nf.moment_triangle() == (LatticePoint(0, 0), LatticePoint(0, 1), LatticePoint(3, -1))
        assert nf.order == 3

    @given(normal_forms())
    @settings(max_examples=40, deadline=None)
    def test_normalizing_the_rays_keeps_the_order(self, nf):
        again = normalize_cone(*nf.rays())
        assert again.order == nf.order
        assert again.key <= nf.key

    @given(normal_forms(), unimodular_maps, translations)
    @settings(max_examples=80, deadline=None)
    def test_invariant_under_unimodular_maps(self, nf, matrix, shift):
        def move(ray):
            x, y, _ = ray
            return (
                matrix[0][0] * x + matrix[0][1] * y + shift[0],
                matrix[1][0] * x + matrix[1][1] * y + shift[1],
                1,
            )

        moved = [move(ray) for ray in nf.rays()]
        assert normalize_cone(*moved).key == normalize_cone(*nf.rays()).key


class TestStructureGroup:
    def test_cyclic_z3(self):
        sg = structure_group(normal_form_of(3, 1, 1))
        assert sg.group.order == 3
        assert sg.group.factors == (3,)
        assert all(rho.order == 3 for rho in sg.rhos)

    def test_trivial_group(self):
        sg = structure_group(normal_form_of(1, 1, 0))
        assert sg.group.order == 1
        assert sg.rho1.is_trivial and sg.rho2.is_trivial and sg.rho3.is_trivial
        assert list(sg.group.characters()) == [sg.group.trivial_character]

    def test_non_cyclic(self):
        # r = m = 2, s = 0: Z/2 x Z/2
        sg = structure_group(normal_form_of(2, 2, 0))
        assert sg.group.factors == (2, 2)

    @given(normal_forms())
    @settings(max_examples=50, deadline=None)
    def test_group_laws(self, nf):
        sg = structure_group(nf)
        assert sg.group.order == nf.r * nf.m
        assert (sg.rho1 * sg.rho2 * sg.rho3).is_trivial
        assert len(sg.eta_bijection()) == sg.group.order

    @given(normal_forms())
    @settings(max_examples=50, deadline=None)
    def test_sequence_data_matches_kernels(self, nf):
        sg = structure_group(nf)
        for i, pair in enumerate(sequence_data(nf), start=1):
            rho = sg.rho(i)
            assert sg.group.kernel_size(rho) == pair.m
            assert rho.order == pair.r
            assert pair.m * pair.r == nf.order

    @pytest.mark.parametrize('rms', ALL_FORMS, ids=lambda rms: '-'.join(map(str, rms)))
    def test_group_laws_for_every_small_form(self, rms):
        nf = normal_form_of(*rms)
        sg = structure_group(nf)
        assert sg.group.order == nf.order
        assert (sg.rho1 * sg.rho2 * sg.rho3).is_trivial
        assert len(sg.eta_bijection()) == nf.order
        for i, pair in enumerate(sequence_data(nf), start=1):
            assert (sg.group.kernel_size(sg.rho(i)), sg.rho(i).order) == (pair.m, pair.r)

    @given(normal_forms())
    @settings(max_examples=30, deadline=None)
    def test_invariant_factors_match_sympy(self, nf):
        E = Matrix([[nf.r, 0, 0], [-nf.s, nf.m, 0], [1, 1, 1]])
        theirs = sympy_snf(E, domain=ZZ)
        expected = sorted(abs(int(theirs[i, i])) for i in range(3) if abs(int(theirs[i, i])) > 1)
        assert sorted(structure_group(nf).group.factors) == expected

    def test_characters_from_other_groups_do_not_mix(self):
        a = structure_group(normal_form_of(3, 1, 1)).rho1
        b = structure_group(normal_form_of(2, 1, 1)).rho1
        with pytest.raises(InputException):
            a * b

    def test_monomial_characters(self):
        sg = structure_group(normal_form_of(3, 2, 1))
        assert sg.group.character_from_monomial((1, 0, 0)) == sg.rho1
        assert sg.group.character_from_monomial((0, 2, 1)) == sg.rho2 ** 2 * sg.rho3
        assert sg.group.character_from_monomial((1, 1, 1)).is_trivial

    def test_orbits_partition_characters(self):
        sg = structure_group(normal_form_of(2, 2, 1))
        orbits = sg.group.orbits(sg.rho1)
        members = [theta for orbit in orbits for theta in orbit]
        assert sorted(members) == sorted(sg.group.characters())
        assert all(len(orbit) == sg.rho1.order for orbit in orbits)


class TestFanParsing:
    def test_square(self, square):
        assert len(square.triangles) == 2
        assert [e.key() for e in square.interior_edges()] == ['0-2']
        assert len(square.boundary_edges()) == 4
        assert square.dual_graph == ((0, 1),)
        assert square.adjacent_cones(square.interior_edges()[0]) == (0, 1)

    def test_missing_field(self):
        with pytest.raises(FanValidationException) as excinfo:
            parse_fan({'points': [[0, 0]]})
        assert excinfo.value.has_error('triangles')

    def test_degenerate_triangle(self):
        with pytest.raises(FanValidationException) as excinfo:
            parse_fan({'points': [[0, 0], [1, 1], [2, 2]], 'triangles': [[0, 1, 2]]})
        assert excinfo.value.has_error('triangles[0]')

    def test_non_convex_union(self):
        document = {'points': [[0, 0], [3, 0], [1, 1], [0, 3]], 'triangles': [[0, 1, 2], [0, 2, 3]]}
        with pytest.raises(FanValidationException) as excinfo:
            parse_fan(document)
        assert excinfo.value.has_error('triangles')

    def test_invalid_json_text(self):
        with pytest.raises(InputException):
            parse_fan('{not json')

    def test_polygon_and_cone_rays(self, kp2_fine):
        assert kp2_fine.polygon() == [LatticePoint(-1, -1), LatticePoint(1, 0), LatticePoint(0, 1)]
        assert len(kp2_fine.hull_edges()) == 3
        assert kp2_fine.cone_rays(0) == ((-1, -1, 1), (1, 0, 1), (0, 0, 1))

    def test_unused_points_are_ignored(self):
        fan = parse_fan({'points': [[0, 0], [1, 0], [0, 1], [5, 5]], 'triangles': [[0, 1, 2]]})
        assert fan.unused_indices == (3,)
        assert len(fan.polygon()) == 3

    def test_round_trip_document(self, kp2_fine):
        assert parse_fan(kp2_fine.to_document()) == kp2_fine


class TestPicard:
    def test_cone_model_is_the_character_group(self, kp2_coarse):
        model = stacky_picard(kp2_coarse, 0)
        assert model.is_finite
        assert model.order == 3
        for theta in model.structure.group.characters():
            assert model.to_character(model.from_character(theta)) == theta

    def test_edge_model_projection(self, square):
        edge = square.interior_edges()[0]
        cone = stacky_picard(square, 0)
        edge_model = stacky_picard(square, edge)
        images = {cone.project(x, edge_model) for x in cone.elements()}
        assert images == set(edge_model.elements())

    def test_whole_fan_has_free_part(self, kp2_fine):
        whole = stacky_picard(kp2_fine)
        assert whole.free_rank == 1
        assert not whole.is_finite
        with pytest.raises(InputException):
            list(whole.elements())

    def test_unknown_subset(self, square):
        with pytest.raises(InputException):
            stacky_picard(square, 7)
