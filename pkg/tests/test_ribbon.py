"""
Ribbon graphs, wheels, subgraph predicates, skeleta and gluing
"""
import pytest
from hypothesis import given, settings, strategies as st

from torichms.curvetop import glue_curve
from torichms.exceptions import InputException, PlacementException, SubgraphException
from torichms.ribbon import (
    DOWN,
    UP,
    RibbonGraph,
    Subgraph,
    affine_skeleton,
    choose_placement,
    dumbbell,
    glue_skeletons,
    make_wheel,
    open_cover,
    skeleton_to_dot,
    subgraph_predicates,
    theta,
    to_dot,
    voltage_lift,
    wheel_signature,
    wheel_type,
)
from torichms.support import Config
from torichms.toricdata import normal_form_of, parse_fan, structure_group

# a big triangle cut into four; the middle cone has three interior edges
FOUR_TRIANGLES = {
    'points': [[0, 0], [2, 0], [0, 2], [1, 0], [1, 1], [0, 1]],
    'triangles': [[0, 3, 5], [3, 1, 4], [5, 4, 2], [3, 4, 5]],
}


class TestRibbonGraph:
    def test_tau_must_be_an_involution(self):
        with pytest.raises(InputException):
            RibbonGraph((1, 2, 0), ((0, 1, 2),))

    def test_rotation_must_partition(self):
        with pytest.raises(InputException):
            RibbonGraph((1, 0), ((0,),))

    def test_dumbbell_faces(self):
        base = dumbbell(structure_group(normal_form_of(1, 1, 0))).graph
        assert base.faces() == [(0, 2, 4, 3), (1,), (5,)]
        assert base.euler_characteristic() == -1
        assert base.genus() == 0

    def test_theta_faces(self):
        base = theta(structure_group(normal_form_of(1, 1, 0))).graph
        assert base.faces() == [(0, 3), (1, 5), (2, 4)]

    def test_voltage_must_be_inverse_across_edges(self):
        structure = structure_group(normal_form_of(3, 1, 1))
        one = structure.group.trivial_character
        base = make_wheel(0, 0).graph
        with pytest.raises(InputException):
            voltage_lift(base, (structure.rho1, structure.rho1), list(structure.group.characters()))
        lift = voltage_lift(base, (structure.rho1, structure.rho1.inverse()), list(structure.group.characters()))
        assert lift.degree == 3
        assert len(lift.graph.faces()) == 2
        assert lift.face_monodromy((0,)) == structure.rho1
        assert lift.face_monodromy(()) == one

    def test_induced_turns_cut_edges_into_legs(self):
        graph = make_wheel(3, 0).graph
        induced, _ = graph.induced([0])
        assert len(induced.legs()) == 3


class TestWheels:
    def test_euler_characteristic(self):
        assert make_wheel(2, 3).graph.euler_characteristic() == -5

    def test_bare_circle(self):
        wheel = make_wheel(0, 0)
        assert wheel.is_bare_circle
        assert wheel_type(wheel.graph) == (0, 0)

    def test_signature(self):
        graph = make_wheel(2, 1).graph
        assert wheel_signature(graph, 0, 1) == (UP, UP, DOWN)

    def test_reading_backwards_swaps_counts(self):
        assert wheel_type(make_wheel(2, 3).graph) == (3, 2)
        assert wheel_type(make_wheel(3, 1).graph) == (3, 1)

    @given(st.integers(min_value=1, max_value=6))
    @settings(max_examples=10, deadline=None)
    def test_all_up_wheels(self, n):
        assert wheel_type(make_wheel(n, 0).graph) == (n, 0)

    def test_rejects_bad_arrangement(self):
        with pytest.raises(InputException):
            make_wheel(1, 1, (UP, UP))

    def test_capped_graph_is_not_a_wheel(self):
        assert wheel_type(make_wheel(2, 0).graph.cap_external_edges()) is None


class TestSubgraphPredicates:
    def test_central_circle_is_good_closed(self):
        graph = make_wheel(3, 0).graph
        circle = Subgraph.of(graph.vertices, [h for h in graph.half_edges if h % 3 != 2])
        result = subgraph_predicates(graph, circle)
        assert result.is_closed and result.is_good_closed
        assert not result.is_open

    def test_capped_vertex_is_closed_but_not_good(self):
        capped = make_wheel(1, 0).graph.cap_external_edges()
        result = subgraph_predicates(capped, Subgraph.star(capped, [0]))
        assert result.is_open and result.is_closed
        assert not result.is_good_open and not result.is_good_closed

    def test_whole_graph(self):
        graph = make_wheel(2, 1).graph
        result = subgraph_predicates(graph, Subgraph.star(graph, graph.vertices))
        assert result == (True, True, True, True)

    def test_foreign_ids(self):
        with pytest.raises(SubgraphException):
            subgraph_predicates(make_wheel(1, 0).graph, Subgraph.of([5]))


class TestAffineSkeleton:
    def test_local_p2(self):
        skeleton = affine_skeleton(normal_form_of(3, 1, 1))
        assert skeleton.euler_characteristic() == -3
        assert [len(c) for c in skeleton.circles1] == [3]
        assert [len(c) for c in skeleton.circles2] == [3]
        assert len(skeleton.segments()) == 3

    def test_open_cover(self):
        cover = open_cover(affine_skeleton(normal_form_of(2, 2, 1)))
        assert cover.wheels1 == ((2, 0), (2, 0))
        assert cover.wheels3 == ((4, 0),)

    @pytest.mark.parametrize('rms', [(1, 1, 0), (2, 1, 0), (3, 1, 1), (3, 2, 1), (4, 1, 1), (5, 1, 2)])
    def test_euler_characteristic_matches_curve(self, rms):
        from torichms.curvetop import affine_curve

        nf = normal_form_of(*rms)
        curve = affine_curve(nf)
        assert affine_skeleton(nf).euler_characteristic() == 2 - 2 * curve.genus - curve.puncture_count

    def test_generator_sites(self):
        skeleton = affine_skeleton(normal_form_of(3, 1, 1))
        rho1 = skeleton.structure.rho1
        one = skeleton.base_label
        assert skeleton.site(1, one) == (2, one)
        assert skeleton.site(2, one) == (1, rho1.inverse())
        with pytest.raises(InputException):
            skeleton.site(3, one)


class TestGluing:
    def test_square(self, square):
        glued = glue_skeletons(square)
        assert glued.euler_characteristic() == -2
        assert len(glued.graph.faces()) == 4
        assert len(glued.sites) == 1
        site = glued.sites[0]
        assert (site.n1, site.n2) == (1, 1)
        assert not glued.rerouted

    def test_local_p2_fine(self, kp2_fine):
        glued = glue_skeletons(kp2_fine)
        assert glued.euler_characteristic() == -3
        assert len(glued.graph.faces()) == 3
        assert len(glued.sites) == 3
        assert all(p.base == 'dumbbell' for p in glued.placements)

    def test_single_cone_has_nothing_to_glue(self, kp2_coarse):
        glued = glue_skeletons(kp2_coarse)
        assert glued.sites == ()
        assert glued.euler_characteristic() == -3

    def test_placement_for_three_interior_edges(self):
        curve = glue_curve(parse_fan(FOUR_TRIANGLES))
        placements = choose_placement(curve, 'auto')
        assert placements[3].base == 'theta'
        assert [p.base for p in placements[:3]] == ['dumbbell'] * 3
        with pytest.raises(PlacementException):
            choose_placement(curve, 'dumbbell')

    def test_policy_from_config(self):
        curve = glue_curve(parse_fan(FOUR_TRIANGLES))
        Config.set('hms.placement', 'dumbbell')
        with pytest.raises(PlacementException):
            choose_placement(curve)

    def test_unknown_policy(self, square):
        with pytest.raises(InputException):
            choose_placement(glue_curve(square), 'spiral')


class TestDot:
    def test_wheel(self):
        text = to_dot(make_wheel(1, 0).graph, 'wheel')
        assert text.startswith('graph "wheel" {')
        assert 'leg2 [shape=point];' in text
        assert text.rstrip().endswith('}')

    def test_glued_edges_are_marked(self, square):
        text = skeleton_to_dot(glue_skeletons(square))
        assert text.count('color=red') == 2
