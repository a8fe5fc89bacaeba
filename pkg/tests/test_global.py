"""
Fan-level checks, crepant comparison and DOT exports
"""
import pytest

from torichms.exceptions import InputException, PolygonMismatchException
from torichms.hmscheck import (
    check_global,
    compare_topology,
    crepant_compare,
    export_dot,
    global_checks,
    side_profile,
)
from torichms.curvetop import glue_curve
from torichms.support import Config

GLOBAL_CHECKS = [
    'global.curve',
    'global.descent',
    'global.edges',
    'global.skeleton',
    'global.triple_overlaps',
    'global.gluing_sites',
]


class TestCheckGlobal:
    async def test_square(self, square):
        report = await check_global(square, 30)
        assert report.passed, report.to_text()
        assert report.topology == {'genus': 0, 'punctures': 4, 'chi': -2}
        names = [c.name for c in report.checks]
        assert names[0] == 'cone[0].group'
        assert names[-len(GLOBAL_CHECKS):] == GLOBAL_CHECKS

    @pytest.mark.parametrize('fixture', ['kp2_coarse', 'kp2_fine'])
    async def test_local_p2(self, fixture, request):
        fan = request.getfixturevalue(fixture)
        report = await check_global(fan, 30)
        assert report.passed, report.to_text()
        assert report.topology == {'genus': 1, 'punctures': 3, 'chi': -3}

    async def test_single_smooth_cone(self, single_cone):
        report = await check_global(single_cone, 30)
        assert report.passed, report.to_text()
        assert report.topology == {'genus': 0, 'punctures': 3, 'chi': -1}
        assert report.checks[0].name == 'cone[0].group'

    async def test_single_worker(self, kp2_fine):
        Config.set('hms.concurrency', 1)
        report = await check_global(kp2_fine, 6)
        assert report.passed

    async def test_json_is_stable(self, square):
        first = await check_global(square, 6)
        second = await check_global(square, 6)
        assert first.to_json() == second.to_json()

    def test_fan_checks_without_the_event_loop(self, square):
        results, curve = global_checks(square, 6)
        assert [r.name for r in results] == GLOBAL_CHECKS
        assert curve.topology() == {'genus': 0, 'punctures': 4, 'chi': -2}
        sites = results[-1]
        assert sites.details['shapes'] == [[1, 1]]
        assert sites.details['rerouted'] is False


class TestCrepant:
    def test_side_profile(self, kp2_coarse, kp2_fine):
        assert side_profile(glue_curve(kp2_coarse)) == side_profile(glue_curve(kp2_fine)) == (1, 1, 1)

    def test_topology_agrees_for_both_squares(self, square, square_flipped):
        result = compare_topology(square, square_flipped)
        assert result.ok
        assert result.details['genus'] == 0
        assert set(result.details['splits']) == {'A', 'B'}

    async def test_local_p2_coarse_against_fine(self, kp2_coarse, kp2_fine):
        report = await crepant_compare(kp2_coarse, kp2_fine, 30)
        assert report.passed, report.to_text()
        assert report.checks[0].name == 'crepant.topology'
        assert any(c.name.startswith('A.cone[0].') for c in report.checks)
        assert any(c.name.startswith('B.cone[2].') for c in report.checks)
        assert report.topology == {'genus': 1, 'punctures': 3, 'chi': -3}

    async def test_flipped_square(self, square, square_flipped):
        report = await crepant_compare(square, square_flipped, 30)
        assert report.passed, report.to_text()
        assert len(report.input['fans']) == 2

    async def test_different_polygons(self, square, kp2_fine):
        with pytest.raises(PolygonMismatchException):
            await crepant_compare(square, kp2_fine, 4)


class TestExport:
    def test_skeleton(self, square):
        text = export_dot(square, 'skeleton')
        assert text.startswith('graph "skeleton" {')
        assert 'color=red' in text

    def test_dual(self, kp2_fine):
        text = export_dot(kp2_fine, 'dual')
        assert text.count(' -- ') == 6
        assert text.count('style=dashed') == 3

    def test_descent(self, square):
        text = export_dot(square, 'descent')
        assert text.startswith('digraph "descent" {')
        assert text.count(' -> ') == 6

    def test_unknown_target(self, square):
        with pytest.raises(InputException):
            export_dot(square, 'picture')
