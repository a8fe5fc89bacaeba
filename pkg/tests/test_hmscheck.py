"""
Affine suite, reports, descent diagram and fan-level helpers
"""
import json

import pytest

from torichms.defaults import EXIT_CHECK_FAILURE, EXIT_PASS
from torichms.exceptions import TruncationException
from torichms.hmscheck import checks
from torichms.hmscheck import (
    CheckResult,
    HmsReport,
    analyze,
    build_descent,
    check_affine,
    commuting_squares,
    cone_summary,
    edge_tables,
    resolve_truncation,
    triple_overlaps,
)
from torichms.support import Config
from torichms.toricdata import normal_form_of

AFFINE_CHECKS = [
    'group',
    'hurwitz_pick',
    'monodromy',
    'skeleton',
    'a_vs_ext_affine',
    'ext_affine_vs_ext_mf',
    'molien',
    'wheel_restriction',
]

# every normal form with |G| = rm <= 12
SMALL_ORDERS = [(r, m, s) for r in range(1, 13) for m in range(1, 12 // r + 1) for s in range(r)]


class TestCheckAffine:
    @pytest.mark.parametrize('rms', [(1, 1, 0), (2, 1, 1), (3, 1, 1), (2, 2, 1), (2, 1, 0), (3, 2, 1)])
    def test_passes(self, rms):
        report = check_affine(normal_form_of(*rms), 8)
        assert report.passed, report.to_text()
        assert report.exit_code == EXIT_PASS

    def test_small_orders_are_all_covered(self):
        assert len(SMALL_ORDERS) == 127

    @pytest.mark.parametrize('rms', SMALL_ORDERS, ids=lambda rms: '-'.join(map(str, rms)))
    def test_small_orders_pass_at_thirty(self, rms):
        report = check_affine(normal_form_of(*rms), 30)
        assert report.passed, report.to_text()

    def test_b_side_tables_are_built_once_per_method(self, monkeypatch):
        calls = []
        original = checks.ext_table

        def counting(structure, truncate, method='affine'):
            calls.append(method)
            return original(structure, truncate, method)

        monkeypatch.setattr(checks, 'ext_table', counting)
        report = check_affine(normal_form_of(3, 2, 1), 6)
        assert report.passed, report.to_text()
        assert sorted(calls) == ['affine', 'mf']

    def test_check_order_and_topology(self):
        report = check_affine(normal_form_of(3, 1, 1), 6)
        assert [c.name for c in report.checks] == AFFINE_CHECKS
        assert report.topology == {'genus': 1, 'punctures': 3, 'chi': -3}
        assert report.input == {'rms': [3, 1, 1], 'truncate': 6}

    def test_json_is_deterministic(self):
        first = check_affine(normal_form_of(2, 2, 1), 6).to_json()
        second = check_affine(normal_form_of(2, 2, 1), 6).to_json()
        assert first == second
        document = json.loads(first)
        assert document['schema'] == 1
        assert 'timing' not in document

    def test_truncation_from_config(self):
        Config.set('hms.truncate', 5)
        assert resolve_truncation(None) == 5
        assert check_affine(normal_form_of(1, 1, 0)).input['truncate'] == 5

    def test_negative_truncation(self):
        with pytest.raises(TruncationException):
            check_affine(normal_form_of(1, 1, 0), -1)


class TestReport:
    def test_failed_result(self):
        result = CheckResult.failed('a_vs_ext_affine', {'parity': 'odd', 'weight': 3})
        assert not result.ok
        assert result.to_dict() == {
            'name': 'a_vs_ext_affine',
            'status': 'fail',
            'counterexample': {'parity': 'odd', 'weight': 3},
        }

    def test_exit_code_and_text(self):
        report = HmsReport(input={'rms': [1, 1, 0]})
        report.add(CheckResult.passed('group'))
        report.extend([CheckResult.failed('molien', {'weight': 2})], prefix='cone[0]')
        assert report.exit_code == EXIT_CHECK_FAILURE
        assert [c.name for c in report.failures()] == ['cone[0].molien']
        text = report.render('text')
        assert 'FAIL (1 of 2 checks)' in text
        assert 'counterexample: {"weight": 2}' in text

    def test_timing_only_in_text(self):
        report = HmsReport(input={}, timing=0.5)
        assert 'time: 0.500s' in report.render('text')
        assert 'timing' not in report.render('json')


class TestDescent:
    def test_square(self, square):
        diagram = build_descent(square, 6)
        assert len(diagram.cones) == 2
        assert len(diagram.edges) == 5
        assert len(diagram.interior()) == 1
        assert commuting_squares(diagram) == 1

    def test_routes_reach_every_edge_label(self, kp2_fine):
        diagram = build_descent(kp2_fine, 6)
        for entry in diagram.interior():
            for route in diagram.routes(entry.edge):
                assert set(route.image()) == set(entry.labels)
                assert route.family in (1, 2, 3)

    def test_edge_tables(self, square):
        assert edge_tables(build_descent(square, 12), 12) == {'label_pairs': 1}

    def test_to_dict(self, square):
        document = build_descent(square, 4).to_dict()
        assert document['truncate'] == 4
        assert len(document['restrictions']) == 6


class TestTripleOverlaps:
    def test_no_triples(self, square):
        assert triple_overlaps(square) == {'triples': 0}

    def test_triples_meet_in_a_ray(self, kp2_fine):
        assert triple_overlaps(kp2_fine) == {'triples': 1}


class TestAnalysis:
    def test_cone_summary(self, kp2_coarse):
        summary = cone_summary(kp2_coarse, 0)
        assert summary['rms'] == [3, 1, 1]
        assert summary['invariant_factors'] == [3]
        assert summary['genus'] == 1
        assert summary['punctures'] == 3

    def test_analyze_strip(self, strip):
        report = analyze(strip)
        assert report.passed
        assert [c.name for c in report.checks] == ['cone[0].analysis', 'cone[1].analysis', 'global.curve']
        assert report.topology == {'genus': 0, 'punctures': 6, 'chi': -4}
