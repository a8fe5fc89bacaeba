"""
Comparison suites, descent diagram and reports
"""
from torichms.hmscheck.report import FAIL, PASS, CheckResult, HmsReport
from torichms.hmscheck.descent import (
    ConeEntry,
    DescentDiagram,
    EdgeEntry,
    Restriction,
    build_descent,
    commuting_squares,
)
from torichms.hmscheck.checks import (
    affine_checks,
    check_affine,
    check_global,
    edge_tables,
    global_checks,
    gluing_sites,
    resolve_truncation,
    triple_overlaps,
)
from torichms.hmscheck.crepant import compare_topology, crepant_compare, side_profile
from torichms.hmscheck.export import descent_dot, dual_graph_dot, export_dot
from torichms.hmscheck.analysis import analyze, cone_summary

__all__ = [
    'FAIL',
    'PASS',
    'CheckResult',
    'HmsReport',
    'ConeEntry',
    'DescentDiagram',
    'EdgeEntry',
    'Restriction',
    'build_descent',
    'commuting_squares',
    'affine_checks',
    'check_affine',
    'check_global',
    'edge_tables',
    'global_checks',
    'gluing_sites',
    'resolve_truncation',
    'triple_overlaps',
    'compare_topology',
    'crepant_compare',
    'side_profile',
    'descent_dot',
    'dual_graph_dot',
    'export_dot',
    'analyze',
    'cone_summary',
]
