"""
Combinatorial summary of a fan, without any series comparison
"""
from typing import Any, Dict, List

from torichms.curvetop.affine import affine_curve
from torichms.curvetop.glue import glue_curve
from torichms.exceptions import CheckFailedException
from torichms.hmscheck.report import CheckResult, HmsReport
from torichms.toricdata.cone import normalize_rays
from torichms.toricdata.fan import StackyFan
from torichms.toricdata.group import sequence_data, structure_group


def cone_summary(fan: StackyFan, cone: int) -> Dict[str, Any]:
    nf = normalize_rays(fan.cone_rays(cone))
    structure = structure_group(nf)
    curve = affine_curve(nf)
    return {
        'rays': list(fan.triangles[cone]),
        'rms': list(nf.key),
        'invariant_factors': list(structure.group.invariant_factors),
        'sequence': [[pair.m, pair.r] for pair in sequence_data(nf)],
        'genus': curve.genus,
        'punctures': curve.puncture_count,
    }


def analyze(fan: StackyFan) -> HmsReport:
    """One 'analysis' entry per cone; topology from the glued curve"""
    report = HmsReport(input={'fan': fan.to_document()})
    for cone in range(len(fan.triangles)):
        report.add(CheckResult.passed(f"cone[{cone}].analysis", **cone_summary(fan, cone)))
    try:
        curve = glue_curve(fan)
    except CheckFailedException as exc:
        report.add(CheckResult.failed('global.curve', {'message': exc.message, **exc.counterexample}))
        return report
    sides: List[List[int]] = [list(side) for side in curve.boundary_punctures]
    report.add(CheckResult.passed('global.curve', boundary_punctures=sides))
    report.topology = dict(curve.topology())
    return report
