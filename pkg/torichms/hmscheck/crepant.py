"""
Crepant-resolution comparison

Two stacky fans over the same lattice polygon give mirror curves of the
same topology; each side is also checked on its own.
"""
import asyncio
import time
from typing import Any, Dict, List, Optional, Tuple

from torichms.curvetop.glue import GlobalCurveModel, glue_curve
from torichms.exceptions import CheckFailedException, PolygonMismatchException
from torichms.hmscheck.checks import check_global, resolve_truncation
from torichms.hmscheck.report import CheckResult, HmsReport
from torichms.logging import getLogger
from torichms.toricdata.fan import StackyFan

logger = getLogger(__name__)

SIDES = ('A', 'B')


def _hull(fan: StackyFan) -> List[List[int]]:
    return sorted(p.as_list() for p in fan.polygon())


def side_profile(curve: GlobalCurveModel) -> Tuple[int, ...]:
    """Total punctures on each hull side, in hull order"""
    return tuple(sum(side) for side in curve.boundary_punctures)


def _invariants(curve: GlobalCurveModel) -> Dict[str, Any]:
    return {
        'genus': curve.genus,
        'punctures': curve.punctures,
        'chi': curve.chi,
        'sides': list(side_profile(curve)),
    }


def compare_topology(fan_a: StackyFan, fan_b: StackyFan) -> CheckResult:
    """
    Genus, puncture count, Euler characteristic and per-side puncture totals

    The per-edge split of a hull side may differ between the two fans; only
    the side totals are compared. Both splits are kept in the details.
    """
    name = 'crepant.topology'
    try:
        curves = [glue_curve(fan_a), glue_curve(fan_b)]
    except CheckFailedException as exc:
        return CheckResult.failed(name, {'message': exc.message, **exc.counterexample})
    invariants = [_invariants(c) for c in curves]
    splits = {side: [list(s) for s in c.boundary_punctures] for side, c in zip(SIDES, curves)}
    if invariants[0] != invariants[1]:
        differing = sorted(k for k in invariants[0] if invariants[0][k] != invariants[1][k])
        logger.warning("crepant topologies differ", extra={'keys': differing})
        return CheckResult.failed(
            name,
            {'differs': differing, 'A': invariants[0], 'B': invariants[1]},
            splits=splits,
        )
    return CheckResult.passed(name, splits=splits, **invariants[0])


async def crepant_compare(fan_a: StackyFan, fan_b: StackyFan, truncate: Optional[int] = None) -> HmsReport:
    """
    Example:
        report = await crepant_compare(coarse_kp2, fine_kp2, 10)
        report.topology     # {'chi': -3, 'genus': 1, 'punctures': 3}

    Raises:
        PolygonMismatchException: the fans span different polygons
    """
    truncate = resolve_truncation(truncate)
    hull_a, hull_b = _hull(fan_a), _hull(fan_b)
    if hull_a != hull_b:
        raise PolygonMismatchException(
            f"the two fans span different lattice polygons: {hull_a} vs {hull_b}"
        )

    started = time.perf_counter()
    report_a, report_b = await asyncio.gather(check_global(fan_a, truncate), check_global(fan_b, truncate))

    report = HmsReport(input={
        'fans': [fan_a.to_document(), fan_b.to_document()],
        'truncate': truncate,
    })
    topology = compare_topology(fan_a, fan_b)
    report.add(topology)
    report.extend(report_a.checks, prefix=SIDES[0])
    report.extend(report_b.checks, prefix=SIDES[1])
    if topology.ok:
        report.topology = report_a.topology
    report.timing = time.perf_counter() - started
    return report
