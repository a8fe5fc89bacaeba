"""
Affine and global comparison suites

Every sub-check returns a CheckResult; a CheckFailedException raised inside
a sub-check becomes a failed result carrying its counterexample. Projection
mismatches between restriction routes are not caught: they abort the run.
"""
import asyncio
import time
from itertools import combinations, product
from typing import Any, Callable, Dict, List, Optional, Tuple

from torichms.curvetop.affine import affine_curve
from torichms.curvetop.glue import GlobalCurveModel, glue_curve
from torichms.curvetop.monodromy import monodromy
from torichms.curvetop.pick import pick_counts
from torichms.exceptions import CheckFailedException, ProjectionMismatchException
from torichms.fukaya.affine import affine_hom_table, loop_series
from torichms.fukaya.circle import circle_hom_series
from torichms.fukaya.hom_table import Generator, HomTable
from torichms.fukaya.quiver import wheel_hom_series, wheel_twist
from torichms.fukaya.series import EVEN, GradedSeries, check_truncation
from torichms.fukaya.weighted import weighted_p1_series
from torichms.hmscheck.descent import DescentDiagram, Restriction, build_descent, commuting_squares
from torichms.hmscheck.report import CheckResult, HmsReport
from torichms.logging import getLogger
from torichms.mfside.ext import ExtQuery, ext_chart, ext_table, unfiltered_series
from torichms.ribbon.gluing import GlobalSkeleton, glue_skeletons
from torichms.ribbon.skeleton import affine_skeleton, open_cover
from torichms.ribbon.wheel import make_wheel
from torichms.support.config import Config
from torichms.toricdata.cone import ConeNormalForm, normalize_rays
from torichms.toricdata.fan import StackyFan
from torichms.toricdata.group import structure_group, sequence_data
from torichms.toricdata.picard import PicardClass

logger = getLogger(__name__)


def resolve_truncation(truncate: Optional[int]) -> int:
    """Explicit bound, else hms.truncate"""
    if truncate is None:
        truncate = Config.get('hms.truncate', 30)
    return check_truncation(truncate)


def _run(name: str, body: Callable[[], Dict[str, Any]]) -> CheckResult:
    try:
        details = body() or {}
    except ProjectionMismatchException:
        raise
    except CheckFailedException as exc:
        logger.warning(
            f"check {name} failed: {exc.message}",
            extra={'check': name, 'failure': exc.to_dict()},
        )
        return CheckResult.failed(name, {'message': exc.message, **exc.counterexample})
    return CheckResult.passed(name, **details)


def _fail(message: str, **counterexample: Any) -> None:
    raise CheckFailedException(message, counterexample=counterexample)


# ============================================================================
# AFFINE
# ============================================================================

def affine_checks(nf: ConeNormalForm, truncate: int) -> List[CheckResult]:
    """All affine sub-checks for one normal form, in a fixed order"""
    rms = list(nf.key)
    structure = structure_group(nf)
    order = structure.group.order
    if order > Config.get('hms.max_group_order', 40):
        logger.warning("large group order", extra={'rms': rms, 'order': order})

    def group_laws() -> Dict[str, Any]:
        if order != nf.r * nf.m:
            _fail("|G| differs from rm", rms=rms, order=order)
        product_ = structure.group.character_from_monomial((1, 1, 1))
        if not product_.is_trivial:
            _fail("rho1 rho2 rho3 is not trivial", rms=rms, product=repr(product_))
        if len(structure.eta_bijection()) != order:
            _fail("eta1, eta2 do not enumerate G", rms=rms)
        for i, pair in enumerate(sequence_data(nf), start=1):
            rho = structure.rho(i)
            kernel = structure.group.kernel_size(rho)
            if (kernel, rho.order) != (pair.m, pair.r) or pair.m * pair.r != order:
                _fail("sequence data differs from kernel enumeration", rms=rms, index=i,
                      formula=[pair.m, pair.r], enumerated=[kernel, rho.order])
        return {'order': order, 'factors': list(structure.group.factors)}

    def hurwitz_pick() -> Dict[str, Any]:
        curve = affine_curve(nf)
        pick = pick_counts(nf.moment_triangle())
        if (curve.genus, curve.puncture_count) != (pick.interior, pick.boundary):
            _fail("Hurwitz count differs from lattice count", rms=rms,
                  hurwitz=[curve.genus, curve.puncture_count], pick=[pick.interior, pick.boundary])
        return {'genus': curve.genus, 'punctures': curve.puncture_count}

    def monodromy_match() -> Dict[str, Any]:
        data = monodromy(nf, structure)
        return {'orbits_x': len(data.orbits_x), 'orbits_y': len(data.orbits_y)}

    state: Dict[str, Any] = {}

    def skeleton() -> Dict[str, Any]:
        skel = affine_skeleton(nf, structure)
        cover = open_cover(skel)
        state['skeleton'] = skel
        return {'chi': skel.euler_characteristic(), 'segments': len(skel.segments()),
                'wheels': [len(cover.wheels1), len(cover.wheels3)]}

    def b_table() -> HomTable:
        if 'b_table' not in state:
            state['b_table'] = ext_table(structure, truncate, 'affine')
        return state['b_table']

    def a_vs_b() -> Dict[str, Any]:
        if 'skeleton' not in state:
            _fail("no skeleton to compute the A-side table on", rms=rms)
        a_table = affine_hom_table(state['skeleton'], truncate)
        diff = a_table.first_difference(b_table())
        if diff is not None:
            _fail("A-side table differs from ext_affine", rms=rms, **diff)
        return {'pairs': len(a_table)}

    def dimensional_reduction() -> Dict[str, Any]:
        first = b_table()
        second = ext_table(structure, truncate, 'mf')
        diff = first.first_difference(second)
        if diff is not None:
            _fail("ext_affine differs from ext_mf", rms=rms, **diff)
        return {'pairs': len(first)}

    def molien() -> Dict[str, Any]:
        one = structure.group.trivial_character
        totals = {sides: GradedSeries.zero(truncate) for sides in product((1, 2), repeat=2)}
        for (source, target), series in b_table().entries.items():
            sides = (source.side, target.side)
            totals[sides] = totals[sides] + series
        for j, j2 in product((1, 2), repeat=2):
            total = totals[(j, j2)]
            plain = unfiltered_series(structure, ExtQuery(Generator(j, one), Generator(j2, one), truncate))
            expected = GradedSeries.from_counts(truncate, {b: order * d for b, d in plain.entries})
            diff = total.first_difference(expected)
            if diff is not None:
                _fail("label sum differs from |G| times the monomial count", rms=rms, sides=[j, j2], **diff)
        return {}

    def wheel_restriction() -> Dict[str, Any]:
        if 'skeleton' not in state:
            _fail("no skeleton to restrict", rms=rms)
        skel = state['skeleton']
        pairs = sequence_data(nf)
        for side, wheel_size in ((2, pairs[0].r), (1, pairs[1].r)):
            expected = wheel_hom_series(make_wheel(wheel_size, 0), 0, 0, truncate)
            for theta in sorted(structure.group.characters()):
                diff = loop_series(skel, Generator(side, theta), truncate).first_difference(expected)
                if diff is not None:
                    _fail("loop part differs from the wheel", rms=rms, side=side,
                          label=list(theta.residues), wheel=[wheel_size, 0], **diff)
        return {}

    return [
        _run('group', group_laws),
        _run('hurwitz_pick', hurwitz_pick),
        _run('monodromy', monodromy_match),
        _run('skeleton', skeleton),
        _run('a_vs_ext_affine', a_vs_b),
        _run('ext_affine_vs_ext_mf', dimensional_reduction),
        _run('molien', molien),
        _run('wheel_restriction', wheel_restriction),
    ]


def check_affine(nf: ConeNormalForm, truncate: Optional[int] = None) -> HmsReport:
    """
    Compare both sides on one cone

    Example:
        report = check_affine(normal_form_of(3, 1, 1), 30)
        report.passed     # True
    """
    truncate = resolve_truncation(truncate)
    started = time.perf_counter()
    report = HmsReport(input={'rms': list(nf.key), 'truncate': truncate})
    report.extend(affine_checks(nf, truncate))
    curve = affine_curve(nf)
    report.topology = {'genus': curve.genus, 'punctures': curve.puncture_count, 'chi': curve.open_chi}
    report.timing = time.perf_counter() - started
    return report


# ============================================================================
# GLOBAL
# ============================================================================

def _normalized(series: GradedSeries, shift_order: int, w0: Optional[int], window: int) -> GradedSeries:
    """n(w') = s(w0 + r w') for |w'| <= window; zero when no w0 exists"""
    if w0 is None:
        return GradedSeries.zero(window, laurent=True)
    return GradedSeries.from_counts(
        window,
        {(EVEN, w): series.dim(EVEN, w0 + shift_order * w) for w in range(-window, window + 1)},
        laurent=True,
    )


def _route_tables(route: Restriction, diagram: DescentDiagram, truncate: int) -> Tuple[int, Dict[Tuple[PicardClass, PicardClass], GradedSeries]]:
    """
    Raw A = B comparison over the cone's labels, then the table induced on
    edge labels with the period divided out

    Returns the window and the normalized table; the window is -1 when the
    bound is too small to hold one period.
    """
    structure = diagram.cones[route.cone].model.structure
    rho = structure.rho(route.puncture_type)
    edge = list(route.edge.rays)
    characters = sorted(structure.group.characters())
    for theta, theta2 in product(characters, repeat=2):
        a_side = circle_hom_series(rho.inverse(), theta, theta2, truncate)
        b_side = ext_chart(rho, theta, theta2, truncate)
        diff = a_side.first_difference(b_side)
        if diff is not None:
            _fail("circle series differs from chart series", edge=edge, cone=route.cone,
                  pair=[list(theta.residues), list(theta2.residues)], **diff)

    period = rho.order
    window = (truncate - period + 1) // period
    table: Dict[Tuple[PicardClass, PicardClass], GradedSeries] = {}
    if window < 0:
        return window, table
    labels = route.image()
    for lam, lam2 in product(labels, repeat=2):
        theta, theta2 = route.fibre(lam)[0], route.fibre(lam2)[0]
        raw = circle_hom_series(rho.inverse(), theta, theta2, truncate)
        ratio = theta / theta2
        w0 = next((w for w in range(period) if rho ** w == ratio), None)
        table[(lam, lam2)] = _normalized(raw, period, w0, window)
    return window, table


def edge_tables(diagram: DescentDiagram, truncate: int) -> Dict[str, Any]:
    """Circle against chart on both routes into every interior edge"""
    compared = 0
    for entry in diagram.interior():
        routes = diagram.routes(entry.edge)
        results = [_route_tables(route, diagram, truncate) for route in routes]
        window = min(w for w, _ in results)
        if window < 0:
            continue
        laurent = GradedSeries.from_counts(window, {(EVEN, w): 1 for w in range(-window, window + 1)}, laurent=True)
        zero = GradedSeries.zero(window, laurent=True)
        for (lam, lam2) in product(entry.labels, repeat=2):
            expected = laurent if lam == lam2 else zero
            for route, (_, table) in zip(routes, results):
                diff = table[(lam, lam2)].truncated(window).first_difference(expected)
                if diff is not None:
                    _fail("induced edge table is not diagonal Laurent", edge=list(entry.edge.rays),
                          cone=route.cone, labels=[repr(lam), repr(lam2)], **diff)
            compared += 1
    return {'label_pairs': compared}


def triple_overlaps(fan: StackyFan) -> Dict[str, Any]:
    """Three distinct cones meet in at most a ray, leaving two invertible coordinates"""
    checked = 0
    for a, b, c in combinations(range(len(fan.triangles)), 3):
        shared = set(fan.triangles[a]) & set(fan.triangles[b]) & set(fan.triangles[c])
        if len(shared) > 1:
            _fail("triple overlap has fewer than two invertible coordinates",
                  cones=[a, b, c], shared=sorted(shared))
        checked += 1
    return {'triples': checked}


def gluing_sites(skeleton: GlobalSkeleton, truncate: int) -> Dict[str, Any]:
    """Every site wheel Gamma(n1, n2) against the weighted line P^1(n1, n2)"""
    shapes = sorted({(site.n1, site.n2) for site in skeleton.sites})
    for p, q in shapes:
        wheel = make_wheel(p, q)
        for i, j in product(range(p + q), repeat=2):
            paths = wheel_hom_series(wheel, i, j, truncate)
            oracle = weighted_p1_series(p, q, wheel_twist(p, q, j), wheel_twist(p, q, i), truncate)
            diff = paths.first_difference(oracle)
            if diff is not None:
                _fail("gluing-site wheel differs from the weighted line", wheel=[p, q], vertices=[i, j], **diff)
    return {'sites': len(skeleton.sites), 'shapes': [list(s) for s in shapes], 'rerouted': skeleton.rerouted}


def global_checks(fan: StackyFan, truncate: int) -> Tuple[List[CheckResult], Optional[GlobalCurveModel]]:
    """Fan-level sub-checks (ii) to (vi), in a fixed order"""
    state: Dict[str, Any] = {}

    def curve() -> Dict[str, Any]:
        state['curve'] = glue_curve(fan)
        return dict(state['curve'].topology())

    def descent() -> Dict[str, Any]:
        diagram = build_descent(fan, truncate)
        state['descent'] = diagram
        return {'cones': len(diagram.cones), 'edges': len(diagram.edges), 'squares': commuting_squares(diagram)}

    def edges() -> Dict[str, Any]:
        if 'descent' not in state:
            _fail("no descent diagram")
        return edge_tables(state['descent'], truncate)

    def skeleton() -> Dict[str, Any]:
        if 'curve' not in state:
            _fail("no global curve to glue")
        glued = glue_skeletons(fan, curve=state['curve'])
        state['skeleton'] = glued
        return {'chi': glued.euler_characteristic(), 'faces': len(glued.graph.faces()),
                'placements': [p.base for p in glued.placements]}

    def sites() -> Dict[str, Any]:
        if 'skeleton' not in state:
            _fail("no glued skeleton")
        return gluing_sites(state['skeleton'], truncate)

    results = [
        _run('global.curve', curve),
        _run('global.descent', descent),
        _run('global.edges', edges),
        _run('global.skeleton', skeleton),
        _run('global.triple_overlaps', lambda: triple_overlaps(fan)),
        _run('global.gluing_sites', sites),
    ]
    return results, state.get('curve')


async def check_global(fan: StackyFan, truncate: Optional[int] = None) -> HmsReport:
    """
    Per-cone suites concurrently, then the fan-level checks

    Per-cone work runs in worker threads, at most hms.concurrency at once;
    results are assembled in cone order.
    """
    truncate = resolve_truncation(truncate)
    started = time.perf_counter()
    limit = asyncio.Semaphore(max(1, int(Config.get('hms.concurrency', 4))))

    async def cone_task(cone: int) -> List[CheckResult]:
        async with limit:
            nf = normalize_rays(fan.cone_rays(cone))
            return await asyncio.to_thread(affine_checks, nf, truncate)

    async def fan_task() -> Tuple[List[CheckResult], Optional[GlobalCurveModel]]:
        async with limit:
            return await asyncio.to_thread(global_checks, fan, truncate)

    cone_results, (fan_results, curve) = await asyncio.gather(
        asyncio.gather(*(cone_task(t) for t in range(len(fan.triangles)))),
        fan_task(),
    )

    report = HmsReport(input={'fan': fan.to_document(), 'truncate': truncate})
    for cone, results in enumerate(cone_results):
        report.extend(results, prefix=f"cone[{cone}]")
    report.extend(fan_results)
    if curve is not None:
        report.topology = dict(curve.topology())
    report.timing = time.perf_counter() - started
    logger.info(
        "global check finished",
        extra={'checks': len(report.checks), 'failures': len(report.failures())},
    )
    return report
