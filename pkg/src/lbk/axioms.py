"""Axiom deciders, the germ retraction, and the exchange-condition suite.

Every checker returns an :class:`AxiomReport` with one line per configuration
examined.  Chart searches are exhaustive (atlases are finite) and the
translation searches are single exact Fourier-Motzkin solves, so pass/fail
lines are certain for the configurations listed; sampling only enters where a
statement quantifies over all points of the model, and the sample is seeded
and reproducible.  "inconclusive" is reserved for exhausted step budgets and
is never folded into pass or fail.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .apartment import AffineIsometry, Apartment, ConvexRegion, Point, Sector, format_point
from .atlas import (
    Atlas,
    BuildingGerm,
    BuildingPoint,
    BuildingSector,
    NoCommonChartError,
    common_chart,
    global_distance,
    validate,
)
from .lexq import LambdaScalar
from .linarith import ConstraintSystem, feasible
from .rootsystem import WeylElement

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive-budget"

DEFAULT_BUDGET = 200000


class TheoremViolation(RuntimeError):
    """A guaranteed object (common chart, consistent value) failed to appear."""


def search_budget() -> int:
    raw = os.environ.get("LBK_BUDGET", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return DEFAULT_BUDGET


@dataclass
class CheckLine:
    config: str
    verdict: str
    detail: str = ""


@dataclass
class AxiomReport:
    axiom: str
    lines: list[CheckLine] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if any(line.verdict == FAIL for line in self.lines):
            return FAIL
        if any(line.verdict == INCONCLUSIVE for line in self.lines):
            return INCONCLUSIVE
        return PASS

    def counterexamples(self) -> list[CheckLine]:
        return [line for line in self.lines if line.verdict == FAIL]

    def add(self, config: str, verdict: str, detail: str = "") -> None:
        self.lines.append(CheckLine(config, verdict, detail))

    def rendered(self) -> list[str]:
        out = []
        for line in self.lines:
            text = f"AXIOM {self.axiom} config={line.config} verdict={line.verdict}"
            if line.detail:
                text += f" {line.detail}"
            out.append(text)
        counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for line in self.lines:
            counts[line.verdict] += 1
        out.append(
            f"SUMMARY axiom={self.axiom} checked={len(self.lines)} pass={counts[PASS]} "
            f"fail={counts[FAIL]} inconclusive={counts[INCONCLUSIVE]} verdict={self.verdict}"
        )
        return out


# -- sampling ---------------------------------------------------------------


def sample_points(atlas: Atlas, chart: int, count: int, seed: int) -> list[Point]:
    """Seeded rational points, numerators and denominators bounded by 12."""
    ap = atlas.apartment
    rng = random.Random(f"{seed}:{atlas.label}:{atlas.name(chart)}")
    out = []
    for _ in range(count):
        coords = []
        for _ in range(ap.rank):
            parts = [
                Fraction(rng.randint(-12, 12), rng.randint(1, 12))
                for _ in range(ap.lex_rank)
            ]
            coords.append(LambdaScalar(parts))
        out.append(tuple(coords))
    return out


def designated_points(atlas: Atlas, chart: int, extra: int, seed: int) -> list[Point]:
    return [atlas.apartment.origin()] + sample_points(atlas, chart, extra, seed)


def building_sectors(atlas: Atlas, bases_per_chart: int, seed: int) -> list[BuildingSector]:
    ap = atlas.apartment
    out = []
    for chart in atlas.charts():
        for base in designated_points(atlas, chart, bases_per_chart, seed):
            for w in ap.directions():
                out.append(BuildingSector(chart, ap.sector(base, w)))
    return out


def _cap_pairs(items: list, samples: int, seed: int, tag: str) -> list:
    pairs = list(combinations(range(len(items)), 2))
    if len(pairs) <= samples:
        return [(items[a], items[b]) for a, b in pairs]
    rng = random.Random(f"{seed}:{tag}")
    chosen = rng.sample(pairs, samples)
    return [(items[a], items[b]) for a, b in sorted(chosen)]


def _sector_label(atlas: Atlas, bs: BuildingSector) -> str:
    word = "".join(str(i) for i in bs.sector.direction.word) or "e"
    return f"{atlas.name(bs.chart)}:{format_point(bs.sector.base)}:{word}"


def _germ_label(atlas: Atlas, bg: BuildingGerm) -> str:
    word = "".join(str(i) for i in bg.sector.direction.word) or "e"
    return f"{atlas.name(bg.chart)}:{format_point(bg.sector.base)}:{word}"


# -- fit helpers -------------------------------------------------------------


def fit_subsector(atlas: Atlas, bs: BuildingSector, chart: int) -> Optional[Sector]:
    """A subsector of bs living inside the given chart, in home coordinates."""
    if bs.chart == chart:
        return bs.sector
    t = atlas.transition(bs.chart, chart)
    if t is None:
        return None
    return atlas.apartment.subsector_in_region(bs.sector, t.region)


def sector_class_distance(atlas: Atlas, s1: BuildingSector, s2: BuildingSector):
    """Group distance between the parallel classes, via a shared chart.

    Returns (element, chart) or None when no chart holds subsectors of both.
    """
    ap = atlas.apartment
    for chart in atlas.charts():
        a = fit_subsector(atlas, s1, chart)
        b = fit_subsector(atlas, s2, chart)
        if a is None or b is None:
            continue
        d1 = a.direction if s1.chart == chart else atlas.transition(s1.chart, chart).iso.linear * a.direction
        d2 = b.direction if s2.chart == chart else atlas.transition(s2.chart, chart).iso.linear * b.direction
        return d2.inverse() * d1, chart
    return None


# -- A1/A2/A3 ----------------------------------------------------------------


def check_a1(atlas: Atlas) -> AxiomReport:
    """Chart saturation under precomposition holds by representation."""
    report = AxiomReport("A1")
    report.add("structure", PASS, "detail=charts-are-reflection-saturated-copies")
    return report


def check_a2(atlas: Atlas) -> AxiomReport:
    """Overlap compatibility: re-reports the structural validation."""
    report = AxiomReport("A2")
    validation = validate(atlas)
    if validation.ok:
        report.add("structure", PASS, f"detail=checks:{len(validation.notes)}")
    else:
        for issue in validation.issues:
            report.add("structure", FAIL, f"detail={issue.replace(' ', '_')}")
    return report


def check_a3(atlas: Atlas, samples: int = 60, seed: int = 0) -> AxiomReport:
    """Every sampled point pair must admit a shared chart."""
    report = AxiomReport("A3")
    points = []
    per_chart = 2
    for chart in atlas.charts():
        for p in designated_points(atlas, chart, per_chart, seed):
            points.append(BuildingPoint(chart, p))
    for bp, bq in _cap_pairs(points, samples, seed, "a3"):
        config = f"({atlas.name(bp.chart)}:{format_point(bp.point)},{atlas.name(bq.chart)}:{format_point(bq.point)})"
        chart = common_chart(atlas, bp, bq)
        if chart is None:
            report.add(config, FAIL, "detail=no-common-chart")
        else:
            report.add(config, PASS, f"witness={atlas.name(chart)}")
    return report


# -- A4 ----------------------------------------------------------------------


def check_a4(atlas: Atlas, samples: int = 200, seed: int = 0, bases_per_chart: int = 1) -> AxiomReport:
    """Sector pairs must have subsectors in a common chart."""
    report = AxiomReport("A4")
    sectors = building_sectors(atlas, bases_per_chart, seed)
    for s1, s2 in _cap_pairs(sectors, samples, seed, "a4"):
        config = f"({_sector_label(atlas, s1)},{_sector_label(atlas, s2)})"
        witness = None
        for chart in atlas.charts():
            if fit_subsector(atlas, s1, chart) is not None and fit_subsector(atlas, s2, chart) is not None:
                witness = chart
                break
        if witness is None:
            report.add(config, FAIL, "detail=no-chart-holds-both-subsectors")
        else:
            report.add(config, PASS, f"witness={atlas.name(witness)}")
    return report


# -- A6 ----------------------------------------------------------------------


def check_a6(atlas: Atlas) -> AxiomReport:
    """Triples of pairwise half-apartment overlaps must meet."""
    from .atlas import intersection_region

    report = AxiomReport("A6")
    ap = atlas.apartment
    for i, j, k in combinations(atlas.charts(), 3):
        shapes = [
            intersection_region(atlas, a, b).shape.kind
            for a, b in ((i, j), (i, k), (j, k))
        ]
        if any(kind != "half-apartment" for kind in shapes):
            continue
        config = f"({atlas.name(i)},{atlas.name(j)},{atlas.name(k)})"
        triple = ap.intersect(atlas.overlap_region(i, j), atlas.overlap_region(i, k))
        probe = ap.region_feasible(triple)
        if probe.sat:
            report.add(config, PASS, f"witness={format_point(probe.witness)}")
        else:
            report.add(config, FAIL, "detail=triple-intersection-empty")
    if not report.lines:
        report.add("(no-triples)", PASS, "detail=vacuous")
    return report


def recheck_a6_counterexample(atlas: Atlas, i: int, j: int, k: int) -> bool:
    """Re-verify an A6 failure certificate: the joint system really is infeasible."""
    ap = atlas.apartment
    triple = ap.intersect(atlas.overlap_region(i, j), atlas.overlap_region(i, k))
    return not feasible(ap.region_system(triple), ap.lex_rank).sat


# -- EC ----------------------------------------------------------------------


def _flip_half(ap: Apartment, region: ConvexRegion) -> Optional[ConvexRegion]:
    shape = ap.classify_region(region)
    if shape.kind != "half-apartment":
        return None
    return ConvexRegion((ap.half(shape.root, -shape.sense, shape.bound),))


def check_ec(atlas: Atlas) -> AxiomReport:
    """Half-apartment pairs must extend to the symmetric-difference apartment."""
    report = AxiomReport("EC")
    ap = atlas.apartment
    for i, j in combinations(atlas.charts(), 2):
        rij = atlas.overlap_region(i, j)
        rji = atlas.overlap_region(j, i)
        if rij is None or rji is None:
            continue
        target_i = _flip_half(ap, rij)
        if target_i is None:
            continue
        target_j = _flip_half(ap, rji)
        if target_j is None:
            continue
        config = f"({atlas.name(i)},{atlas.name(j)})"
        witness = None
        for c in atlas.charts():
            if c in (i, j):
                continue
            ric = atlas.overlap_region(i, c)
            rjc = atlas.overlap_region(j, c)
            if ric is None or rjc is None:
                continue
            if ap.region_equal(ric, target_i) and ap.region_equal(rjc, target_j):
                witness = c
                break
        if witness is None:
            report.add(config, FAIL, "detail=missing-exchange-apartment")
        else:
            report.add(config, PASS, f"witness={atlas.name(witness)}")
    if not report.lines:
        report.add("(no-half-apartment-pairs)", PASS, "detail=vacuous")
    return report


# -- SE ----------------------------------------------------------------------


def _panel_of_sector(ap: Apartment, sector: Sector, cut: ConvexRegion) -> Optional[int]:
    """The panel type when the cut equals a face of the sector, else None.

    The exchange hypothesis wants the chart to meet the sector in one of the
    sector's own panels (apex included); a panel-shaped slice further out
    does not qualify.
    """
    for i in range(1, ap.rank + 1):
        if ap.region_equal(cut, ap.panel_region(sector, i)):
            return i
    return None


def check_se(atlas: Atlas, seed: int = 0, bases_per_chart: int = 1) -> AxiomReport:
    """Sectors meeting a chart in one of their panels must extend over both wall sides."""
    report = AxiomReport("SE")
    ap = atlas.apartment
    for bs in building_sectors(atlas, bases_per_chart, seed):
        for a in atlas.charts():
            if a == bs.chart:
                continue
            t = atlas.transition(bs.chart, a)
            if t is None:
                continue
            cut = ap.intersect(ap.sector_region(bs.sector), t.region)
            if ap.region_empty(cut):
                continue
            panel_type = _panel_of_sector(ap, bs.sector, cut)
            if panel_type is None:
                continue
            face_root = bs.sector.direction.act_root(ap.roots.simple_root(panel_type))
            face_half = ap.half(face_root, 1, ap.pairing(face_root, bs.sector.base))
            moved_half = ap.transform_half(face_half, t.iso)
            wall_root, wall_bound = moved_half.root, moved_half.bound
            config = f"(chart={atlas.name(a)},sector={_sector_label(atlas, bs)})"
            found = []
            missing = []
            for sense in (1, -1):
                side = ap.half_region(wall_root, sense, wall_bound)
                witness = None
                for c in atlas.charts():
                    if c == a:
                        continue
                    rac = atlas.overlap_region(a, c)
                    if rac is None:
                        continue
                    if not ap.region_equal(rac, side):
                        continue
                    if atlas.transport_sector(bs, c) is None:
                        continue
                    witness = c
                    break
                if witness is None:
                    missing.append(sense)
                else:
                    found.append(witness)
            if missing:
                report.add(config, FAIL, "detail=missing-side-apartment")
            else:
                names = "+".join(atlas.name(c) for c in found)
                report.add(config, PASS, f"witness={names}")
    if not report.lines:
        report.add("(no-panel-incidences)", PASS, "detail=vacuous")
    return report


# -- retraction ----------------------------------------------------------------


class Retraction:
    """Distance-diminishing map onto a chart, fixing a sector germ.

    The per-chart maps are the unique isometries carrying that chart's copy
    of the germ onto the target chart's copy; evaluation cross-checks all
    eligible charts to assert well-definedness.
    """

    def __init__(self, atlas: Atlas, germ: BuildingGerm, chart: int):
        ap = atlas.apartment
        target = atlas.transport_germ(germ, chart)
        if target is None:
            raise TheoremViolation(
                f"germ {_germ_label(atlas, germ)} is not contained in chart {atlas.name(chart)}"
            )
        self.atlas = atlas
        self.germ = germ
        self.chart = chart
        self.maps: dict[int, AffineIsometry] = {}
        for b in atlas.charts_containing_germ(germ):
            local = atlas.transport_germ(germ, b)
            linear = target.direction * local.direction.inverse()
            shift = tuple(
                x - y for x, y in zip(target.base, linear.act_point(local.base))
            )
            self.maps[b] = AffineIsometry(linear, shift)

    def eligible_charts(self, bp: BuildingPoint) -> list[int]:
        return [
            b
            for b in self.maps
            if self.atlas.transport_point(bp.chart, bp.point, b) is not None
        ]

    def evaluate(self, bp: BuildingPoint) -> BuildingPoint:
        charts = self.eligible_charts(bp)
        if not charts:
            raise TheoremViolation(
                f"no chart contains both the germ and {format_point(bp.point)}"
                f"@{self.atlas.name(bp.chart)}"
            )
        images = []
        for b in charts:
            local = self.atlas.transport_point(bp.chart, bp.point, b)
            images.append(self.maps[b].apply(local))
        first = images[0]
        if any(img != first for img in images[1:]):
            raise TheoremViolation("retraction value depends on the chart chosen")
        return BuildingPoint(self.chart, first)


def build_retraction(atlas: Atlas, germ: BuildingGerm, chart: int) -> Retraction:
    return Retraction(atlas, germ, chart)


def check_a5(atlas: Atlas, samples: int = 200, seed: int = 0, targets: int = 3) -> AxiomReport:
    """Retractions exist, fix the target chart and never increase distances."""
    report = AxiomReport("A5")
    ap = atlas.apartment
    germ_targets: list[tuple[int, BuildingGerm]] = []
    dirs = ap.directions()
    for chart in atlas.charts():
        germ_targets.append((chart, BuildingGerm(chart, ap.sector(ap.origin(), dirs[0]))))
        germ_targets.append((chart, BuildingGerm(chart, ap.sector(ap.origin(), dirs[-1]))))
    germ_targets = germ_targets[:targets] if targets else germ_targets

    points = []
    for chart in atlas.charts():
        for p in designated_points(atlas, chart, 2, seed):
            points.append(BuildingPoint(chart, p))

    for chart, germ in germ_targets:
        config_base = f"(chart={atlas.name(chart)},germ={_germ_label(atlas, germ)})"
        try:
            rho = build_retraction(atlas, germ, chart)
        except TheoremViolation as exc:
            report.add(config_base, FAIL, f"detail={str(exc).replace(' ', '_')}")
            continue
        germ_charts = set(rho.maps)
        failed = False
        for bp, bq in _cap_pairs(points, samples, seed, f"a5:{atlas.name(chart)}"):
            config = f"{config_base}:({atlas.name(bp.chart)}:{format_point(bp.point)},{atlas.name(bq.chart)}:{format_point(bq.point)})"
            try:
                ry = rho.evaluate(bp)
                rz = rho.evaluate(bq)
            except TheoremViolation as exc:
                report.add(config, FAIL, f"detail={str(exc).replace(' ', '_')}")
                failed = True
                continue
            try:
                original = global_distance(atlas, bp, bq)
            except NoCommonChartError:
                continue
            retracted = ap.metric(ry.point, rz.point)
            if retracted > original:
                report.add(config, FAIL, "detail=distance-increased")
                failed = True
                continue
            shared = (
                set(atlas.charts_containing_point(bp))
                & set(atlas.charts_containing_point(bq))
                & germ_charts
            )
            if shared and retracted != original:
                report.add(config, FAIL, "detail=not-isometric-on-co-chart-pair")
                failed = True
        for bp in points:
            if bp.chart == chart and rho.evaluate(bp).point != bp.point:
                report.add(config_base, FAIL, "detail=not-identity-on-target")
                failed = True
                break
        if not failed:
            report.add(config_base, PASS, f"witness=maps:{len(rho.maps)}")
    return report


# -- co-apartment searches ---------------------------------------------------


@dataclass
class CoapartmentResult:
    chart: Optional[int]
    verdict: str
    initial_length: Optional[int]
    final_length: Optional[int]
    stages: list[str] = field(default_factory=list)


def germ_coapartment(atlas: Atlas, g1: BuildingGerm, g2: BuildingGerm) -> CoapartmentResult:
    """A chart containing both germs, found by the two-stage descent."""
    ap = atlas.apartment
    stages: list[str] = []
    initial = sector_class_distance(
        atlas, BuildingSector(g1.chart, g1.sector), BuildingSector(g2.chart, g2.sector)
    )
    initial_len = initial[0].length if initial else None

    def finish(chart: Optional[int], note: str) -> CoapartmentResult:
        stages.append(note)
        if chart is None:
            return CoapartmentResult(None, INCONCLUSIVE, initial_len, None, stages)
        final_len = None
        p1 = BuildingPoint(g1.chart, g1.base)
        p2 = BuildingPoint(g2.chart, g2.base)
        if atlas.points_equal(p1, p2):
            s1 = atlas.transport_germ(g1, chart)
            s2 = atlas.transport_germ(g2, chart)
            final_len = ap.germ_distance(s1.germ(), s2.germ()).length
        return CoapartmentResult(chart, PASS, initial_len, final_len, stages)

    same_base = atlas.points_equal(
        BuildingPoint(g1.chart, g1.base), BuildingPoint(g2.chart, g2.base)
    )
    direct = [
        c
        for c in atlas.charts()
        if atlas.transport_germ(g1, c) is not None and atlas.transport_germ(g2, c) is not None
    ]
    if same_base:
        if direct:
            return finish(direct[0], f"direct-scan chart={atlas.name(direct[0])}")
        return finish(None, "direct-scan exhausted")

    # Distinct bases: chart through both points, sector toward the far point,
    # then two germ-and-sector stages.
    cc = common_chart(atlas, BuildingPoint(g1.chart, g1.base), BuildingPoint(g2.chart, g2.base))
    if cc is None:
        if direct:
            return finish(direct[0], "fallback direct-scan (no point chart)")
        return finish(None, "no chart through both base points")
    stages.append(f"points chart={atlas.name(cc)}")
    x = atlas.transport_point(g1.chart, g1.base, cc)
    y = atlas.transport_point(g2.chart, g2.base, cc)
    toward = ap.sector_through(x, y)
    carrier = None
    for c in atlas.charts():
        if atlas.transport_germ(g1, c) is not None and atlas.transport_sector(
            BuildingSector(cc, toward), c
        ) is not None:
            carrier = c
            break
    if carrier is None:
        if direct:
            return finish(direct[0], "fallback direct-scan (no germ+sector chart)")
        return finish(None, "no chart with first germ and connecting sector")
    stages.append(f"germ+sector chart={atlas.name(carrier)}")
    germ_in_carrier = atlas.transport_germ(g1, carrier)
    y_in_carrier = atlas.transport_point(g2.chart, g2.base, carrier)
    if y_in_carrier is None:
        # The connecting sector contains y, so its chart must too.
        y_in_carrier = atlas.transport_point(cc, y, carrier)
    pivot = ap.sector_with_germ(y_in_carrier, germ_in_carrier.germ())
    if pivot is None:
        if direct:
            return finish(direct[0], "fallback direct-scan (no pivot sector)")
        return finish(None, "no sector at far base containing first germ")
    for c in atlas.charts():
        if atlas.transport_germ(g2, c) is not None and atlas.transport_sector(
            BuildingSector(carrier, pivot), c
        ) is not None:
            return finish(c, f"final chart={atlas.name(c)}")
    if direct:
        return finish(direct[0], "fallback direct-scan (descent exhausted)")
    return finish(None, "descent exhausted")


@dataclass
class OppositeResult:
    verdict: str
    sector: Optional[Sector] = None
    cochart: Optional[int] = None
    parallel_at_base: Optional[Sector] = None
    contains_point: bool = False
    maximal_length: Optional[int] = None


def opposite_germ(atlas: Atlas, germ: BuildingGerm, chart_b: int, y: Point) -> OppositeResult:
    """Sector of chart_b at y maximizing germ distance from the given germ.

    Returns the chosen sector, a chart holding it together with the germ, and
    the parallel sector based at the germ base that contains y.
    """
    ap = atlas.apartment
    best = None
    for w in ap.directions():
        t_sector = ap.sector(y, w)
        t_germ = BuildingGerm(chart_b, t_sector)
        for bprime in atlas.charts():
            s_here = atlas.transport_germ(germ, bprime)
            t_here = atlas.transport_germ(t_germ, bprime)
            if s_here is None or t_here is None:
                continue
            pivot = ap.sector_with_germ(t_here.base, s_here.germ())
            if pivot is None:
                continue
            delta = ap.germ_distance(t_here.germ(), pivot.germ())
            key = (-delta.length, w.word)
            if best is None or key < best[0]:
                best = (key, w, bprime, pivot, delta)
            break
    if best is None:
        return OppositeResult(INCONCLUSIVE)
    _, w, bprime, pivot, delta = best
    t_sector = ap.sector(y, w)
    cochart = None
    for c in atlas.charts():
        if (
            atlas.transport_sector(BuildingSector(bprime, pivot), c) is not None
            and atlas.transport_sector(BuildingSector(chart_b, t_sector), c) is not None
        ):
            cochart = c
            break
    if cochart is None:
        return OppositeResult(INCONCLUSIVE, sector=t_sector, maximal_length=delta.length)
    germ_there = atlas.transport_germ(germ, cochart)
    t_there = atlas.transport_sector(BuildingSector(chart_b, t_sector), cochart)
    parallel = ap.sector(germ_there.base, t_there.direction)
    y_there = atlas.transport_point(chart_b, y, cochart)
    contains = y_there is not None and ap.sector_contains_point(parallel, y_there)
    return OppositeResult(
        PASS,
        sector=t_sector,
        cochart=cochart,
        parallel_at_base=parallel,
        contains_point=contains,
        maximal_length=delta.length,
    )


@dataclass
class CoverResult:
    verdict: str
    pieces: list[tuple[ConvexRegion, int]] = field(default_factory=list)
    uncovered: Optional[Point] = None

    def chart_names(self, atlas: Atlas) -> list[str]:
        return [atlas.name(c) for _, c in self.pieces]


def finite_cover(atlas: Atlas, germ: BuildingGerm, chart_b: int) -> CoverResult:
    """Closed convex pieces covering chart_b, each co-charted with the germ."""
    ap = atlas.apartment
    if atlas.transport_germ(germ, chart_b) is not None:
        # The whole chart already shares an apartment with the germ: itself.
        return CoverResult(PASS, [(ap.whole_region(), chart_b)])
    base_point = BuildingPoint(germ.chart, germ.base)
    pieces: list[tuple[ConvexRegion, int]] = []
    for c in atlas.charts_containing_point(base_point):
        xc = atlas.transport_point(germ.chart, germ.base, c)
        for w in ap.directions():
            sector = ap.sector(xc, w)
            carrier = None
            for a in atlas.charts():
                if atlas.transport_sector(BuildingSector(c, sector), a) is not None and (
                    atlas.transport_germ(germ, a) is not None
                ):
                    carrier = a
                    break
            if carrier is None:
                continue
            if c == chart_b:
                region = ap.sector_region(sector)
            else:
                t = atlas.transition(c, chart_b)
                if t is None:
                    continue
                region = ap.transform_region(
                    ap.intersect(ap.sector_region(sector), t.region), t.iso
                )
            if ap.region_empty(region):
                continue
            pieces.append((region, carrier))
    # Keep maximal pieces only; duplicates add nothing to the union.
    kept: list[tuple[ConvexRegion, int]] = []
    for region, carrier in pieces:
        if any(ap.region_contains(other, region) for other, _ in kept):
            continue
        kept = [(o, ca) for o, ca in kept if not ap.region_contains(region, o)]
        kept.append((region, carrier))

    budget = search_budget()
    witness = _uncovered_point(ap, [r for r, _ in kept], budget)
    if witness == "budget":
        return CoverResult(INCONCLUSIVE, kept)
    if witness is None:
        return CoverResult(PASS, kept)
    return CoverResult(INCONCLUSIVE, kept, uncovered=witness)


def _uncovered_point(ap: Apartment, regions: list[ConvexRegion], budget: int):
    """A point outside every region, None if covered, or "budget"."""
    steps = 0

    def descend(idx: int, rows: tuple):
        nonlocal steps
        steps += 1
        if steps > budget:
            return "budget"
        system = ConstraintSystem(ap.rank, rows)
        probe = feasible(system, ap.lex_rank)
        if not probe.sat:
            return None
        if idx == len(regions):
            return probe.witness
        for h in regions[idx].halves:
            for neg in ap.half_constraint(h).negations():
                result = descend(idx + 1, rows + (neg,))
                if result is not None:
                    return result
        return None

    return descend(0, ())


# -- equivalence ----------------------------------------------------------------


@dataclass
class EquivalenceReport:
    reports: dict[str, AxiomReport]
    precondition_ok: bool
    alarms: list[str] = field(default_factory=list)

    def agreement(self) -> bool:
        return not self.alarms

    def rendered(self) -> list[str]:
        out = []
        for name in ("A3", "A4", "A6", "EC", "SE", "A5"):
            if name in self.reports:
                out.extend(self.reports[name].rendered())
        verdicts = ",".join(
            f"{name}={self.reports[name].verdict}" for name in ("A6", "EC", "SE", "A5")
            if name in self.reports
        )
        out.append(f"EQUIVALENCE precondition={'ok' if self.precondition_ok else 'unmet'} {verdicts}")
        for alarm in self.alarms:
            out.append(f"ALARM {alarm}")
        return out


def equivalence_suite(atlas: Atlas, samples: int = 200, seed: int = 0) -> EquivalenceReport:
    """Run the exchange checkers and assert the verdict agreements."""
    reports = {
        "A3": check_a3(atlas, samples=min(samples, 60), seed=seed),
        "A4": check_a4(atlas, samples=samples, seed=seed),
    }
    precondition_ok = (
        validate(atlas).ok
        and reports["A3"].verdict == PASS
        and reports["A4"].verdict == PASS
    )
    reports["A6"] = check_a6(atlas)
    reports["EC"] = check_ec(atlas)
    reports["SE"] = check_se(atlas, seed=seed)
    reports["A5"] = check_a5(atlas, samples=min(samples, 120), seed=seed)
    alarms = []
    if precondition_ok:
        a6, ec, se, a5 = (reports[n].verdict for n in ("A6", "EC", "SE", "A5"))
        if not (a6 == ec == se):
            alarms.append(f"exchange-equivalence-broken A6={a6} EC={ec} SE={se}")
        if se == PASS and a5 != PASS:
            alarms.append(f"retraction-missing-despite-exchange SE={se} A5={a5}")
    return EquivalenceReport(reports, precondition_ok, alarms)
