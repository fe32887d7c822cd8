"""Atlas-presented candidate buildings: charts, gluing data, global queries.

An :class:`Atlas` is a finite presentation of a pair (point set, chart
family): finitely many copies of the model apartment, plus for ordered chart
pairs an overlap region and the isometry identifying it with a region of the
other chart.  Point equality deliberately uses single transition steps only;
the cocycle check run by :func:`validate` is what justifies that shortcut.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .apartment import (
    AffineIsometry,
    Apartment,
    ConvexRegion,
    Point,
    RegionShape,
    Sector,
    SectorGerm,
    format_point,
)
from .lexq import LambdaScalar
from .linarith import ConstraintSystem, LinearConstraint, feasible


class NoCommonChartError(RuntimeError):
    """Raised when two points admit no shared chart (a compatibility failure)."""


@dataclass(frozen=True)
class Transition:
    region: ConvexRegion
    iso: AffineIsometry


@dataclass(frozen=True)
class BuildingPoint:
    chart: int
    point: Point


@dataclass(frozen=True)
class BuildingSector:
    chart: int
    sector: Sector


@dataclass(frozen=True)
class BuildingGerm:
    chart: int
    sector: Sector

    @property
    def base(self) -> Point:
        return self.sector.base

    def germ(self) -> SectorGerm:
        return self.sector.germ()


class Atlas:
    """Finitely many charts over one model apartment, plus gluing data."""

    def __init__(
        self,
        apartment: Apartment,
        chart_names: list[str],
        transitions: dict[tuple[int, int], Transition],
        label: str = "",
    ):
        if len(set(chart_names)) != len(chart_names):
            raise ValueError("chart names must be unique")
        self.apartment = apartment
        self.chart_names = list(chart_names)
        self.transitions = dict(transitions)
        self.label = label
        m = len(chart_names)
        for (i, j) in self.transitions:
            if not (0 <= i < m and 0 <= j < m) or i == j:
                raise ValueError(f"bad transition pair ({i}, {j})")

    # -- chart bookkeeping -------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.chart_names)

    def charts(self) -> range:
        return range(self.size)

    def name(self, i: int) -> str:
        return self.chart_names[i]

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.size:
                raise ValueError(f"chart index {name} out of range")
            return name
        try:
            return self.chart_names.index(str(name))
        except ValueError:
            raise ValueError(f"unknown chart {name!r}") from None

    def transition(self, i: int, j: int) -> Optional[Transition]:
        return self.transitions.get((i, j))

    def overlap_region(self, i: int, j: int) -> Optional[ConvexRegion]:
        """Image of chart j inside chart i, in chart-i coordinates."""
        if i == j:
            return self.apartment.whole_region()
        t = self.transition(i, j)
        return t.region if t else None

    # -- points --------------------------------------------------------------

    def transport_point(self, i: int, p: Point, j: int) -> Optional[Point]:
        if i == j:
            return p
        t = self.transition(i, j)
        if t is None or not self.apartment.region_contains_point(t.region, p):
            return None
        return t.iso.apply(p)

    def charts_containing_point(self, bp: BuildingPoint) -> list[int]:
        out = []
        for j in self.charts():
            if self.transport_point(bp.chart, bp.point, j) is not None:
                out.append(j)
        return out

    def points_equal(self, bp: BuildingPoint, bq: BuildingPoint) -> bool:
        moved = self.transport_point(bp.chart, bp.point, bq.chart)
        return moved is not None and moved == bq.point

    # -- sectors and germs ------------------------------------------------------

    def transport_sector(self, bs: BuildingSector, j: int) -> Optional[Sector]:
        """Image of a whole sector in chart j; None unless fully contained."""
        ap = self.apartment
        if bs.chart == j:
            return bs.sector
        t = self.transition(bs.chart, j)
        if t is None:
            return None
        if not ap.region_contains(t.region, ap.sector_region(bs.sector)):
            return None
        return ap.sector(t.iso.apply(bs.sector.base), t.iso.linear * bs.sector.direction)

    def charts_containing_sector(self, bs: BuildingSector) -> list[int]:
        return [j for j in self.charts() if self.transport_sector(bs, j) is not None]

    def transport_germ(self, bg: BuildingGerm, j: int) -> Optional[Sector]:
        """Image of a sector germ in chart j; needs only a germ-sized overlap."""
        ap = self.apartment
        if bg.chart == j:
            return bg.sector
        t = self.transition(bg.chart, j)
        if t is None:
            return None
        if not ap.region_contains_germ(t.region, bg.sector.germ()):
            return None
        return ap.sector(t.iso.apply(bg.sector.base), t.iso.linear * bg.sector.direction)

    def charts_containing_germ(self, bg: BuildingGerm) -> list[int]:
        return [j for j in self.charts() if self.transport_germ(bg, j) is not None]


@dataclass
class ValidationReport:
    ok: bool
    issues: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = []
        for note in self.notes:
            out.append(f"CHECK {note}")
        for issue in self.issues:
            out.append(f"VIOLATION {issue}")
        out.append(f"RESULT {'valid' if self.ok else 'invalid'}")
        return out


def validate(atlas: Atlas) -> ValidationReport:
    """Structural checks: symmetry, nonemptiness, closedness, cocycle."""
    ap = atlas.apartment
    issues: list[str] = []
    notes: list[str] = []

    pairs = sorted(atlas.transitions)
    for (i, j) in pairs:
        t = atlas.transitions[(i, j)]
        back = atlas.transition(j, i)
        label = f"({atlas.name(i)},{atlas.name(j)})"
        if back is None:
            issues.append(f"symmetry: transition {label} has no reverse")
            continue
        if back.iso != t.iso.inverse():
            issues.append(f"symmetry: reverse isometry of {label} is not the inverse")
        if not ap.region_equal(back.region, ap.transform_region(t.region, t.iso)):
            issues.append(f"symmetry: reverse region of {label} is not the image region")
    notes.append(f"symmetry pairs={len(pairs)}")

    for (i, j) in pairs:
        if i < j and atlas.transition(j, i) is not None:
            if ap.region_empty(atlas.transitions[(i, j)].region):
                issues.append(f"nonempty: overlap ({atlas.name(i)},{atlas.name(j)}) is empty")
    notes.append("overlaps closed convex by construction (half-apartment constraints)")

    cocycle_checked = 0
    for i in atlas.charts():
        for j in atlas.charts():
            for k in atlas.charts():
                if len({i, j, k}) != 3:
                    continue
                tij = atlas.transition(i, j)
                tjk = atlas.transition(j, k)
                tik = atlas.transition(i, k)
                if tij is None or tjk is None or tik is None:
                    continue
                cocycle_checked += 1
                domain = ap.intersect(
                    tij.region,
                    ap.transform_region(tjk.region, tij.iso.inverse()),
                    tik.region,
                )
                composite = tik.iso.inverse().compose(tjk.iso.compose(tij.iso))
                if not _fixes_region(ap, composite, domain):
                    issues.append(
                        "cocycle: composite through "
                        f"({atlas.name(i)},{atlas.name(j)},{atlas.name(k)}) moves overlap points"
                    )
    notes.append(f"cocycle triples={cocycle_checked}")
    notes.append("chart family is reflection-saturated by representation (precomposition reindexes)")
    return ValidationReport(not issues, issues, notes)


def _fixes_region(ap: Apartment, g: AffineIsometry, region: ConvexRegion) -> bool:
    """Is g the identity on every point of the region?"""
    if g.is_identity():
        return True
    n = ap.rank
    base_rows = tuple(ap.half_constraint(h) for h in region.halves)
    ident = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    for r in range(n):
        coeffs = tuple(g.linear.matrix[r][c] - ident[r][c] for c in range(n))
        target = -g.shift[r]
        eq = LinearConstraint(coeffs, "=", target)
        for neg in eq.negations():
            if feasible(ConstraintSystem(n, base_rows + (neg,)), ap.lex_rank).sat:
                return False
    return True


def common_chart(atlas: Atlas, bp: BuildingPoint, bq: BuildingPoint) -> Optional[int]:
    """Some chart containing both points, or None (a compatibility failure)."""
    shared = set(atlas.charts_containing_point(bp)) & set(atlas.charts_containing_point(bq))
    if bp.chart in shared and bp.chart == bq.chart:
        return bp.chart
    return min(shared) if shared else None


def global_distance(atlas: Atlas, bp: BuildingPoint, bq: BuildingPoint) -> LambdaScalar:
    """Metric evaluated in a shared chart; all shared charts must agree."""
    shared = sorted(
        set(atlas.charts_containing_point(bp)) & set(atlas.charts_containing_point(bq))
    )
    if not shared:
        raise NoCommonChartError(
            f"no chart contains both {format_point(bp.point)}@{atlas.name(bp.chart)} "
            f"and {format_point(bq.point)}@{atlas.name(bq.chart)}"
        )
    values = []
    for j in shared:
        p = atlas.transport_point(bp.chart, bp.point, j)
        q = atlas.transport_point(bq.chart, bq.point, j)
        values.append(atlas.apartment.metric(p, q))
    first = values[0]
    if any(v != first for v in values[1:]):
        raise AssertionError("distance disagrees between shared charts (atlas not compatible)")
    return first


@dataclass(frozen=True)
class IntersectionInfo:
    region: Optional[ConvexRegion]
    shape: RegionShape


def intersection_region(atlas: Atlas, i: int, j: int) -> IntersectionInfo:
    """Overlap of charts i and j in chart-i coordinates, with its shape."""
    region = atlas.overlap_region(i, j)
    if region is None:
        return IntersectionInfo(None, RegionShape("empty"))
    return IntersectionInfo(region, atlas.apartment.classify_region(region))
