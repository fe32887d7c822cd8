"""The model apartment: pairing, metric, isometries, sectors, germs, galleries.

Points are tuples of :class:`~lbk.lexq.LambdaScalar` holding the coefficients
of a vector in the simple-root base.  All set-valued reasoning happens through
:class:`ConvexRegion` (finite intersections of half-apartments) so that
membership, emptiness, containment and equality reduce to exact
Fourier-Motzkin feasibility runs.

Index conventions: simple roots, reflection generators, coordinates v^i and
sector-panel types are 1-based, matching the a1/a2 syntax of model files.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .lexq import LambdaScalar
from .linarith import (
    GE,
    GT,
    ConstraintSystem,
    Feasibility,
    LinearConstraint,
    feasible,
    project_interval,
)
from .rootsystem import Root, RootSystem, WeylElement

Point = tuple[LambdaScalar, ...]


def format_point(p: Sequence[LambdaScalar]) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


@dataclass(frozen=True)
class AffineIsometry:
    """v -> linear(v) + shift, with the linear part in the reflection group."""

    linear: WeylElement
    shift: Point

    def apply(self, point: Point) -> Point:
        moved = self.linear.act_point(point)
        return tuple(a + b for a, b in zip(moved, self.shift))

    def compose(self, other: "AffineIsometry") -> "AffineIsometry":
        """self after other."""
        return AffineIsometry(
            self.linear * other.linear,
            tuple(a + b for a, b in zip(self.linear.act_point(other.shift), self.shift)),
        )

    def inverse(self) -> "AffineIsometry":
        inv = self.linear.inverse()
        return AffineIsometry(inv, tuple(-c for c in inv.act_point(self.shift)))

    def is_identity(self) -> bool:
        return self.linear.is_identity() and all(c.is_zero() for c in self.shift)


@dataclass(frozen=True)
class HalfApartment:
    """{v : (root, v) >= bound} when sense=+1, <= when sense=-1.

    The stored root is always the positive representative; flipping the sign
    of a root flips the sense and negates the bound instead.
    """

    root: Root
    sense: int
    bound: LambdaScalar


@dataclass(frozen=True)
class ConvexRegion:
    """Finite intersection of half-apartments (closed by construction)."""

    halves: tuple[HalfApartment, ...]


@dataclass(frozen=True)
class Sector:
    """base + direction(fundamental cone)."""

    base: Point
    direction: WeylElement

    def germ(self) -> "SectorGerm":
        return SectorGerm(self)


@dataclass(frozen=True)
class SectorGerm:
    """A sector taken only near its base point."""

    sector: Sector

    @property
    def base(self) -> Point:
        return self.sector.base

    @property
    def direction(self) -> WeylElement:
        return self.sector.direction


@dataclass(frozen=True)
class RegionShape:
    """Classification of a convex region.

    kind is one of "empty", "half-apartment", "wall", "sector-panel",
    "other"; the remaining fields are filled per kind.
    """

    kind: str
    root: Optional[Root] = None
    sense: int = 0
    bound: Optional[LambdaScalar] = None
    apex: Optional[Point] = None
    direction: Optional[WeylElement] = None
    panel_type: int = 0


class Apartment:
    """Geometry of one model apartment over lex rationals of a fixed rank.

    Values are immutable and operations pure; the internal caches are
    idempotent (same key always recomputes the same entry), so instances can
    be shared between threads without coordination.
    """

    def __init__(self, roots: RootSystem, lex_rank: int = 1):
        if lex_rank < 1:
            raise ValueError("lex rank must be at least 1")
        self.roots = roots
        self.rank = roots.rank
        self.lex_rank = lex_rank
        d = roots.sym
        a = roots.cartan
        self.pairing_matrix: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(d[i] * a[i][j] for j in range(self.rank)) for i in range(self.rank)
        )
        self._pairing_rows: dict[Root, tuple[Fraction, ...]] = {}
        self._inverse = _invert(self.pairing_matrix)
        # Dual basis: (alpha_j, u_i) = delta_ij; these span the fundamental cone.
        self.cone_basis: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(self._inverse[j][i] for j in range(self.rank)) for i in range(self.rank)
        )
        self._classify_cache: dict[tuple[HalfApartment, ...], RegionShape] = {}

    # -- scalars and points ---------------------------------------------

    def scalar(self, value) -> LambdaScalar:
        if isinstance(value, LambdaScalar):
            if value.rank != self.lex_rank:
                raise ValueError("scalar has the wrong lex rank")
            return value
        return LambdaScalar.rational(value, self.lex_rank)

    def zero(self) -> LambdaScalar:
        return LambdaScalar.zero(self.lex_rank)

    def origin(self) -> Point:
        return tuple(self.zero() for _ in range(self.rank))

    def point(self, coords: Iterable) -> Point:
        out = tuple(self.scalar(c) for c in coords)
        if len(out) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(out)}")
        return out

    def simple_point(self, *rationals) -> Point:
        """Convenience: a point with purely rational coordinates."""
        return self.point([Fraction(q) for q in rationals])

    # -- pairing, metric, coordinates ------------------------------------

    def check_root(self, root: Sequence[int]) -> Root:
        r = tuple(int(c) for c in root)
        if not self.roots.is_root(r):
            raise ValueError(f"{r} is not a root of the system")
        return r

    def pairing_row(self, root: Sequence[int]) -> tuple[Fraction, ...]:
        r = tuple(int(c) for c in root)
        row = self._pairing_rows.get(r)
        if row is None:
            row = tuple(
                sum(Fraction(r[i]) * self.pairing_matrix[i][j] for i in range(self.rank))
                for j in range(self.rank)
            )
            self._pairing_rows[r] = row
        return row

    def pairing(self, root: Sequence[int], v: Point) -> LambdaScalar:
        """(alpha, v) = sum_j d_i a_ij lambda_j, extended linearly over Phi."""
        row = self.pairing_row(self.check_root(root))
        total = self.zero()
        for c, x in zip(row, v):
            if c != 0:
                total = total + x * c
        return total

    def metric(self, v1: Point, v2: Point) -> LambdaScalar:
        """d(v1,v2): sum over positive roots of |(alpha, v1 - v2)|."""
        diff = tuple(a - b for a, b in zip(v1, v2))
        total = self.zero()
        for root in self.roots.positive_roots:
            row = self.pairing_row(root)
            value = self.zero()
            for c, x in zip(row, diff):
                if c != 0:
                    value = value + x * c
            total = total + abs(value)
        return total

    def coordinate(self, v: Point, i: int, w: Optional[WeylElement] = None) -> LambdaScalar:
        """v^{w(alpha_i)} = (alpha_i, w^-1(v)) / 2 (1-based i)."""
        u = v if w is None else w.inverse().act_point(v)
        return self.pairing(self.roots.simple_root(i), u) / 2

    def coordinates(self, v: Point, w: Optional[WeylElement] = None) -> tuple[LambdaScalar, ...]:
        return tuple(self.coordinate(v, i, w) for i in range(1, self.rank + 1))

    def point_from_coordinates(self, values: Sequence[LambdaScalar]) -> Point:
        """Invert v -> (v^1..v^n); points are determined by their coordinates."""
        doubled = [v * 2 for v in values]
        return self.solve_pairing([self.roots.simple_root(i) for i in range(1, self.rank + 1)], doubled)

    def solve_pairing(self, roots: Sequence[Sequence[int]], values: Sequence[LambdaScalar]) -> Point:
        """The unique point with (root_j, v) = values[j] for a basis of roots."""
        rows = [self.pairing_row(r) for r in roots]
        return _solve(rows, list(values), self.lex_rank)

    def translation(self, shift: Point) -> AffineIsometry:
        return AffineIsometry(self.roots.identity(), tuple(shift))

    def isometry(self, w: WeylElement, shift: Optional[Point] = None) -> AffineIsometry:
        return AffineIsometry(w, tuple(shift) if shift is not None else self.origin())

    # -- half-apartments and regions --------------------------------------

    def half(self, root: Sequence[int], sense: int, bound: LambdaScalar) -> HalfApartment:
        r = self.check_root(root)
        b = self.scalar(bound)
        if sense not in (1, -1):
            raise ValueError("sense must be +1 (>=) or -1 (<=)")
        if not self.roots.is_positive_root(r):
            r = tuple(-c for c in r)
            sense = -sense
            b = -b
        return HalfApartment(r, sense, b)

    def half_region(self, root: Sequence[int], sense: int, bound) -> ConvexRegion:
        return ConvexRegion((self.half(root, sense, self.scalar(bound)),))

    def wall_region(self, root: Sequence[int], bound) -> ConvexRegion:
        b = self.scalar(bound)
        return ConvexRegion((self.half(root, 1, b), self.half(root, -1, b)))

    def whole_region(self) -> ConvexRegion:
        return ConvexRegion(())

    def region(self, halves: Iterable[HalfApartment]) -> ConvexRegion:
        return ConvexRegion(tuple(dict.fromkeys(halves)))

    def intersect(self, *regions: ConvexRegion) -> ConvexRegion:
        halves: list[HalfApartment] = []
        for r in regions:
            halves.extend(r.halves)
        return self.region(halves)

    def half_constraint(self, h: HalfApartment) -> LinearConstraint:
        row = self.pairing_row(h.root)
        if h.sense == 1:
            return LinearConstraint(row, GE, h.bound)
        return LinearConstraint(tuple(-c for c in row), GE, -h.bound)

    def region_system(self, region: ConvexRegion, extra: Sequence[LinearConstraint] = ()) -> ConstraintSystem:
        return ConstraintSystem(
            self.rank, tuple(self.half_constraint(h) for h in region.halves) + tuple(extra)
        )

    def half_holds(self, h: HalfApartment, p: Point) -> bool:
        value = self.pairing(h.root, p)
        return value >= h.bound if h.sense == 1 else value <= h.bound

    def region_contains_point(self, region: ConvexRegion, p: Point) -> bool:
        return all(self.half_holds(h, p) for h in region.halves)

    def region_feasible(self, region: ConvexRegion) -> Feasibility:
        return feasible(self.region_system(region), self.lex_rank)

    def region_empty(self, region: ConvexRegion) -> bool:
        return not self.region_feasible(region).sat

    def region_contains(self, outer: ConvexRegion, inner: ConvexRegion) -> bool:
        """inner is a subset of outer: no point of inner violates a half of outer."""
        inner_rows = tuple(self.half_constraint(h) for h in inner.halves)
        for h in outer.halves:
            for neg in self.half_constraint(h).negations():
                system = ConstraintSystem(self.rank, inner_rows + (neg,))
                if feasible(system, self.lex_rank).sat:
                    return False
        return True

    def region_equal(self, a: ConvexRegion, b: ConvexRegion) -> bool:
        return self.region_contains(a, b) and self.region_contains(b, a)

    def transform_half(self, h: HalfApartment, g: AffineIsometry) -> HalfApartment:
        image_root = g.linear.act_root(h.root)
        offset = self.pairing(image_root, g.shift)
        return self.half(image_root, h.sense, h.bound + offset)

    def transform_region(self, region: ConvexRegion, g: AffineIsometry) -> ConvexRegion:
        return self.region(self.transform_half(h, g) for h in region.halves)

    def extremum(self, region: ConvexRegion, root: Sequence[int], *, upper: bool):
        """Exact inf/sup of (root, .) over a region.

        Returns "empty", "unbounded" or (value, attained).
        """
        row = self.pairing_row(self.check_root(root))
        n = self.rank
        rows = [self.half_constraint(h) for h in region.halves]
        widened = [LinearConstraint(c.coeffs + (Fraction(0),), c.relation, c.bound) for c in rows]
        zero = self.zero()
        widened.append(LinearConstraint(row + (Fraction(-1),), "=", zero))
        system = ConstraintSystem(n + 1, tuple(widened))
        interval = project_interval(system, n, self.lex_rank)
        if interval is None:
            return "empty"
        lo, hi = interval
        side = hi if upper else lo
        if side is None:
            return "unbounded"
        value, strict = side
        return value, not strict

    # -- sectors -----------------------------------------------------------

    def sector(self, base: Point, direction: WeylElement) -> Sector:
        return Sector(tuple(base), direction)

    def fundamental_sector(self, base: Optional[Point] = None) -> Sector:
        return self.sector(base if base is not None else self.origin(), self.roots.identity())

    def sector_roots(self, direction: WeylElement) -> list[Root]:
        return [direction.act_root(self.roots.simple_root(i)) for i in range(1, self.rank + 1)]

    def sector_region(self, s: Sector) -> ConvexRegion:
        halves = []
        for r in self.sector_roots(s.direction):
            halves.append(self.half(r, 1, self.pairing(r, s.base)))
        return self.region(halves)

    def sector_cone(self, direction: WeylElement) -> list[tuple[Fraction, ...]]:
        """Generators of the direction cone: images of the dual basis."""
        gens = []
        for u in self.cone_basis:
            gens.append(tuple(
                sum(Fraction(direction.matrix[i][j]) * u[j] for j in range(self.rank))
                for i in range(self.rank)
            ))
        return gens

    def panel_cone(self, direction: WeylElement, panel_type: int) -> list[tuple[Fraction, ...]]:
        """Generators of the type-i face of the direction cone (1-based i)."""
        gens = self.sector_cone(direction)
        return [g for k, g in enumerate(gens, start=1) if k != panel_type]

    def panel_region(self, s: Sector, panel_type: int) -> ConvexRegion:
        """The type-i sector panel of s: the face where the i-th pairing is pinned."""
        halves = []
        for k, r in enumerate(self.sector_roots(s.direction), start=1):
            bound = self.pairing(r, s.base)
            halves.append(self.half(r, 1, bound))
            if k == panel_type:
                halves.append(self.half(r, -1, bound))
        return self.region(halves)

    def sector_contains_point(self, s: Sector, p: Point) -> bool:
        return self.region_contains_point(self.sector_region(s), p)

    def sectors_parallel(self, s: Sector, t: Sector) -> bool:
        """Parallel means bounded distance; inside one apartment, same direction."""
        return s.direction.matrix == t.direction.matrix

    def germ_equal(self, g1: SectorGerm, g2: SectorGerm) -> bool:
        return g1.base == g2.base and g1.direction.matrix == g2.direction.matrix

    # -- hulls and germ containment ----------------------------------------

    def convex_hull(self, points: Iterable[Point], sectors: Iterable[Sector] = ()) -> ConvexRegion:
        """Smallest intersection of half-apartments containing the input."""
        pts = [tuple(p) for p in points]
        secs = list(sectors)
        if not pts and not secs:
            raise ValueError("hull of nothing")
        halves = []
        for root in self.roots.positive_roots:
            values = [self.pairing(root, p) for p in pts]
            values += [self.pairing(root, s.base) for s in secs]
            row = self.pairing_row(root)
            lower_ok = True
            upper_ok = True
            for s in secs:
                for gen in self.sector_cone(s.direction):
                    slope = sum(c * g for c, g in zip(row, gen))
                    if slope < 0:
                        lower_ok = False
                    if slope > 0:
                        upper_ok = False
            if lower_ok:
                halves.append(self.half(root, 1, min(values)))
            if upper_ok:
                halves.append(self.half(root, -1, max(values)))
        return self.region(halves)

    def region_contains_germ(self, region: ConvexRegion, germ: SectorGerm) -> bool:
        """Does the region contain an initial chunk of the sector at its base?

        Decided with a single Fourier-Motzkin variable eps > 0 pushed along
        every edge of the direction cone.
        """
        base = germ.base
        if not self.region_contains_point(region, base):
            return False
        gens = self.sector_cone(germ.direction)
        rows = [LinearConstraint((Fraction(1),), GT, self.zero())]
        for h in region.halves:
            row = self.pairing_row(h.root)
            base_value = self.pairing(h.root, base)
            for gen in gens:
                slope = sum(c * g for c, g in zip(row, gen))
                if h.sense == 1:
                    rows.append(LinearConstraint((slope,), GE, h.bound - base_value))
                else:
                    rows.append(LinearConstraint((-slope,), GE, base_value - h.bound))
        return feasible(ConstraintSystem(1, tuple(rows)), self.lex_rank).sat

    def _cone_fit_rows(
        self, gens: Sequence[tuple[Fraction, ...]], region: ConvexRegion
    ) -> Optional[list[tuple[tuple[Fraction, ...], LambdaScalar, int]]]:
        """Per region half: (pairing row, bound, sense) after checking the cone
        points the right way; None when some half caps the cone."""
        out = []
        for h in region.halves:
            row = self.pairing_row(h.root)
            for gen in gens:
                slope = sum(c * g for c, g in zip(row, gen))
                if h.sense == 1 and slope < 0:
                    return None
                if h.sense == -1 and slope > 0:
                    return None
            out.append((row, h.bound, h.sense))
        return out

    def subsector_in_region(self, s: Sector, region: ConvexRegion) -> Optional[Sector]:
        """A minimal translate of s (along its own cone) inside the region."""
        gens = self.sector_cone(s.direction)
        checked = self._cone_fit_rows(gens, region)
        if checked is None:
            return None
        n = self.rank
        rows = []
        for k in range(n):
            rows.append(LinearConstraint(tuple(Fraction(1 if j == k else 0) for j in range(n)), GE, self.zero()))
        for row, bound, sense in checked:
            base_value = sum((x * c for c, x in zip(row, s.base)), self.zero())
            coeffs = tuple(sum(c * g for c, g in zip(row, gen)) for gen in gens)
            if sense == 1:
                rows.append(LinearConstraint(coeffs, GE, bound - base_value))
            else:
                rows.append(LinearConstraint(tuple(-c for c in coeffs), GE, base_value - bound))
        result = feasible(ConstraintSystem(n, tuple(rows)), self.lex_rank, witness_mode="low")
        if not result.sat:
            return None
        shift = [self.zero() for _ in range(n)]
        for t, gen in zip(result.witness, gens):
            for j in range(n):
                shift[j] = shift[j] + t * gen[j]
        return self.sector(tuple(b + sh for b, sh in zip(s.base, shift)), s.direction)

    def sector_fitting_region(self, direction: WeylElement, region: ConvexRegion) -> Optional[Sector]:
        """Some sector with the given direction inside the region, if any."""
        gens = self.sector_cone(direction)
        checked = self._cone_fit_rows(gens, region)
        if checked is None:
            return None
        rows = []
        for row, bound, sense in checked:
            if sense == 1:
                rows.append(LinearConstraint(row, GE, bound))
            else:
                rows.append(LinearConstraint(tuple(-c for c in row), GE, -bound))
        result = feasible(ConstraintSystem(self.rank, tuple(rows)), self.lex_rank)
        if not result.sat:
            return None
        return self.sector(result.witness, direction)

    def panel_fits_region(self, direction: WeylElement, panel_type: int, region: ConvexRegion) -> bool:
        """Can a type-i panel of a direction-w sector be placed inside the region?"""
        gens = self.panel_cone(direction, panel_type)
        checked = self._cone_fit_rows(gens, region)
        if checked is None:
            return False
        rows = []
        for row, bound, sense in checked:
            if sense == 1:
                rows.append(LinearConstraint(row, GE, bound))
            else:
                rows.append(LinearConstraint(tuple(-c for c in row), GE, -bound))
        return feasible(ConstraintSystem(self.rank, tuple(rows)), self.lex_rank).sat

    # -- germ galleries ------------------------------------------------------

    def germ_distance(self, g1: SectorGerm, g2: SectorGerm) -> WeylElement:
        """Gallery distance between two germs at a common base.

        Adjacent sector cones share a panel, which exchanges directions w and
        w*r_i; a gallery of types j_1..j_k from S to T therefore has
        dir(T) = dir(S)*r_{j_1}*...*r_{j_k}, and the distance is the product
        r_{j_k}*...*r_{j_1} = dir(T)^-1 * dir(S).  Its length is the minimal
        gallery length, and opposite germs sit at the longest element.
        """
        if g1.base != g2.base:
            raise ValueError("germ distance needs germs at a common base point")
        return g2.direction.inverse() * g1.direction

    def gallery(self, g1: SectorGerm, g2: SectorGerm) -> tuple[int, ...]:
        """Type sequence of a minimal sector gallery from g1 to g2."""
        delta = self.germ_distance(g1, g2)
        return delta.inverse().word

    # -- scans ---------------------------------------------------------------

    def directions(self) -> list[WeylElement]:
        return self.roots.weyl_elements()

    def sector_through(self, base: Point, target: Point) -> Sector:
        """First sector at base (canonical direction order) containing target."""
        for w in self.directions():
            s = self.sector(base, w)
            if self.sector_contains_point(s, target):
                return s
        raise AssertionError("direction cones cover the apartment")

    def sector_with_germ(self, base: Point, germ: SectorGerm) -> Optional[Sector]:
        """First sector at base whose region contains the given germ."""
        for w in self.directions():
            s = self.sector(base, w)
            if self.region_contains_germ(self.sector_region(s), germ):
                return s
        return None

    # -- classification --------------------------------------------------------

    def classify_region(self, region: ConvexRegion) -> RegionShape:
        key = tuple(region.halves)
        cached = self._classify_cache.get(key)
        if cached is None:
            cached = self._classify(region)
            self._classify_cache[key] = cached
        return cached

    def _classify(self, region: ConvexRegion) -> RegionShape:
        probe = self.region_feasible(region)
        if not probe.sat:
            return RegionShape("empty")
        for h in region.halves:
            if self.region_equal(region, ConvexRegion((h,))):
                return RegionShape("half-apartment", root=h.root, sense=h.sense, bound=h.bound)
        # Constant pairing directions; a wall pins exactly one positive root.
        witness = probe.witness
        constants: list[tuple[Root, LambdaScalar]] = []
        for root in self.roots.positive_roots:
            value = self.pairing(root, witness)
            if self.region_contains(self.wall_region(root, value), region):
                constants.append((root, value))
        for root, value in constants:
            if self.region_equal(region, self.wall_region(root, value)):
                return RegionShape("wall", root=root, bound=value)
        if constants:
            shape = self._match_panel(region, witness)
            if shape is not None:
                return shape
        return RegionShape("other")

    def _match_panel(self, region: ConvexRegion, witness: Point) -> Optional[RegionShape]:
        for w in self.directions():
            roots = self.sector_roots(w)
            for panel_type in range(1, self.rank + 1):
                bounds = []
                ok = True
                for k, root in enumerate(roots, start=1):
                    if k == panel_type:
                        lo = self.extremum(region, root, upper=False)
                        hi = self.extremum(region, root, upper=True)
                        if lo in ("empty", "unbounded") or hi in ("empty", "unbounded") or lo != hi:
                            ok = False
                            break
                        bounds.append(lo[0])
                    else:
                        lo = self.extremum(region, root, upper=False)
                        if lo in ("empty", "unbounded") or not lo[1]:
                            ok = False
                            break
                        bounds.append(lo[0])
                if not ok:
                    continue
                apex = self.solve_pairing(roots, bounds)
                candidate = self.panel_region(self.sector(apex, w), panel_type)
                if self.region_equal(region, candidate):
                    return RegionShape(
                        "sector-panel", apex=apex, direction=w, panel_type=panel_type
                    )
        return None


def _invert(matrix: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("pairing matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        factor = aug[col][col]
        aug[col] = [x / factor for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _solve(rows: Sequence[Sequence[Fraction]], rhs: list[LambdaScalar], lex_rank: int) -> Point:
    """Solve a square rational system with scalar right-hand sides."""
    n = len(rows)
    mat = [list(map(Fraction, row)) for row in rows]
    vec = list(rhs)
    for col in range(n):
        pivot = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        mat[col], mat[pivot] = mat[pivot], mat[col]
        vec[col], vec[pivot] = vec[pivot], vec[col]
        factor = mat[col][col]
        mat[col] = [x / factor for x in mat[col]]
        vec[col] = vec[col] / factor
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
                vec[r] = vec[r] - vec[col] * f
    return tuple(vec)
