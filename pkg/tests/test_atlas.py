import pytest

from lbk.apartment import Apartment
from lbk.atlas import (
    Atlas,
    BuildingPoint,
    NoCommonChartError,
    Transition,
    common_chart,
    global_distance,
    intersection_region,
    validate,
)
from lbk.fixtures import broken_pair, fan, lambda_tree, shifted_rays, single_apartment
from lbk.rootsystem import build_root_system


def two_chart_atlas(ap, region, iso):
    return Atlas(
        ap,
        ["1", "2"],
        {
            (0, 1): Transition(region, iso),
            (1, 0): Transition(ap.transform_region(region, iso), iso.inverse()),
        },
    )


def test_validate_single_chart():
    report = validate(single_apartment("A2", 1))
    assert report.ok and not report.issues


def test_validate_glued_pair():
    ap = Apartment(build_root_system("A2"), 1)
    atlas = two_chart_atlas(ap, ap.half_region((1, 0), 1, 0), ap.isometry(ap.roots.identity()))
    assert validate(atlas).ok


def test_validate_reports_broken_symmetry():
    ap = Apartment(build_root_system("A1"), 1)
    identity = ap.isometry(ap.roots.identity())
    atlas = Atlas(
        ap,
        ["1", "2"],
        {
            (0, 1): Transition(ap.half_region((1,), 1, 0), identity),
            (1, 0): Transition(ap.half_region((1,), 1, 1), identity),  # wrong region
        },
    )
    report = validate(atlas)
    assert not report.ok
    assert any("symmetry" in issue for issue in report.issues)


def test_validate_reports_missing_reverse_and_empty_overlap():
    ap = Apartment(build_root_system("A1"), 1)
    identity = ap.isometry(ap.roots.identity())
    atlas = Atlas(ap, ["1", "2"], {(0, 1): Transition(ap.half_region((1,), 1, 0), identity)})
    report = validate(atlas)
    assert any("no reverse" in issue for issue in report.issues)

    empty = ap.intersect(ap.half_region((1,), 1, 1), ap.half_region((1,), -1, 0))
    atlas2 = two_chart_atlas(ap, empty, identity)
    report2 = validate(atlas2)
    assert any("empty" in issue for issue in report2.issues)


def test_validate_reports_cocycle_violation():
    ap = Apartment(build_root_system("A1"), 1)
    identity = ap.isometry(ap.roots.identity())
    shifted = ap.translation(ap.simple_point(1))
    ray = ap.half_region((1,), 1, 0)
    # 1->2 and 1->3 use the identity, 2->3 shifts: composite moves points.
    transitions = {
        (0, 1): Transition(ray, identity),
        (1, 0): Transition(ray, identity),
        (0, 2): Transition(ray, identity),
        (2, 0): Transition(ray, identity),
        (1, 2): Transition(ray, shifted),
        (2, 1): Transition(ap.transform_region(ray, shifted), shifted.inverse()),
    }
    report = validate(Atlas(ap, ["1", "2", "3"], transitions))
    assert any("cocycle" in issue for issue in report.issues)


def test_common_chart_examples():
    tripod = lambda_tree(3)
    ap = tripod.apartment
    same = BuildingPoint(0, ap.simple_point(5))
    assert common_chart(tripod, same, BuildingPoint(0, ap.simple_point(-3))) == 0

    ray2 = BuildingPoint(tripod.index("12"), ap.simple_point(-1))
    ray3 = BuildingPoint(tripod.index("13"), ap.simple_point(-2))
    assert tripod.name(common_chart(tripod, ray2, ray3)) == "23"

    ap1 = Apartment(build_root_system("A1"), 1)
    disconnected = Atlas(ap1, ["1", "2"], {})
    p = BuildingPoint(0, ap1.simple_point(0))
    q = BuildingPoint(1, ap1.simple_point(0))
    assert common_chart(disconnected, p, q) is None


def test_global_distance_examples():
    tripod = lambda_tree(3)
    ap = tripod.apartment
    p = BuildingPoint(tripod.index("23"), ap.simple_point(1))
    assert global_distance(tripod, p, p).is_zero()

    y = BuildingPoint(tripod.index("12"), ap.simple_point(-1))  # ray2 @ 1
    z = BuildingPoint(tripod.index("13"), ap.simple_point(-2))  # ray3 @ 2
    assert global_distance(tripod, y, z) == ap.scalar(6)

    single = single_apartment("A2", 1)
    u = BuildingPoint(0, single.apartment.simple_point(1, 0))
    v = BuildingPoint(0, single.apartment.simple_point(0, 1))
    assert global_distance(single, u, v) == single.apartment.metric(u.point, v.point)


def test_global_distance_no_common_chart():
    ap1 = Apartment(build_root_system("A1"), 1)
    disconnected = Atlas(ap1, ["1", "2"], {})
    with pytest.raises(NoCommonChartError):
        global_distance(
            disconnected,
            BuildingPoint(0, ap1.simple_point(0)),
            BuildingPoint(1, ap1.simple_point(0)),
        )


def test_transport_preserves_metric():
    tripod = lambda_tree(3, 2)
    ap = tripod.apartment
    a = tripod.index("12")
    b = tripod.index("23")
    p = ap.point([ap.scalar(-1)])
    q = ap.point([ap.scalar(-3)])
    tp = tripod.transport_point(a, p, b)
    tq = tripod.transport_point(a, q, b)
    assert tp is not None and tq is not None
    assert ap.metric(tp, tq) == ap.metric(p, q)


def test_points_equal_through_transition():
    tripod = lambda_tree(3)
    ap = tripod.apartment
    branch_in_12 = BuildingPoint(tripod.index("12"), ap.origin())
    branch_in_23 = BuildingPoint(tripod.index("23"), ap.origin())
    assert tripod.points_equal(branch_in_12, branch_in_23)
    assert not tripod.points_equal(
        branch_in_12, BuildingPoint(tripod.index("23"), ap.simple_point(1))
    )


def test_intersection_region_classifier():
    tripod = lambda_tree(3)
    i, j, k = (tripod.index(n) for n in ("12", "13", "23"))
    assert intersection_region(tripod, i, j).shape.kind == "half-apartment"

    f4 = fan(4)
    a, b = f4.index("12"), f4.index("34")
    assert intersection_region(f4, a, b).shape.kind == "wall"

    ap1 = Apartment(build_root_system("A1"), 1)
    disconnected = Atlas(ap1, ["1", "2"], {})
    assert intersection_region(disconnected, 0, 1).shape.kind == "empty"
    assert intersection_region(disconnected, 0, 1).region is None


def test_negative_fixtures_validate_clean():
    assert validate(broken_pair()).ok
    assert validate(shifted_rays()).ok
