import pytest

from lbk.apartment import Apartment
from lbk.atlas import Atlas, BuildingGerm, BuildingPoint, BuildingSector, global_distance
from lbk.axioms import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    TheoremViolation,
    build_retraction,
    check_a3,
    check_a4,
    check_a5,
    check_a6,
    check_ec,
    check_se,
    equivalence_suite,
    finite_cover,
    germ_coapartment,
    opposite_germ,
    recheck_a6_counterexample,
    sector_class_distance,
)
from lbk.fixtures import broken_pair, drop_chart, fan, lambda_tree, shifted_rays, single_apartment
from lbk.rootsystem import build_root_system


@pytest.fixture(scope="module")
def tripod():
    return lambda_tree(3)


def disconnected_pair():
    ap = Apartment(build_root_system("A1"), 1)
    return Atlas(ap, ["1", "2"], {})


# -- A4 ---------------------------------------------------------------------


def test_a4_single_chart(tripod):
    assert check_a4(single_apartment("A2", 1)).verdict == PASS


def test_a4_tripod_cross_rays_witness(tripod):
    ap = tripod.apartment
    s1 = BuildingSector(tripod.index("12"), ap.sector(ap.origin(), ap.roots.simple(1)))  # ray 2
    s2 = BuildingSector(tripod.index("13"), ap.sector(ap.origin(), ap.roots.simple(1)))  # ray 3
    report = check_a4(tripod)
    assert report.verdict == PASS
    witness = None
    for chart in tripod.charts():
        from lbk.axioms import fit_subsector

        if fit_subsector(tripod, s1, chart) and fit_subsector(tripod, s2, chart):
            witness = chart
            break
    assert tripod.name(witness) == "23"


def test_a4_disconnected_fails():
    report = check_a4(disconnected_pair())
    assert report.verdict == FAIL
    assert report.counterexamples()


# -- A6 ---------------------------------------------------------------------


def test_a6_vacuous_below_three_charts():
    assert check_a6(broken_pair()).verdict == PASS
    assert check_a6(single_apartment("A1", 1)).verdict == PASS


def test_a6_tripod_branch_point(tripod):
    report = check_a6(tripod)
    assert report.verdict == PASS
    assert len(report.lines) == 1
    assert "witness=(0)" in report.lines[0].detail


def test_a6_shifted_rays_fails_with_recheckable_certificate():
    atlas = shifted_rays()
    report = check_a6(atlas)
    assert report.verdict == FAIL
    bad = report.counterexamples()[0]
    assert bad.config == "(1,2,3)"
    assert recheck_a6_counterexample(atlas, 0, 1, 2)


# -- EC ---------------------------------------------------------------------


def test_ec_tripod_witnesses(tripod):
    report = check_ec(tripod)
    assert report.verdict == PASS
    details = {line.config: line.detail for line in report.lines}
    assert details["(12,13)"] == "witness=23"
    assert details["(12,23)"] == "witness=13"
    assert details["(13,23)"] == "witness=12"


def test_ec_broken_pair_fails():
    report = check_ec(broken_pair())
    assert report.verdict == FAIL
    assert report.counterexamples()[0].config == "(1,2)"


def test_ec_single_chart_vacuous():
    report = check_ec(single_apartment("A2", 1))
    assert report.verdict == PASS
    assert report.lines[0].detail == "detail=vacuous"


# -- SE ---------------------------------------------------------------------


def test_se_vacuous_without_panels():
    assert check_se(single_apartment("B2", 1)).verdict == PASS


def test_se_tripod_two_sides(tripod):
    report = check_se(tripod)
    assert report.verdict == PASS
    details = {line.config: line.detail for line in report.lines}
    # sector toward end 3 (chart 13, direction r1) meets chart 12 in the branch point
    assert details["(chart=12,sector=13:(0):1)"] == "witness=13+23"


def test_se_pruned_fan_fails():
    report = check_se(drop_chart(fan(3), "23"))
    assert report.verdict == FAIL


def test_se_broken_pair_fails():
    assert check_se(broken_pair()).verdict == FAIL


# -- retraction ----------------------------------------------------------------


def ray1_germ(tripod):
    ap = tripod.apartment
    return BuildingGerm(tripod.index("12"), ap.fundamental_sector())


def test_retraction_identity_on_target(tripod):
    ap = tripod.apartment
    rho = build_retraction(tripod, ray1_germ(tripod), tripod.index("12"))
    for value in (3, 0, -2):
        bp = BuildingPoint(tripod.index("12"), ap.simple_point(value))
        assert rho.evaluate(bp) == bp


def test_retraction_folds_far_ray(tripod):
    ap = tripod.apartment
    rho = build_retraction(tripod, ray1_germ(tripod), tripod.index("12"))
    y = BuildingPoint(tripod.index("23"), ap.simple_point(-2))  # ray 3 at 2
    image = rho.evaluate(y)
    assert image.chart == tripod.index("12")
    assert image.point == ap.simple_point(-2)  # ray 2 at 2


def test_retraction_fixes_shared_ray(tripod):
    ap = tripod.apartment
    rho = build_retraction(tripod, ray1_germ(tripod), tripod.index("12"))
    y = BuildingPoint(tripod.index("13"), ap.simple_point(4))  # on ray 1
    assert rho.evaluate(y).point == ap.simple_point(4)


def test_retraction_spot_distances(tripod):
    ap = tripod.apartment
    rho = build_retraction(tripod, ray1_germ(tripod), tripod.index("12"))
    y = BuildingPoint(tripod.index("23"), ap.simple_point(-2))
    z = BuildingPoint(tripod.index("12"), ap.simple_point(-1))
    assert global_distance(tripod, y, z) == ap.scalar(6)
    assert ap.metric(rho.evaluate(y).point, rho.evaluate(z).point) == ap.scalar(2)


def test_retraction_requires_germ_in_chart(tripod):
    ap = tripod.apartment
    germ = BuildingGerm(tripod.index("12"), ap.sector(ap.simple_point(1), ap.roots.simple(1)))
    with pytest.raises(TheoremViolation):
        build_retraction(tripod, germ, tripod.index("23"))


def test_retraction_evaluation_fails_off_atlas():
    atlas = broken_pair()
    ap = atlas.apartment
    germ = BuildingGerm(0, ap.sector(ap.origin(), ap.roots.simple(1)))
    rho = build_retraction(atlas, germ, 0)
    stray = BuildingPoint(1, ap.simple_point(-1))
    with pytest.raises(TheoremViolation):
        rho.evaluate(stray)


def test_germ_stabilizer_is_trivial():
    ap = Apartment(build_root_system("B2"), 2)
    for w in ap.directions():
        germ = ap.sector(ap.origin(), w).germ()
        fixing = []
        for u in ap.directions():
            if (u * w).matrix == w.matrix and u.act_point(germ.base) == germ.base:
                fixing.append(u)
        assert [f.word for f in fixing] == [()]


def test_a5_tripod(tripod):
    assert check_a5(tripod, samples=60).verdict == PASS


def test_a5_fan():
    assert check_a5(fan(3), samples=40).verdict == PASS


# -- section 4 searches -----------------------------------------------------------


def test_coapartment_same_chart(tripod):
    ap = tripod.apartment
    g1 = BuildingGerm(0, ap.sector(ap.origin(), ap.roots.identity()))
    g2 = BuildingGerm(0, ap.sector(ap.origin(), ap.roots.simple(1)))
    result = germ_coapartment(tripod, g1, g2)
    assert result.verdict == PASS and result.chart == 0


def test_coapartment_tripod_opposite_rays(tripod):
    ap = tripod.apartment
    g2 = BuildingGerm(tripod.index("12"), ap.sector(ap.origin(), ap.roots.simple(1)))
    g3 = BuildingGerm(tripod.index("13"), ap.sector(ap.origin(), ap.roots.simple(1)))
    result = germ_coapartment(tripod, g2, g3)
    assert tripod.name(result.chart) == "23"
    assert result.final_length == 1
    assert result.initial_length == 1


def test_coapartment_distinct_bases(tripod):
    ap = tripod.apartment
    g1 = BuildingGerm(tripod.index("12"), ap.sector(ap.simple_point(-1), ap.roots.simple(1)))
    g2 = BuildingGerm(tripod.index("13"), ap.sector(ap.origin(), ap.roots.simple(1)))
    result = germ_coapartment(tripod, g1, g2)
    assert result.verdict == PASS
    assert tripod.name(result.chart) == "23"


def test_coapartment_descent_never_lengthens():
    for n, k in ((3, 1), (4, 2)):
        atlas = lambda_tree(n, k)
        ap = atlas.apartment
        charts = list(atlas.charts())
        for c1 in charts:
            for c2 in charts:
                for w1 in ap.directions():
                    for w2 in ap.directions():
                        g1 = BuildingGerm(c1, ap.sector(ap.origin(), w1))
                        g2 = BuildingGerm(c2, ap.sector(ap.origin(), w2))
                        result = germ_coapartment(atlas, g1, g2)
                        assert result.verdict == PASS
                        if result.initial_length is not None and result.final_length is not None:
                            assert result.final_length <= result.initial_length


def test_opposite_germ_rank_one(tripod):
    ap = tripod.apartment
    germ = ray1_germ(tripod)
    result = opposite_germ(tripod, germ, tripod.index("23"), ap.simple_point(-2))
    assert result.verdict == PASS
    assert result.contains_point
    assert result.maximal_length == 1  # longest element of the rank-1 group


def test_opposite_germ_single_chart():
    atlas = single_apartment("A2", 1)
    ap = atlas.apartment
    germ = BuildingGerm(0, ap.sector(ap.origin(), ap.roots.identity()))
    y = ap.simple_point(2, 1)
    result = opposite_germ(atlas, germ, 0, y)
    assert result.verdict == PASS
    assert result.maximal_length == ap.roots.longest_element().length
    assert result.contains_point


def test_opposite_germ_at_base_point(tripod):
    ap = tripod.apartment
    germ = ray1_germ(tripod)
    result = opposite_germ(tripod, germ, tripod.index("12"), ap.origin())
    assert result.verdict == PASS
    assert result.contains_point


def test_finite_cover_target_chart(tripod):
    ap = tripod.apartment
    germ = ray1_germ(tripod)
    cover = finite_cover(tripod, germ, tripod.index("12"))
    assert cover.verdict == PASS
    assert len(cover.pieces) == 1
    region, chart = cover.pieces[0]
    assert ap.region_equal(region, ap.whole_region())
    assert tripod.name(chart) == "12"


def test_finite_cover_tripod_two_sides(tripod):
    germ = ray1_germ(tripod)
    cover = finite_cover(tripod, germ, tripod.index("23"))
    assert cover.verdict == PASS
    assert len(cover.pieces) == 2
    assert sorted(cover.chart_names(tripod)) == ["12", "13"]


def test_finite_cover_five_end_tree():
    atlas = lambda_tree(5)
    ap = atlas.apartment
    germ = BuildingGerm(atlas.index("12"), ap.fundamental_sector())
    for chart in atlas.charts():
        cover = finite_cover(atlas, germ, chart)
        assert cover.verdict == PASS
        assert len(cover.pieces) <= 2


def test_finite_cover_pieces_relate_to_germ(tripod):
    ap = tripod.apartment
    germ = ray1_germ(tripod)
    cover = finite_cover(tripod, germ, tripod.index("23"))
    for region, chart in cover.pieces:
        assert tripod.transport_germ(germ, chart) is not None
        assert not ap.region_empty(region)


# -- equivalence ---------------------------------------------------------------


def test_opposite_germ_rank_two_cross_chart():
    import random

    from lbk.lexq import LambdaScalar
    from fractions import Fraction as Q

    f4 = fan(4)
    ap = f4.apartment
    rng = random.Random(5)
    germ = BuildingGerm(f4.index("12"), ap.sector(ap.origin(), ap.roots.identity()))
    for _ in range(6):
        y = tuple(LambdaScalar([Q(rng.randint(-8, 8), rng.randint(1, 4))]) for _ in range(2))
        result = opposite_germ(f4, germ, f4.index("34"), y)
        assert result.verdict == PASS
        assert result.contains_point


def test_finite_cover_rank_two_disjoint_chart():
    f4 = fan(4)
    ap = f4.apartment
    germ = BuildingGerm(f4.index("12"), ap.sector(ap.origin(), ap.roots.identity()))
    cover = finite_cover(f4, germ, f4.index("34"))
    assert cover.verdict == PASS
    # every piece shares a chart that also holds the germ (charts with leaf 1)
    assert set(cover.chart_names(f4)) <= {"13", "14"}
    assert len(cover.pieces) >= 2


def test_coapartment_rank_two_random_pairs():
    import random

    from lbk.lexq import LambdaScalar
    from fractions import Fraction as Q

    f4 = fan(4)
    ap = f4.apartment
    rng = random.Random(7)

    def rp():
        return tuple(LambdaScalar([Q(rng.randint(-8, 8), rng.randint(1, 4))]) for _ in range(2))

    for _ in range(10):
        c1, c2 = rng.sample(range(f4.size), 2)
        g1 = BuildingGerm(c1, ap.sector(rp(), rng.choice(ap.directions())))
        g2 = BuildingGerm(c2, ap.sector(rp(), rng.choice(ap.directions())))
        assert germ_coapartment(f4, g1, g2).verdict == PASS


def test_equivalence_tripod(tripod):
    suite = equivalence_suite(tripod, samples=60)
    assert suite.precondition_ok
    assert not suite.alarms
    assert all(r.verdict == PASS for r in suite.reports.values())


def test_equivalence_negative_fixtures_fail_a4_gate():
    for atlas in (broken_pair(), shifted_rays()):
        suite = equivalence_suite(atlas, samples=40)
        assert not suite.precondition_ok
        assert not suite.alarms  # assertions only fire when the gate holds


def test_sector_class_distance(tripod):
    ap = tripod.apartment
    s1 = BuildingSector(tripod.index("12"), ap.sector(ap.origin(), ap.roots.simple(1)))
    s2 = BuildingSector(tripod.index("13"), ap.sector(ap.origin(), ap.roots.simple(1)))
    delta, chart = sector_class_distance(tripod, s1, s2)
    assert delta.length == 1
    assert tripod.name(chart) == "23"


def test_a3_passes_on_fixtures(tripod):
    assert check_a3(tripod).verdict == PASS
    assert check_a3(fan(3)).verdict == PASS
    assert check_a3(disconnected_pair()).verdict == FAIL


def test_cover_budget_exhaustion_is_inconclusive(tripod, monkeypatch):
    monkeypatch.setenv("LBK_BUDGET", "1")
    cover = finite_cover(tripod, ray1_germ(tripod), tripod.index("23"))
    assert cover.verdict == INCONCLUSIVE


def test_report_verdict_precedence():
    from lbk.axioms import AxiomReport

    report = AxiomReport("A4")
    report.add("a", PASS)
    assert report.verdict == PASS
    report.add("b", INCONCLUSIVE)
    assert report.verdict == INCONCLUSIVE
    report.add("c", FAIL)
    assert report.verdict == FAIL
    rendered = report.rendered()
    assert rendered[-1].endswith("verdict=fail")
    assert "checked=3 pass=1 fail=1 inconclusive=1" in rendered[-1]
