from fractions import Fraction as Q

import pytest

from lbk.atlas import validate
from lbk.fixtures import fan, lambda_tree, shifted_rays
from lbk.lexq import LambdaScalar
from lbk.modelfile import (
    ModelFormatError,
    format_root,
    format_scalar,
    parse_germ_arg,
    parse_model,
    parse_point,
    parse_point_arg,
    parse_root_expr,
    parse_scalar,
    serialize_model,
)

TRIPOD = """\
# three ends glued at the origin
lambda 1
roots A1
charts 3
name 1 12
name 2 13
name 3 23
glue 12 13 : ge a1 0 ; word ; t (0)
glue 12 23 : le a1 0 ; word 1 ; t (0)
glue 13 23 : le a1 0 ; word 1 ; t (0)
"""


def test_parse_minimal_model():
    atlas = parse_model(TRIPOD)
    assert atlas.size == 3
    assert atlas.chart_names == ["12", "13", "23"]
    assert validate(atlas).ok
    assert len(atlas.transitions) == 6  # reverses derived


def test_roundtrip_fixtures():
    for build in (lambda: lambda_tree(3), lambda: lambda_tree(4, 2), lambda: fan(3), lambda: shifted_rays()):
        atlas = build()
        text = serialize_model(atlas)
        again = parse_model(text)
        assert serialize_model(again) == text
        assert again.chart_names == atlas.chart_names
        assert validate(again).ok == validate(atlas).ok


def test_scalar_literals():
    assert parse_scalar("3/2", 1) == LambdaScalar([Q(3, 2)])
    assert parse_scalar("(1|0)", 2) == LambdaScalar([1, 0])
    assert parse_scalar("-1/4|2", 2) == LambdaScalar([Q(-1, 4), 2])
    # a bare rational embeds at higher rank
    assert parse_scalar("0", 2) == LambdaScalar.zero(2)
    assert format_scalar(LambdaScalar([Q(3, 2), 0])) == "3/2"
    assert format_scalar(LambdaScalar([1, Q(-2, 3)])) == "(1|-2/3)"
    with pytest.raises(ModelFormatError):
        parse_scalar("1|2|3", 2)
    with pytest.raises(ModelFormatError):
        parse_scalar("x", 1)


def test_point_literals():
    from lbk.apartment import Apartment
    from lbk.rootsystem import build_root_system

    ap = Apartment(build_root_system("A2"), 2)
    p = parse_point("(1|0, 0|1/2)", ap)
    assert p == (LambdaScalar([1, 0]), LambdaScalar([0, Q(1, 2)]))
    with pytest.raises(ModelFormatError):
        parse_point("(1|0)", ap)  # wrong arity
    with pytest.raises(ModelFormatError):
        parse_point("1|0, 0|0", ap)  # missing parens


def test_root_expressions():
    from lbk.apartment import Apartment
    from lbk.rootsystem import build_root_system

    ap = Apartment(build_root_system("G2"), 1)
    assert parse_root_expr("a1", ap) == (1, 0)
    assert parse_root_expr("3a1+2a2", ap) == (3, 2)
    assert format_root((3, 2)) == "3a1+2a2"
    assert format_root((1, 1)) == "a1+a2"
    assert parse_root_expr("2a1+a2", ap) == (2, 1)
    with pytest.raises(ModelFormatError):
        parse_root_expr("a1+a3", ap)
    with pytest.raises(ModelFormatError):
        parse_root_expr("5a1+a2", ap)  # not a root of G2


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ModelFormatError) as err:
        parse_model("lambda 1\nroots A1\ncharts 2\nglue 1 2 : bogus a1 0 ; word ; t (0)\n")
    assert "line 4" in str(err.value)
    with pytest.raises(ModelFormatError):
        parse_model("roots A1\ncharts 1\n")  # missing lambda
    with pytest.raises(ModelFormatError):
        parse_model("lambda 1\ncharts 1\n")  # missing roots
    with pytest.raises(ModelFormatError):
        parse_model("lambda 1\nroots A1\n")  # missing charts
    with pytest.raises(ModelFormatError):
        parse_model("lambda 1\nroots A1\ncharts 2\nglue 1 1 : ; word ; t (0)\n")


def test_cartan_directive():
    atlas = parse_model("lambda 1\ncartan [[2,-1],[-1,2]]\ncharts 1\n")
    assert atlas.apartment.rank == 2
    assert len(atlas.apartment.roots.positive_roots) == 3


def test_point_and_germ_args():
    atlas = lambda_tree(3)
    bp = parse_point_arg("chart:23 (-2)", atlas)
    assert atlas.name(bp.chart) == "23"
    assert bp.point == (LambdaScalar.rational(-2),)
    germ = parse_germ_arg("chart:12 (0) ; 1", atlas)
    assert germ.sector.direction.word == (1,)
    germ2 = parse_germ_arg("chart:12 (0)", atlas)
    assert germ2.sector.direction.is_identity()
    with pytest.raises(ModelFormatError):
        parse_point_arg("(0)", atlas)
    with pytest.raises(ValueError):
        parse_point_arg("chart:99 (0)", atlas)


def test_explicit_asymmetric_glue_is_kept():
    text = (
        "lambda 1\nroots A1\ncharts 2\n"
        "glue 1 2 : ge a1 0 ; word ; t (0)\n"
        "glue 2 1 : ge a1 1 ; word ; t (0)\n"  # deliberately not the inverse image
    )
    atlas = parse_model(text)
    report = validate(atlas)
    assert not report.ok
    assert any("symmetry" in issue for issue in report.issues)
    # the broken reverse survives a serialization round trip
    again = parse_model(serialize_model(atlas))
    assert not validate(again).ok
