"""Command line frontend: parse model files, run checkers, emit reports.

Exit codes: 0 all pass, 1 any failure, 2 malformed input, 3 inconclusive.
Reports are deterministic for a fixed seed.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import axioms as ax
from . import fixtures
from .atlas import Atlas, NoCommonChartError, validate
from .infinity import infinity_complex
from .modelfile import (
    ModelFormatError,
    format_point,
    format_scalar,
    format_word,
    parse_germ_arg,
    parse_model,
    parse_point_arg,
    serialize_model,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_MALFORMED = 2
EXIT_INCONCLUSIVE = 3

AXIOM_ORDER = ["A1", "A2", "A3", "A4", "A5", "A6", "EC", "SE"]


def _load(path: str) -> Atlas:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_model(fh.read())
    except OSError as exc:
        raise ModelFormatError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_validate(args) -> int:
    atlas = _load(args.model)
    report = validate(atlas)
    print("\n".join(report.lines()))
    return EXIT_PASS if report.ok else EXIT_FAIL


def _cmd_axioms(args) -> int:
    atlas = _load(args.model)
    wanted = AXIOM_ORDER if not args.only else [w.strip().upper() for w in args.only.split(",")]
    for w in wanted:
        if w not in AXIOM_ORDER:
            raise ModelFormatError(f"unknown axiom {w!r} (choose from {','.join(AXIOM_ORDER)})")
    runners = {
        "A1": lambda: ax.check_a1(atlas),
        "A2": lambda: ax.check_a2(atlas),
        "A3": lambda: ax.check_a3(atlas, samples=min(args.samples, 60), seed=args.seed),
        "A4": lambda: ax.check_a4(atlas, samples=args.samples, seed=args.seed),
        "A5": lambda: ax.check_a5(atlas, samples=args.samples, seed=args.seed),
        "A6": lambda: ax.check_a6(atlas),
        "EC": lambda: ax.check_ec(atlas),
        "SE": lambda: ax.check_se(atlas, seed=args.seed),
    }
    lines: list[str] = []
    verdicts: dict[str, str] = {}
    for name in AXIOM_ORDER:
        if name not in wanted:
            continue
        report = runners[name]()
        verdicts[name] = report.verdict
        lines.extend(report.rendered())
    if all(name in verdicts for name in ("A3", "A4", "A5", "A6", "EC", "SE")):
        precondition = verdicts["A3"] == ax.PASS and verdicts["A4"] == ax.PASS
        lines.append(
            "EQUIVALENCE precondition="
            + ("ok" if precondition else "unmet")
            + " "
            + ",".join(f"{n}={verdicts[n]}" for n in ("A6", "EC", "SE", "A5"))
        )
        if precondition:
            if not (verdicts["A6"] == verdicts["EC"] == verdicts["SE"]):
                lines.append("ALARM exchange-equivalence-broken")
            if verdicts["SE"] == ax.PASS and verdicts["A5"] != ax.PASS:
                lines.append("ALARM retraction-missing-despite-exchange")
    text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    if any(v == ax.FAIL for v in verdicts.values()):
        return EXIT_FAIL
    if any(v == ax.INCONCLUSIVE for v in verdicts.values()):
        return EXIT_INCONCLUSIVE
    return EXIT_PASS


def _cmd_distance(args) -> int:
    atlas = _load(args.model)
    p = parse_point_arg(args.point1, atlas)
    q = parse_point_arg(args.point2, atlas)
    try:
        from .atlas import global_distance

        value = global_distance(atlas, p, q)
    except NoCommonChartError as exc:
        print(f"fail: {exc}")
        return EXIT_FAIL
    print(format_scalar(value))
    return EXIT_PASS


def _cmd_retract(args) -> int:
    atlas = _load(args.model)
    chart = atlas.index(args.chart)
    germ = parse_germ_arg(args.germ, atlas)
    try:
        rho = ax.build_retraction(atlas, germ, chart)
    except ax.TheoremViolation as exc:
        print(f"fail: {exc}")
        return EXIT_FAIL
    code = EXIT_PASS
    for literal in args.points:
        bp = parse_point_arg(literal, atlas)
        try:
            image = rho.evaluate(bp)
        except ax.TheoremViolation as exc:
            print(f"fail: {exc}")
            code = EXIT_FAIL
            continue
        print(f"chart:{atlas.name(image.chart)} {format_point(image.point)}")
    return code


def _cmd_infinity(args) -> int:
    atlas = _load(args.model)
    complex_ = infinity_complex(atlas)
    print("\n".join(complex_.lines()))
    return EXIT_PASS if not complex_.issues else EXIT_FAIL


def _cmd_gallery(args) -> int:
    atlas = _load(args.model)
    g1 = parse_germ_arg(args.germ1, atlas)
    g2 = parse_germ_arg(args.germ2, atlas)
    chart = None
    for c in atlas.charts():
        if atlas.transport_germ(g1, c) is not None and atlas.transport_germ(g2, c) is not None:
            chart = c
            break
    if chart is None:
        print("fail: germs share no chart")
        return EXIT_FAIL
    ap = atlas.apartment
    s1 = atlas.transport_germ(g1, chart)
    s2 = atlas.transport_germ(g2, chart)
    try:
        delta = ap.germ_distance(s1.germ(), s2.germ())
    except ValueError as exc:
        raise ModelFormatError(str(exc)) from None
    types = ap.gallery(s1.germ(), s2.germ())
    print(f"types {format_word(types) if types else '-'}")
    print(f"delta {delta!r}")
    print(f"length {delta.length}")
    return EXIT_PASS


def _cmd_fixture(args) -> int:
    kind = args.kind
    if kind == "tree":
        atlas = fixtures.lambda_tree(args.ends, args.lam)
    elif kind == "fan":
        atlas = fixtures.fan(args.leaves, args.roots, args.lam)
    elif kind == "single":
        atlas = fixtures.single_apartment(args.roots, args.lam)
    elif kind == "broken-pair":
        atlas = fixtures.broken_pair(args.lam)
    elif kind == "shifted-rays":
        atlas = fixtures.shifted_rays(args.lam)
    else:  # pragma: no cover - argparse restricts choices
        raise ModelFormatError(f"unknown fixture kind {kind!r}")
    _emit(serialize_model(atlas), args.output)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lbk",
        description="Geometry and axiom checks for atlas-presented affine models.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="structural checks on a model file")
    p.add_argument("model")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("axioms", help="run axiom checkers")
    p.add_argument("model")
    p.add_argument("--only", default="", help="comma-separated subset, e.g. A6,EC,SE")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_axioms)

    p = sub.add_parser("distance", help="global distance between two points")
    p.add_argument("model")
    p.add_argument("point1")
    p.add_argument("point2")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("retract", help="evaluate a germ retraction at points")
    p.add_argument("model")
    p.add_argument("--chart", required=True, help="target chart label")
    p.add_argument("--germ", required=True, help="chart:<label> (<point>) ; <word>")
    p.add_argument("points", nargs="+")
    p.set_defaults(func=_cmd_retract)

    p = sub.add_parser("infinity", help="chamber system at infinity")
    p.add_argument("model")
    p.set_defaults(func=_cmd_infinity)

    p = sub.add_parser("gallery", help="minimal sector gallery between two germs")
    p.add_argument("model")
    p.add_argument("germ1")
    p.add_argument("germ2")
    p.set_defaults(func=_cmd_gallery)

    p = sub.add_parser("fixture", help="emit a deterministic model file")
    p.add_argument("kind", choices=["tree", "fan", "single", "broken-pair", "shifted-rays"])
    p.add_argument("--ends", type=int, default=3)
    p.add_argument("--leaves", type=int, default=3)
    p.add_argument("--roots", default="A1")
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_fixture)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ModelFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    raise SystemExit(main())
