"""Affine model geometry over lex-ordered rationals, at desk scale.

Exact arithmetic throughout: scalars are lexicographic rational tuples,
feasibility questions go through Fourier-Motzkin elimination, and every
checker verdict is backed by a witness or counterexample that re-validates
by direct substitution.
"""

from .lexq import LambdaScalar, abs_val, compare
from .linarith import (
    EQ,
    GE,
    GT,
    ConstraintSystem,
    Feasibility,
    LinearConstraint,
    eliminate,
    feasible,
)
from .rootsystem import (
    RootSystem,
    WeylElement,
    build_root_system,
    enumerate_weyl,
    invert,
    multiply,
    simple_reflection,
)
from .apartment import (
    AffineIsometry,
    Apartment,
    ConvexRegion,
    HalfApartment,
    RegionShape,
    Sector,
    SectorGerm,
    format_point,
)
from .atlas import (
    Atlas,
    BuildingGerm,
    BuildingPoint,
    BuildingSector,
    IntersectionInfo,
    NoCommonChartError,
    Transition,
    common_chart,
    global_distance,
    intersection_region,
    validate,
)
from .infinity import InfinityComplex, infinity_complex
from .axioms import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    AxiomReport,
    CoapartmentResult,
    CoverResult,
    EquivalenceReport,
    OppositeResult,
    Retraction,
    TheoremViolation,
    build_retraction,
    check_a1,
    check_a2,
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
)
from . import fixtures
from .modelfile import (
    ModelFormatError,
    parse_germ_arg,
    parse_model,
    parse_point_arg,
    serialize_model,
)

__version__ = "0.1.0"

__all__ = [
    "LambdaScalar",
    "abs_val",
    "compare",
    "GE",
    "GT",
    "EQ",
    "LinearConstraint",
    "ConstraintSystem",
    "Feasibility",
    "feasible",
    "eliminate",
    "RootSystem",
    "WeylElement",
    "build_root_system",
    "simple_reflection",
    "multiply",
    "invert",
    "enumerate_weyl",
    "Apartment",
    "AffineIsometry",
    "ConvexRegion",
    "HalfApartment",
    "RegionShape",
    "Sector",
    "SectorGerm",
    "format_point",
    "Atlas",
    "Transition",
    "BuildingPoint",
    "BuildingSector",
    "BuildingGerm",
    "IntersectionInfo",
    "NoCommonChartError",
    "validate",
    "common_chart",
    "global_distance",
    "intersection_region",
    "InfinityComplex",
    "infinity_complex",
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
    "AxiomReport",
    "TheoremViolation",
    "Retraction",
    "build_retraction",
    "check_a1",
    "check_a2",
    "check_a3",
    "check_a4",
    "check_a5",
    "check_a6",
    "check_ec",
    "check_se",
    "germ_coapartment",
    "opposite_germ",
    "finite_cover",
    "equivalence_suite",
    "CoapartmentResult",
    "OppositeResult",
    "CoverResult",
    "EquivalenceReport",
    "fixtures",
    "ModelFormatError",
    "parse_model",
    "serialize_model",
    "parse_point_arg",
    "parse_germ_arg",
]
