"""Affine fractal interpolation with overlapping pieces.

Construction and validation of iterated function systems whose
attractors are function graphs, bounded-depth weak separation checks,
orbit epsilon-nets, and closed-form classification of the curves traced
by near-identity overlap maps.
"""

__version__ = "0.1.0"

from .errors import (
    DegenerateDenominatorError,
    DepthTooLargeError,
    FifkitError,
    FixedPointInsideError,
    IndexOutOfRangeError,
    NonpositiveRatioError,
    NotAFunctionGraphError,
    NotContractiveError,
    NotCoveringError,
    OutOfDomainError,
    ResolutionInsufficientError,
    SingularMapError,
    SpecFormatError,
    StepTooLargeError,
)
from .scalars import Scalar, coerce, format_scalar, is_exact, parse_scalar, to_float
from .affine import (
    Affine1,
    Affine2,
    FixedPoint,
    Word,
    compose,
    compose_word,
    fixed_point_1d,
    invert,
    projection,
)
from .systems import (
    IfsSystem,
    MixedScalarWarning,
    conjugate_map,
    conjugate_system,
    dyadic_parabola_system,
    family_map_1d,
    family_map_2d,
    four_piece_overlap_system,
    mixed_ratio_parabola_system,
    strip,
)
from .attractor import (
    GraphSample,
    ValidationReport,
    anchor_points,
    evaluate_f,
    modulus_of_continuity,
    sample_attractor,
    validate,
    vertical_bound,
)
from .separation import (
    DEFAULT_WORD_BUDGET,
    CollinearAttractorWarning,
    FamilyElement,
    WspVerdict,
    attractor_ybox,
    deviation_1d,
    deviation_2d,
    enumerate_family_1d,
    graph_transport_check,
    wsp_check_1d,
    wsp_check_2d,
)
from .orbits import (
    CURVE_KINDS,
    CaseBoundaryWarning,
    CurveModel,
    OrbitTrace,
    ParabolaFit,
    classify_orbit_curve,
    detect_parabola,
    epsilon_net,
    iterate_orbit,
    suggest_eps,
    verify_orbit_on_curve,
)
from .specfile import emit_ifs_text, parse_ifs_file, parse_ifs_text, write_ifs_file
from .svg import graph_svg, overlap_svg

__all__ = [
    "__version__",
    "FifkitError",
    "SingularMapError",
    "IndexOutOfRangeError",
    "NotContractiveError",
    "NotCoveringError",
    "NotAFunctionGraphError",
    "DepthTooLargeError",
    "OutOfDomainError",
    "ResolutionInsufficientError",
    "FixedPointInsideError",
    "StepTooLargeError",
    "NonpositiveRatioError",
    "DegenerateDenominatorError",
    "SpecFormatError",
    "Scalar",
    "coerce",
    "is_exact",
    "to_float",
    "parse_scalar",
    "format_scalar",
    "Word",
    "Affine1",
    "Affine2",
    "FixedPoint",
    "compose",
    "compose_word",
    "invert",
    "projection",
    "fixed_point_1d",
    "IfsSystem",
    "MixedScalarWarning",
    "four_piece_overlap_system",
    "dyadic_parabola_system",
    "mixed_ratio_parabola_system",
    "conjugate_map",
    "conjugate_system",
    "strip",
    "family_map_1d",
    "family_map_2d",
    "GraphSample",
    "ValidationReport",
    "evaluate_f",
    "anchor_points",
    "sample_attractor",
    "validate",
    "modulus_of_continuity",
    "vertical_bound",
    "DEFAULT_WORD_BUDGET",
    "CollinearAttractorWarning",
    "FamilyElement",
    "WspVerdict",
    "attractor_ybox",
    "deviation_1d",
    "deviation_2d",
    "enumerate_family_1d",
    "wsp_check_1d",
    "wsp_check_2d",
    "graph_transport_check",
    "CURVE_KINDS",
    "CaseBoundaryWarning",
    "CurveModel",
    "OrbitTrace",
    "ParabolaFit",
    "iterate_orbit",
    "epsilon_net",
    "suggest_eps",
    "classify_orbit_curve",
    "verify_orbit_on_curve",
    "detect_parabola",
    "parse_ifs_text",
    "parse_ifs_file",
    "emit_ifs_text",
    "write_ifs_file",
    "graph_svg",
    "overlap_svg",
]
