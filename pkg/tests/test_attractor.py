import math
from fractions import Fraction

import numpy as np
import pytest

from fifkit import (
    Affine2,
    DepthTooLargeError,
    IfsSystem,
    NotAFunctionGraphError,
    NotContractiveError,
    NotCoveringError,
    OutOfDomainError,
    anchor_points,
    dyadic_parabola_system,
    evaluate_f,
    four_piece_overlap_system,
    mixed_ratio_parabola_system,
    modulus_of_continuity,
    sample_attractor,
    validate,
    vertical_bound,
)

FOUR_PIECE_ANCHORS = {
    Fraction(0): Fraction(0),
    Fraction(1, 5): Fraction(1, 5),
    Fraction(7, 15): Fraction(0),
    Fraction(8, 15): Fraction(0),
    Fraction(4, 5): Fraction(1, 5),
    Fraction(1): Fraction(0),
}


def line_system(q=Fraction(1, 2)):
    # attractor is the graph of y = x on [0, 1]
    return IfsSystem(
        (Affine2(Fraction(1, 2), q, Fraction(1, 2) - q, Fraction(0), Fraction(0)),
         Affine2(Fraction(1, 2), q, Fraction(1, 2) - q,
                 Fraction(1, 2), Fraction(1, 2))),
        (Fraction(0), Fraction(1)),
    )


def flat_system():
    # attractor is the graph of y = 0 on [0, 1]
    return IfsSystem(
        (Affine2(Fraction(1, 2), Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0)),
         Affine2(Fraction(1, 2), Fraction(1, 2), Fraction(0), Fraction(1, 2), Fraction(0))),
        (Fraction(0), Fraction(1)),
    )


def test_evaluate_f_four_piece_anchor_values():
    system = four_piece_overlap_system()
    for x, want in FOUR_PIECE_ANCHORS.items():
        assert evaluate_f(system, x, tol=1e-12) == want


def test_evaluate_f_parabolas():
    for system in (dyadic_parabola_system(), mixed_ratio_parabola_system()):
        for k in range(0, 17):
            x = Fraction(k, 16)
            y = evaluate_f(system, x, tol=1e-10)
            assert abs(y - x * x) <= 1e-10


def test_evaluate_f_branch_independence_on_overlap():
    system = four_piece_overlap_system()
    tol = 1e-10
    for x in (Fraction(1, 2), Fraction(47, 96), Fraction(51, 97)):
        y2 = evaluate_f(system, x, tol=tol, first_branch=2)
        y3 = evaluate_f(system, x, tol=tol, first_branch=3)
        assert abs(y2 - y3) <= 2 * tol


def test_evaluate_f_out_of_domain():
    system = dyadic_parabola_system()
    with pytest.raises(OutOfDomainError):
        evaluate_f(system, Fraction(3, 2))
    with pytest.raises(OutOfDomainError):
        evaluate_f(system, -0.25)


def test_evaluate_f_rejects_bad_tol():
    with pytest.raises(ValueError):
        evaluate_f(dyadic_parabola_system(), Fraction(1, 2), tol=0.0)


def test_vertical_bound_dyadic():
    assert vertical_bound(dyadic_parabola_system()) == 1


def test_anchor_points_lie_on_graph():
    system = mixed_ratio_parabola_system()
    pts, worst = anchor_points(system)
    assert worst <= 1e-12
    assert all(abs(y - x * x) <= 1e-9 for (x, y) in pts)


def test_sample_attractor_dyadic_exact():
    sample = sample_attractor(dyadic_parabola_system(), 8)
    assert len(sample.points) == 257
    assert all(y == x * x for (x, y) in sample.points)
    xs = sample.xs
    assert xs == sorted(xs)
    assert sample.resolution == Fraction(1, 256)


def test_sample_attractor_mixed_near_exact():
    sample = sample_attractor(mixed_ratio_parabola_system(), 8)
    assert all(abs(y - x * x) <= 1e-12 for (x, y) in sample.points)
    assert sample.depth == 8


def test_sample_attractor_resolution_shrinks():
    system = four_piece_overlap_system()
    r4 = sample_attractor(system, 4).resolution
    r6 = sample_attractor(system, 6).resolution
    assert r6 < r4


def test_sample_attractor_budget():
    with pytest.raises(DepthTooLargeError):
        sample_attractor(dyadic_parabola_system(), 25, max_points=1000)


def test_graph_sample_to_arrays():
    sample = sample_attractor(dyadic_parabola_system(), 4)
    xs, ys = sample.to_arrays()
    assert isinstance(xs, np.ndarray) and isinstance(ys, np.ndarray)
    assert len(xs) == len(sample.points)
    assert np.all(np.diff(xs) > 0)


def test_validate_four_piece_report():
    report = validate(four_piece_overlap_system())
    assert report.valid
    assert report.contractive and report.covering and report.contained
    assert report.overlaps == ((2, 3, Fraction(7, 15), Fraction(8, 15)),)
    assert report.touch_points == ((1, 2, Fraction(1, 5)), (3, 4, Fraction(4, 5)))
    assert report.single_valued
    assert report.max_discrepancy <= 1e-9


def test_validate_dyadic_touch():
    report = validate(dyadic_parabola_system())
    assert report.valid
    assert report.overlaps == ()
    assert report.touch_points == ((1, 2, Fraction(1, 2)),)


def test_validate_flags_gaps_and_expansion():
    gap = IfsSystem(
        (Affine2(Fraction(1, 4), Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0)),
         Affine2(Fraction(1, 4), Fraction(1, 2), Fraction(0), Fraction(3, 4), Fraction(0))),
        (Fraction(0), Fraction(1)),
    )
    report = validate(gap)
    assert not report.valid and not report.covering
    assert report.coverage_gaps == ((Fraction(1, 4), Fraction(3, 4)),)
    with pytest.raises(NotCoveringError):
        validate(gap, strict=True)

    expanding = IfsSystem(
        (Affine2(Fraction(3, 2), Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0)),),
        (Fraction(0), Fraction(1)),
    )
    report = validate(expanding)
    assert not report.valid and not report.contractive
    with pytest.raises(NotContractiveError):
        validate(expanding, strict=True)


def test_validate_flags_multivalued_overlap():
    # strips [0, 3/4] and [1/4, 1] agree on x but disagree about y
    bad = IfsSystem(
        (Affine2(Fraction(3, 4), Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0)),
         Affine2(Fraction(3, 4), Fraction(1, 2), Fraction(0), Fraction(1, 4), Fraction(1, 2))),
        (Fraction(0), Fraction(1)),
    )
    report = validate(bad)
    assert not report.valid and not report.single_valued
    with pytest.raises(NotAFunctionGraphError):
        validate(bad, strict=True)


def test_modulus_line():
    eps = 0.1
    delta = modulus_of_continuity(line_system(), eps)
    assert eps / (2 * math.sqrt(2)) <= delta <= eps / math.sqrt(2) + 1e-3


def test_modulus_flat_line_caps_at_eps():
    assert modulus_of_continuity(flat_system(), 0.5) == 0.5


def test_modulus_dyadic():
    delta = modulus_of_continuity(dyadic_parabola_system(), 0.1)
    assert 0.02 <= delta < 0.1
    # monotone in eps
    assert modulus_of_continuity(dyadic_parabola_system(), 0.05) <= delta


def test_modulus_rejects_bad_eps():
    with pytest.raises(ValueError):
        modulus_of_continuity(flat_system(), 0.0)
