import random
from fractions import Fraction

import pytest

from fifkit import (
    Affine1,
    Affine2,
    CollinearAttractorWarning,
    DepthTooLargeError,
    FamilyElement,
    IfsSystem,
    OutOfDomainError,
    attractor_ybox,
    conjugate_map,
    conjugate_system,
    deviation_1d,
    deviation_2d,
    dyadic_parabola_system,
    enumerate_family_1d,
    four_piece_overlap_system,
    graph_transport_check,
    mixed_ratio_parabola_system,
    projection,
    wsp_check_1d,
    wsp_check_2d,
)

from conftest import (
    oracle_delta_1d,
    oracle_delta_2d,
    random_two_map_system,
)

MIXED_PROFILE = {
    2: Fraction(1, 3), 3: Fraction(1, 4), 4: Fraction(1, 9),
    5: Fraction(1, 9), 6: Fraction(1, 9), 7: Fraction(1, 9),
    8: Fraction(1, 9), 9: Fraction(13, 256), 10: Fraction(13, 256),
    11: Fraction(1, 32), 12: Fraction(1, 64),
}

MIXED_WITNESS_WORDS = [
    ((1,), (1, 2)),
    ((1, 2, 2), (2, 1, 1)),
    ((2, 1, 1), (1, 2, 2, 2)),
    ((1, 2, 2, 2, 2, 2, 2, 2, 2), (2, 1, 2, 1, 2, 1, 1)),
]


def test_deviation_1d_basics():
    interval = (Fraction(0), Fraction(1))
    assert deviation_1d(Affine1.identity(), interval) == 0
    assert deviation_1d(Affine1(Fraction(1), Fraction(1, 4)), interval) == Fraction(1, 4)
    assert deviation_1d(Affine1(Fraction(2, 3), Fraction(1, 3)), interval) == Fraction(1, 3)


def test_deviation_2d_dominates_projection(rng):
    interval = (Fraction(0), Fraction(1))
    ybox = (Fraction(-1, 2), Fraction(3, 2))
    for _ in range(200):
        g = Affine2(*(Fraction(rng.randrange(-8, 9), 8) or Fraction(1, 8)
                      for _ in range(5)))
        if g.p == 0:
            continue
        assert deviation_2d(g, interval, ybox) >= deviation_1d(projection(g), interval)


def test_deviation_conjugation_invariance(rng):
    interval = (Fraction(0), Fraction(1))
    ybox = (Fraction(0), Fraction(1))
    for _ in range(100):
        g = Affine2(Fraction(rng.randrange(1, 16), 8), Fraction(rng.randrange(1, 16), 8),
                    Fraction(rng.randrange(-8, 9), 8), Fraction(rng.randrange(-8, 9), 8),
                    Fraction(rng.randrange(-8, 9), 8))
        lam = Fraction(rng.choice((1, 2, 3, -2)), rng.choice((1, 2)))
        mu = Fraction(rng.randrange(-4, 5), 4)
        a2 = lam * Fraction(0) + mu
        b2 = lam * Fraction(1) + mu
        conj_interval = (min(a2, b2), max(a2, b2))
        gc = conjugate_map(g, lam, mu)
        assert deviation_1d(projection(gc), conj_interval) == \
            deviation_1d(projection(g), interval)
        assert deviation_2d(gc, conj_interval, ybox) == deviation_2d(g, interval, ybox)


def test_enumerate_family_contains_known_element():
    system = mixed_ratio_parabola_system()
    family = enumerate_family_1d(system, 2)
    assert Affine1(Fraction(2, 3), Fraction(1, 3)) in family
    # j = i pairs contribute the identity, which belongs to the family
    assert Affine1.identity() in family
    assert all(g.exact for g in family)


def test_family_element_from_words():
    system = mixed_ratio_parabola_system()
    el = FamilyElement.from_words(system, (1,), (1, 2))
    assert el.j_word == (1,) and el.i_word == (1, 2)
    assert el.map1 == Affine1(Fraction(2, 3), Fraction(1, 3))
    assert projection(el.map2) == el.map1


@pytest.mark.parametrize("depth", [2, 3, 4, 5])
def test_scanner_matches_oracle_fixed_systems_1d(depth):
    for system in (dyadic_parabola_system(), mixed_ratio_parabola_system()):
        want, _ = oracle_delta_1d(system, depth)
        got = wsp_check_1d(system, depth, 1e-9).delta_star
        assert got == want


@pytest.mark.parametrize("depth", [2, 3])
def test_scanner_matches_oracle_four_piece_1d(depth):
    system = four_piece_overlap_system()
    want, coincidences = oracle_delta_1d(system, depth)
    verdict = wsp_check_1d(system, depth, 1e-9)
    assert verdict.delta_star == want
    assert verdict.coincidence_count == coincidences


def test_scanner_matches_oracle_random_1d():
    rng = random.Random(20250819)
    for _ in range(25):
        system = random_two_map_system(rng)
        want, _ = oracle_delta_1d(system, 3)
        assert wsp_check_1d(system, 3, 1e-9).delta_star == want


@pytest.mark.parametrize("depth", [2, 3, 4])
def test_scanner_matches_oracle_2d(depth):
    for system in (dyadic_parabola_system(), mixed_ratio_parabola_system()):
        ybox = attractor_ybox(system)
        want = oracle_delta_2d(system, depth, ybox)
        got = wsp_check_2d(system, depth, 1e-9).delta_star
        assert got == want


def test_scanner_matches_oracle_random_2d():
    rng = random.Random(777)
    checked = 0
    while checked < 10:
        system = random_two_map_system(rng)
        ybox = attractor_ybox(system)
        want = oracle_delta_2d(system, 3, ybox)
        got = wsp_check_2d(system, 3, 1e-9).delta_star
        assert got == want
        checked += 1


def test_mixed_profile_frozen():
    verdict = wsp_check_1d(mixed_ratio_parabola_system(), 12, 1e-3)
    assert verdict.status == "NoWitnessUpToDepth"
    assert verdict.exact
    assert dict(verdict.gap_by_depth) == MIXED_PROFILE
    assert verdict.delta_star == Fraction(1, 64)
    devs = list(verdict.witness_deviations)
    assert devs == sorted(devs, reverse=True)
    assert all(d1 > d2 for d1, d2 in zip(devs, devs[1:]))
    pairs = [(el.j_word, el.i_word) for el in verdict.witnesses[:4]]
    assert pairs == MIXED_WITNESS_WORDS


def test_dyadic_profile_flat():
    verdict = wsp_check_1d(dyadic_parabola_system(), 8, 1e-3)
    assert verdict.status == "NoWitnessUpToDepth"
    assert all(g == Fraction(1, 2) for _, g in verdict.gap_by_depth)
    assert len(verdict.witnesses) == 1


def test_four_piece_coincidences():
    verdict = wsp_check_1d(four_piece_overlap_system(), 3, 1e-3)
    assert verdict.delta_star == Fraction(2, 3)
    assert ((2, 4), (3, 1)) in verdict.coincidences
    assert verdict.coincidence_count > 0
    # coincidences are identities, never witnesses
    for el in verdict.witnesses:
        assert el.map1 != Affine1.identity()


def test_witness_found_at_loose_tol():
    verdict = wsp_check_1d(mixed_ratio_parabola_system(), 4, 0.2)
    assert verdict.status == "WitnessFound"
    assert verdict.delta_star == Fraction(1, 9) < 0.2


def test_mixed_2d_profile_frozen():
    verdict = wsp_check_2d(mixed_ratio_parabola_system(), 6, 1e-3)
    assert verdict.status == "NoWitnessUpToDepth"
    got = dict(verdict.gap_by_depth)
    assert got[2] == Fraction(5, 9)
    assert got[3] == Fraction(7, 16)
    assert got[4] == Fraction(17, 81)
    assert got[5] == Fraction(17, 81)
    assert got[6] == Fraction(17, 81)


def test_wsp_depth_must_be_at_least_two():
    with pytest.raises(ValueError):
        wsp_check_1d(dyadic_parabola_system(), 1, 1e-3)


def test_wsp_budget_exceeded():
    with pytest.raises(DepthTooLargeError):
        wsp_check_1d(dyadic_parabola_system(), 8, 1e-3, budget=100)


def test_collinear_warning_only_for_straight_attractors():
    line = IfsSystem(
        (Affine2(Fraction(1, 2), Fraction(1, 2), Fraction(0), Fraction(0), Fraction(0)),
         Affine2(Fraction(1, 2), Fraction(1, 2), Fraction(0), Fraction(1, 2), Fraction(1, 2))),
        (Fraction(0), Fraction(1)),
    )
    with pytest.warns(CollinearAttractorWarning):
        wsp_check_2d(line, 3, 1e-3)


def test_transport_check_mixed_witnesses():
    system = mixed_ratio_parabola_system()
    for jw, iw in MIXED_WITNESS_WORDS[:2]:
        el = FamilyElement.from_words(system, jw, iw)
        for k in range(5):
            x = Fraction(k, 8)
            if not (0 <= el.map1(x) <= 1):
                continue
            assert graph_transport_check(system, el, x, tol=1e-7)


def test_transport_check_domain_errors():
    system = mixed_ratio_parabola_system()
    el = FamilyElement.from_words(system, (1,), (1, 2))
    with pytest.raises(OutOfDomainError):
        graph_transport_check(system, el, Fraction(3, 2))
    # g(x) = 2x/3 + 1/3 keeps [0,1] inside, so use the inverse direction
    el_back = FamilyElement.from_words(system, (1, 2), (1,))
    with pytest.raises(OutOfDomainError):
        graph_transport_check(system, el_back, Fraction(0))


def test_transport_check_rejects_wrong_map():
    system = mixed_ratio_parabola_system()
    fake = Affine2(Fraction(2, 3), Fraction(1), Fraction(0), Fraction(1, 3), Fraction(1, 3))
    assert not graph_transport_check(system, fake, Fraction(1, 2), tol=1e-7)


def test_conjugated_system_same_delta_star():
    system = mixed_ratio_parabola_system()
    conj = conjugate_system(system, Fraction(3), Fraction(-1))
    for depth in (2, 3, 4):
        assert wsp_check_1d(conj, depth, 1e-9).delta_star == \
            wsp_check_1d(system, depth, 1e-9).delta_star
