"""Shared fixtures and a deliberately naive reference implementation.

The oracle functions below recompute word compositions, family
elements, and minimum deviations from scratch with their own loops and
arithmetic.  They share no code with the package, so agreement between
the two routes checks the scanner's bucketing and pruning, not just its
formulas.  The planar deviation takes the vertical box as an explicit
argument; tests feed the same box to both routes so the normalization
matches by construction.
"""

import random
from fractions import Fraction

import pytest

from fifkit import Affine2, IfsSystem


# ---------- independent reference arithmetic ----------

def oracle_words(m, depth):
    """Empty word plus every word over {1..m} of length <= depth."""
    out = [()]
    frontier = [()]
    for _ in range(depth):
        frontier = [w + (k,) for w in frontier for k in range(1, m + 1)]
        out.extend(frontier)
    return out


def oracle_coeffs_1d(system, word):
    """(P, H) of the projected composite, leftmost letter applied last."""
    P = Fraction(1) if system.exact else 1.0
    H = Fraction(0) if system.exact else 0.0
    for k in word:
        g = system.maps[k - 1]
        P, H = P * g.p, P * g.h + H
    return P, H


def oracle_coeffs_2d(system, word):
    one = Fraction(1) if system.exact else 1.0
    zero = Fraction(0) if system.exact else 0.0
    P, Q, R, H, S = one, one, zero, zero, zero
    for k in word:
        g = system.maps[k - 1]
        P, Q, R, H, S = (P * g.p, Q * g.q, Q * g.r + R * g.p,
                         P * g.h + H, Q * g.s + R * g.h + S)
    return P, Q, R, H, S


def oracle_invert_2d(c):
    p, q, r, h, s = c
    return (1 / p, 1 / q, -r / (p * q), -h / p, (r * h - s * p) / (p * q))


def oracle_compose_2d(c1, c2):
    p1, q1, r1, h1, s1 = c1
    p2, q2, r2, h2, s2 = c2
    return (p1 * p2, q1 * q2, q1 * r2 + r1 * p2,
            p1 * h2 + h1, q1 * s2 + r1 * h2 + s1)


def oracle_dev_1d(p, h, interval):
    a, b = interval
    return max(abs(p - 1),
               max(abs(p * a + h - a), abs(p * b + h - b)) / (b - a))


def oracle_dev_2d(c, interval, ybox):
    p, q, r, h, s = c
    a, b = interval
    ylo, yhi = ybox
    hh = (yhi - ylo) or (b - a)
    dx = max(abs(p * a + h - a), abs(p * b + h - b))
    dy = max(abs((q - 1) * y + r * x + s) for x in (a, b) for y in (ylo, yhi))
    return max(abs(p - 1), abs(q - 1), dx / (b - a), dy / hh)


def oracle_delta_1d(system, depth):
    """Min deviation over all distinct word pairs; identities excluded.

    Returns (delta, unordered_coincidence_pairs).
    """
    words = oracle_words(len(system), depth)
    coeffs = [oracle_coeffs_1d(system, w) for w in words]
    best = None
    coincidences = 0
    for j, (Pj, Hj) in enumerate(coeffs):
        for i, (Pi, Hi) in enumerate(coeffs):
            if i == j:
                continue
            p = Pi / Pj
            h = (Hi - Hj) / Pj
            if p == 1 and h == 0:
                if i < j:
                    coincidences += 1
                continue
            d = oracle_dev_1d(p, h, system.interval)
            if best is None or d < best:
                best = d
    return best, coincidences


def oracle_delta_2d(system, depth, ybox):
    words = oracle_words(len(system), depth)
    coeffs = [oracle_coeffs_2d(system, w) for w in words]
    best = None
    for j, cj in enumerate(coeffs):
        for i, ci in enumerate(coeffs):
            if i == j:
                continue
            g = oracle_compose_2d(oracle_invert_2d(cj), ci)
            if g == (1, 1, 0, 0, 0):
                continue
            d = oracle_dev_2d(g, system.interval, ybox)
            if best is None or d < best:
                best = d
    return best


# ---------- random exact generators ----------

_RATIO_POOL = [Fraction(n, d) for d in (2, 3, 4, 5) for n in range(1, d)]
_Q_POOL = [sign * v for v in _RATIO_POOL for sign in (1, -1)]


def random_two_map_system(rng):
    """Exact two-map system whose strips cover [0, 1]."""
    while True:
        w1, w2 = rng.choice(_RATIO_POOL), rng.choice(_RATIO_POOL)
        if w1 + w2 >= 1:
            break
    sgn1, sgn2 = rng.choice((1, -1)), rng.choice((1, -1))
    h1 = Fraction(0) if sgn1 > 0 else w1
    h2 = (1 - w2) if sgn2 > 0 else Fraction(1)
    maps = []
    for p, h in ((sgn1 * w1, h1), (sgn2 * w2, h2)):
        q = rng.choice(_Q_POOL)
        r = Fraction(rng.randrange(-2, 3), rng.randrange(1, 5))
        s = Fraction(rng.randrange(-2, 3), rng.randrange(1, 5))
        maps.append(Affine2(p, q, r, h, s))
    return IfsSystem(tuple(maps), (Fraction(0), Fraction(1)))


def random_overlapping_system(rng):
    """Like random_two_map_system but with a positive-width overlap."""
    while True:
        system = random_two_map_system(rng)
        p1, p2 = (g.p for g in system.maps)
        if abs(p1) + abs(p2) > 1:
            return system


_NEAR_ONE = [1 + Fraction(k, 64) for k in range(-6, 7) if k != 0]


def confined_near_identity(rng, case):
    """Map whose orbit of (0,0) marches across [0,1] in >= 50 steps.

    For p != 1 the step h = (p-1)/(p^50-1) puts the 50th iterate
    exactly on 1 and the projected fixed point strictly outside [0,1];
    for p = 1 the step 1/n with n in [55,90] stays short of 1 for 50
    steps.  Keeps iterates confined, so curve evaluation is
    well-conditioned.
    """
    one = Fraction(1)
    if case == "Parabola":
        p = q = one
    elif case == "ExpLinear":
        p, q = one, rng.choice(_NEAR_ONE)
    elif case == "LogLinear":
        p, q = rng.choice(_NEAR_ONE), one
    elif case == "PowerLinear":
        p = rng.choice(_NEAR_ONE)
        q = rng.choice([v for v in _NEAR_ONE if v != p])
    elif case == "XLogX":
        p = q = rng.choice(_NEAR_ONE)
    else:
        raise ValueError(case)
    if p == 1:
        h = Fraction(1, rng.randrange(55, 91))
    else:
        h = (p - 1) / (p ** 50 - 1)
    r = Fraction(rng.randrange(-8, 9), 16)
    s = Fraction(rng.randrange(-8, 9), 16)
    return Affine2(p, q, r, h, s)


@pytest.fixture
def rng():
    return random.Random(987654321)
