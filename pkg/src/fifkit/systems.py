"""Interpolation systems: a tuple of planar maps over a base interval.

An IfsSystem holds lower-triangular affine contractions S_1..S_m over a
closed interval [a, b].  Whether the attractor really is the graph of a
continuous function is decided by attractor.validate, not here; the
constructor only normalizes scalars.  Mixing exact and floating
coefficients anywhere in one system downgrades the whole system to
floats (with a warning), so a system is either exact or floating as a
whole.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .affine import Affine1, Affine2, compose, invert, projection
from .errors import IndexOutOfRangeError
from .scalars import Scalar, coerce, is_exact, to_float


class MixedScalarWarning(UserWarning):
    """Exact and floating coefficients were mixed; all demoted to float."""


@dataclass(frozen=True)
class IfsSystem:
    maps: tuple[Affine2, ...]
    interval: tuple[Scalar, Scalar]

    def __post_init__(self):
        maps = tuple(self.maps)
        if not maps:
            raise ValueError("a system needs at least one map")
        a, b = (coerce(v) for v in self.interval)
        if not a < b:
            raise ValueError("interval must satisfy a < b")
        exact = all(g.exact for g in maps) and is_exact(a) and is_exact(b)
        if not exact:
            scalars = [c for g in maps for c in (g.p, g.q, g.r, g.h, g.s)]
            scalars += [a, b]
            if any(is_exact(c) for c in scalars):
                warnings.warn(
                    "mixed exact/floating coefficients; demoting system to floats",
                    MixedScalarWarning,
                    stacklevel=2,
                )
            maps = tuple(
                Affine2(*(to_float(c) for c in (g.p, g.q, g.r, g.h, g.s)))
                for g in maps
            )
            a, b = to_float(a), to_float(b)
        object.__setattr__(self, "maps", maps)
        object.__setattr__(self, "interval", (a, b))

    def __len__(self) -> int:
        return len(self.maps)

    @property
    def a(self) -> Scalar:
        return self.interval[0]

    @property
    def b(self) -> Scalar:
        return self.interval[1]

    @property
    def width(self) -> Scalar:
        return self.b - self.a

    @property
    def exact(self) -> bool:
        return isinstance(self.a, Fraction)

    @property
    def projections(self) -> tuple[Affine1, ...]:
        return tuple(projection(g) for g in self.maps)


def four_piece_overlap_system(a: Scalar = Fraction(1, 5)) -> IfsSystem:
    """Four-piece bundled example whose middle two strips genuinely overlap.

    The free coefficient a (|a| < 1) is the vertical contraction of the
    outer pieces.  The second and third strips share [7/15, 8/15], and
    the two middle-piece compositions that land there agree exactly, so
    the attractor is a function graph for every admissible a.
    """
    a = coerce(a)
    if not abs(a) < 1:
        raise ValueError("need |a| < 1")
    f = Fraction
    return IfsSystem(
        maps=(
            Affine2(f(1, 5), a, f(1, 5), f(0), f(0)),
            Affine2(f(1, 3), f(-1, 5), f(-1, 5), f(1, 5), f(1, 5)),
            Affine2(f(1, 3), f(-1, 5), f(1, 5), f(7, 15), f(0)),
            Affine2(f(1, 5), a, f(-1, 5), f(4, 5), f(1, 5)),
        ),
        interval=(f(0), f(1)),
    )


def dyadic_parabola_system() -> IfsSystem:
    """Two equal half-strips whose attractor is y = x^2 on [0, 1]."""
    f = Fraction
    return IfsSystem(
        maps=(
            Affine2(f(1, 2), f(1, 4), f(0), f(0), f(0)),
            Affine2(f(1, 2), f(1, 4), f(1, 2), f(1, 2), f(1, 4)),
        ),
        interval=(f(0), f(1)),
    )


def mixed_ratio_parabola_system() -> IfsSystem:
    """Attractor y = x^2 again, strips [0,1/2] and [1/3,1] with unequal ratios.

    The two horizontal ratios 1/2 and 2/3 generate multiplicatively
    independent scalings, so the projected family creeps arbitrarily
    close to the identity as depth grows.
    """
    f = Fraction
    return IfsSystem(
        maps=(
            Affine2(f(1, 2), f(1, 4), f(0), f(0), f(0)),
            Affine2(f(2, 3), f(4, 9), f(4, 9), f(1, 3), f(1, 9)),
        ),
        interval=(f(0), f(1)),
    )


def conjugate_map(g: Affine2, lam: Scalar, mu: Scalar) -> Affine2:
    """Conjugate by the horizontal change of variables T(x, y) = (lam*x + mu, y)."""
    lam, mu = coerce(lam), coerce(mu)
    if lam == 0:
        raise ValueError("lam must be nonzero")
    return Affine2(
        g.p,
        g.q,
        g.r / lam,
        lam * g.h + mu * (1 - g.p),
        g.s - g.r * mu / lam,
    )


def conjugate_system(system: IfsSystem, lam: Scalar, mu: Scalar) -> IfsSystem:
    """Rescale the base interval by x |-> lam*x + mu (lam != 0)."""
    lam, mu = coerce(lam), coerce(mu)
    ends = sorted((lam * system.a + mu, lam * system.b + mu))
    return IfsSystem(
        maps=tuple(conjugate_map(g, lam, mu) for g in system.maps),
        interval=(ends[0], ends[1]),
    )


def strip(system: IfsSystem, i: int) -> tuple[Scalar, Scalar]:
    """Image of [a, b] under the i-th projected map (1-based), as (lo, hi)."""
    if not 1 <= i <= len(system.maps):
        raise IndexOutOfRangeError(f"map index {i} outside 1..{len(system.maps)}")
    g = system.projections[i - 1]
    u, v = g(system.a), g(system.b)
    return (u, v) if u <= v else (v, u)


def family_map_1d(system: IfsSystem, j_word, i_word) -> Affine1:
    """The projected family element (word j)^-1 after (word i)."""
    from .affine import compose_word

    gi = compose_word(system.projections, i_word)
    gj = compose_word(system.projections, j_word)
    return compose(invert(gj), gi)


def family_map_2d(system: IfsSystem, j_word, i_word) -> Affine2:
    """The planar family element (word j)^-1 after (word i)."""
    from .affine import compose_word

    gi = compose_word(system.maps, i_word)
    gj = compose_word(system.maps, j_word)
    return compose(invert(gj), gi)
