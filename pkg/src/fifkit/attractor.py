"""Attractor-side operations: validation, evaluation, sampling, continuity.

The attractor of a valid system is the graph of a continuous function f
on [a, b].  Everything here works through two mechanisms:

* backward iteration for pointwise values: pull an abscissa back
  through projected strips until the vertical contraction has shrunk
  any initial guess below tolerance, then unroll the y recurrence
  forward (exact when the pullback hits a projected fixed point);
* forward word images of a small anchor set for global samples.
"""

import math
from collections import deque
from dataclasses import dataclass

from .affine import Affine2, compose
from .errors import (
    DepthTooLargeError,
    NotAFunctionGraphError,
    NotContractiveError,
    NotCoveringError,
    OutOfDomainError,
    ResolutionInsufficientError,
)
from .scalars import Scalar, to_float
from .systems import IfsSystem, strip

_DEDUP_QUANTUM = 1e-12


def vertical_bound(system: IfsSystem) -> Scalar:
    """A bound M with the attractor contained in [a, b] x [-M, M].

    [-M, M] is forward invariant for every y recurrence over x in
    [a, b], which is exactly what the backward-iteration error estimate
    needs.
    """
    a, b = system.interval
    best = None
    for g in system.maps:
        if not abs(g.q) < 1:
            raise NotContractiveError(f"|q| = {g.q} is not < 1")
        drive = max(abs(g.r * a + g.s), abs(g.r * b + g.s))
        m = drive / (1 - abs(g.q))
        if best is None or m > best:
            best = m
    return best


def _strips(system: IfsSystem):
    return [strip(system, i) for i in range(1, len(system) + 1)]


def _select_branch(system, x, strips, slack, forced=None):
    if forced is not None:
        lo, hi = strips[forced - 1]
        if not (lo - slack <= x <= hi + slack):
            raise OutOfDomainError(f"x = {x} outside strip {forced}")
        return forced
    for i, (lo, hi) in enumerate(strips, start=1):
        if lo - slack <= x <= hi + slack:
            return i
    raise NotCoveringError(f"no projected strip contains x = {x}")


def _evaluate(system, x, tol, first_branch=None):
    """Return (y, error_bound).  error_bound == 0 means exact."""
    a, b = system.interval
    slack = 0 if system.exact else to_float(system.width) * 1e-12
    if not (a - slack <= x <= b + slack):
        raise OutOfDomainError(f"x = {x} outside [{a}, {b}]")
    strips = _strips(system)
    bound = vertical_bound(system)
    qmax = max(to_float(abs(g.q)) for g in system.maps)
    mfloat = max(to_float(bound), 1e-300)
    if mfloat <= tol:
        nsteps = 0
    elif qmax == 0.0:
        nsteps = 1
    else:
        nsteps = max(1, math.ceil(math.log(tol / mfloat) / math.log(qmax)))
        if nsteps > 100_000:
            raise ResolutionInsufficientError(
                f"would need {nsteps} pullback steps; vertical ratios too close to 1"
            )

    chain = []
    cur = x
    tail = 0 if system.exact else 0.0
    err = mfloat
    forced = first_branch
    for _ in range(nsteps):
        i = _select_branch(system, cur, strips, slack, forced)
        forced = None
        g = system.maps[i - 1]
        prev = (cur - g.h) / g.p
        if prev == cur:
            # cur is the projected fixed point of this branch, so f(cur)
            # solves y = q*y + r*cur + s; the remaining tail is exact.
            tail = (g.r * cur + g.s) / (1 - g.q)
            err = 0.0
            break
        if not system.exact:
            prev = min(max(prev, a), b)
        chain.append((i, prev))
        cur = prev
    else:
        if nsteps == 0:
            err = mfloat
    y = tail
    for i, t in reversed(chain):
        g = system.maps[i - 1]
        y = g.q * y + g.r * t + g.s
        err *= to_float(abs(g.q))
    return y, err


def evaluate_f(system: IfsSystem, x: Scalar, tol: float = 1e-9,
               first_branch: int | None = None) -> Scalar:
    """Value of the attractor function at x, within tol.

    Exact (zero-error) whenever the pullback orbit of x lands on a
    projected fixed point in an exact system; in particular at every
    generator fixed point reachable by the lowest-index branch rule.
    first_branch forces the branch used for the first pullback step
    only, which is how branch independence on overlaps is tested.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    y, _ = _evaluate(system, x, tol, first_branch)
    return y


@dataclass(frozen=True)
class GraphSample:
    """Sorted graph points, all within `tolerance` of the attractor."""

    points: tuple[tuple[Scalar, Scalar], ...]
    depth: int
    resolution: Scalar
    tolerance: float

    @property
    def xs(self):
        return [p[0] for p in self.points]

    @property
    def ys(self):
        return [p[1] for p in self.points]

    def to_arrays(self):
        import numpy

        xs = numpy.array([to_float(p[0]) for p in self.points])
        ys = numpy.array([to_float(p[1]) for p in self.points])
        return xs, ys


def anchor_points(system: IfsSystem, tol: float = 1e-12):
    """Generator fixed points plus the graph points over both endpoints.

    Returns (points, worst_error).  In an exact system the endpoint
    evaluations terminate on projected fixed points for every bundled
    example, making the anchors exact.
    """
    pts = []
    worst = 0.0
    for g in system.maps:
        xstar = g.h / (1 - g.p)
        ystar = (g.r * xstar + g.s) / (1 - g.q)
        pts.append((xstar, ystar))
    for x in system.interval:
        y, err = _evaluate(system, x, tol)
        worst = max(worst, err)
        pts.append((x, y))
    return pts, worst


def sample_attractor(system: IfsSystem, depth: int,
                     max_points: int = 2_000_000) -> GraphSample:
    """Images of the anchor set under every length-`depth` word.

    Point count is m^depth * (m + 2); exceeding max_points raises
    DepthTooLargeError.  Points come back deduplicated and sorted by x,
    with the realized horizontal resolution (largest consecutive gap).
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    m = len(system)
    anchors, anchor_err = anchor_points(system)
    total = (m ** depth) * len(anchors)
    if total > max_points:
        raise DepthTooLargeError(
            f"{total} points at depth {depth} exceeds budget {max_points}"
        )

    exact = system.exact
    seen = {}

    def emit(g: Affine2):
        for pt in anchors:
            x, y = g(pt)
            key = (x, y) if exact else (
                round(to_float(x) / _DEDUP_QUANTUM),
                round(to_float(y) / _DEDUP_QUANTUM),
            )
            if key not in seen:
                seen[key] = (x, y)

    def rec(g: Affine2, k: int):
        if k == 0:
            emit(g)
            return
        for s in system.maps:
            rec(compose(g, s), k - 1)

    rec(Affine2.identity(), depth)
    pts = sorted(seen.values(), key=lambda p: (to_float(p[0]), to_float(p[1])))
    res = 0 if exact else 0.0
    for k in range(len(pts) - 1):
        gap = pts[k + 1][0] - pts[k][0]
        if gap > res:
            res = gap
    return GraphSample(tuple(pts), depth, res, anchor_err)


@dataclass(frozen=True)
class ValidationReport:
    contractive: bool
    covering: bool
    contained: bool
    strips: tuple[tuple[Scalar, Scalar], ...]
    coverage_gaps: tuple[tuple[Scalar, Scalar], ...]
    overlaps: tuple[tuple[int, int, Scalar, Scalar], ...]
    touch_points: tuple[tuple[int, int, Scalar], ...]
    single_valued: bool | None
    max_discrepancy: float | None
    tolerance: float
    problems: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return (self.contractive and self.covering and self.contained
                and self.single_valued is True)


def validate(system: IfsSystem, tol: float = 1e-9,
             overlap_samples: int = 9, strict: bool = False) -> ValidationReport:
    """Check contraction, strip coverage, and branch agreement on overlaps.

    Branch agreement is certified numerically: on every shared strip
    (positive-width overlap or single touch point) the two branch
    evaluations must agree within tol; the report carries the worst
    discrepancy found.  strict=True turns the first failure into the
    matching typed exception.
    """
    a, b = system.interval
    problems = []
    contractive = True
    for i, g in enumerate(system.maps, start=1):
        if g.p == 0:
            contractive = False
            problems.append(f"map {i}: p == 0")
        elif not abs(g.p) < 1:
            contractive = False
            problems.append(f"map {i}: |p| = {abs(g.p)} not < 1")
        if not abs(g.q) < 1:
            contractive = False
            problems.append(f"map {i}: |q| = {abs(g.q)} not < 1")

    strips = tuple(_strips(system)) if contractive else tuple(
        strip(system, i) for i in range(1, len(system) + 1)
    )
    contained = True
    for i, (lo, hi) in enumerate(strips, start=1):
        if lo < a or hi > b:
            contained = False
            problems.append(f"map {i}: strip [{lo}, {hi}] escapes [{a}, {b}]")

    order = sorted(range(len(strips)), key=lambda k: (to_float(strips[k][0]),
                                                      to_float(strips[k][1])))
    gaps = []
    cover = a
    for k in order:
        lo, hi = strips[k]
        if lo > cover:
            gaps.append((cover, lo))
        if hi > cover:
            cover = hi
    if cover < b:
        gaps.append((cover, b))
    covering = not gaps
    if gaps:
        problems.append("coverage gaps: " + ", ".join(f"[{u}, {v}]" for u, v in gaps))

    overlaps = []
    touches = []
    for i in range(len(strips)):
        for j in range(i + 1, len(strips)):
            lo = max(strips[i][0], strips[j][0])
            hi = min(strips[i][1], strips[j][1])
            if lo < hi:
                overlaps.append((i + 1, j + 1, lo, hi))
            elif lo == hi:
                touches.append((i + 1, j + 1, lo))

    single_valued = None
    max_disc = None
    if contractive and covering and contained:
        max_disc = 0.0
        eval_tol = tol / 8
        shared = [(i, j, lo, hi) for (i, j, lo, hi) in overlaps]
        shared += [(i, j, x, x) for (i, j, x) in touches]
        for i, j, lo, hi in shared:
            if lo == hi:
                xs = [lo]
            else:
                n = max(2, overlap_samples)
                xs = [lo + (hi - lo) * k / (n - 1) for k in range(n)]
            for x in xs:
                yi = evaluate_f(system, x, eval_tol, first_branch=i)
                yj = evaluate_f(system, x, eval_tol, first_branch=j)
                disc = to_float(abs(yi - yj))
                if disc > max_disc:
                    max_disc = disc
        single_valued = max_disc <= tol
        if not single_valued:
            problems.append(
                f"branches disagree by {max_disc:.3e} on a shared strip (tol {tol:.1e})"
            )

    report = ValidationReport(
        contractive=contractive,
        covering=covering,
        contained=contained,
        strips=strips,
        coverage_gaps=tuple(gaps),
        overlaps=tuple(overlaps),
        touch_points=tuple(touches),
        single_valued=single_valued,
        max_discrepancy=max_disc,
        tolerance=tol,
        problems=tuple(problems),
    )
    if strict and not report.valid:
        if not contractive:
            raise NotContractiveError("; ".join(problems))
        if not covering or not contained:
            raise NotCoveringError("; ".join(problems))
        raise NotAFunctionGraphError("; ".join(problems))
    return report


def modulus_of_continuity(system: IfsSystem, eps: float,
                          max_points: int = 2_000_000) -> float:
    """Largest certified delta with points of Gamma(f) at horizontal
    distance < delta lying within eps of each other (Euclidean).

    Empirical certification on a dense sample: delta is accepted when
    hypot(delta, worst y-spread over any delta-window) <= eps and the
    sample resolution is at most delta/8 (the documented density safety
    factor).  Raises ResolutionInsufficientError when no affordable
    sample is dense enough.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    width = to_float(system.width)
    pmax = max(to_float(abs(g.p)) for g in system.maps)
    m = len(system)
    hi_cap = min(eps, width)

    depth = 3
    while True:
        if (m ** depth) * (m + 2) > max_points:
            raise ResolutionInsufficientError(
                f"cannot certify a window for eps = {eps} within the point budget"
            )
        sample = sample_attractor(system, depth, max_points)
        xs = [to_float(x) for x in sample.xs]
        ys = [to_float(y) for y in sample.ys]
        res = to_float(sample.resolution)

        def spread(delta):
            # max over windows [x, x+delta] of (max y - min y), two-pointer
            worst = 0.0
            mx, mn = deque(), deque()
            left = 0
            for right in range(len(xs)):
                while mx and ys[mx[-1]] <= ys[right]:
                    mx.pop()
                mx.append(right)
                while mn and ys[mn[-1]] >= ys[right]:
                    mn.pop()
                mn.append(right)
                while xs[right] - xs[left] > delta:
                    if mx[0] == left:
                        mx.popleft()
                    if mn[0] == left:
                        mn.popleft()
                    left += 1
                worst = max(worst, ys[mx[0]] - ys[mn[0]])
            return worst

        def ok(delta):
            return (delta >= 8 * res
                    and math.hypot(delta, spread(delta)) <= eps)

        if ok(hi_cap):
            return hi_cap
        lo_candidate = 8 * res
        if lo_candidate < hi_cap and ok(lo_candidate):
            lo, hi = lo_candidate, hi_cap
            for _ in range(50):
                mid = (lo + hi) / 2
                if ok(mid):
                    lo = mid
                else:
                    hi = mid
            return lo
        depth += 2
