"""One orbit for each of the five closed-form curve families.

A near-identity affine map g applied repeatedly to a point traces a
sequence that always lies on a smooth curve.  Which family the curve
belongs to depends only on where (p, q) sits relative to 1: both equal
to 1 gives a parabola, and the other sign patterns give exponential,
logarithmic, power, and x*log(x) shapes.  classify_orbit_curve picks
the family and coefficients; verify_orbit_on_curve checks the fit.
"""

from fractions import Fraction as F

from fifkit import (
    Affine2,
    classify_orbit_curve,
    iterate_orbit,
    verify_orbit_on_curve,
)

# p, q, r, h, s chosen so the orbit of (0, 0) marches right across [0, 3]
ZOO = [
    ("Parabola   (p = 1, q = 1)", Affine2(F(1), F(1), F(1), F(1, 2), F(1, 4))),
    ("ExpLinear  (p = 1, q != 1)", Affine2(F(1), F(1, 2), F(0), F(1), F(1))),
    ("LogLinear  (p != 1, q = 1)", Affine2(F(5, 4), F(1), F(1, 8), F(1, 4), F(0))),
    ("PowerLinear(p != q, both != 1)", Affine2(F(5, 4), F(3, 4), F(1, 8), F(1, 4), F(1, 8))),
    ("XLogX      (p = q != 1)", Affine2(F(5, 4), F(5, 4), F(1, 8), F(1, 4), F(1, 8))),
]

INTERVAL = (F(0), F(3))
ORIGIN = (F(0), F(0))


def main():
    for label, g in ZOO:
        model = classify_orbit_curve(g, ORIGIN, INTERVAL)
        trace = iterate_orbit(g, ORIGIN, INTERVAL)
        resid = verify_orbit_on_curve(trace, model)
        coeffs = ", ".join(f"{k}={model.coefficients[k]}"
                           for k in sorted(model.coefficients))
        print(label)
        print(f"  kind = {model.kind}")
        print(f"  coefficients: {coeffs}")
        if model.singularity is not None:
            print(f"  singularity at x = {model.singularity} (outside the window)")
        print(f"  orbit points = {len(trace.points)}, max residual = {float(resid):.3e}")
        print()


if __name__ == "__main__":
    main()
