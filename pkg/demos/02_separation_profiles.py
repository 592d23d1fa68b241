"""Compare bounded-depth separation profiles of two overlapping systems.

Both systems draw the parabola y = x*x on [0, 1].  The dyadic one uses
equal contraction ratios 1/2, 1/2; the mixed one uses 1/2, 2/3.  For the
dyadic system every pair of distinct comparison maps stays at deviation
1/2, so the profile is flat and the search certifies an honest gap.  For
the mixed system the minimum keeps creeping down as the depth grows,
with plateaus where no shorter word pair improves on the current best.
"""

from fifkit import (
    dyadic_parabola_system,
    mixed_ratio_parabola_system,
    wsp_check_1d,
    wsp_check_2d,
)

DEPTH = 10
TOL = 1e-3


def show(name, system):
    print(f"== {name} ==")
    v1 = wsp_check_1d(system, DEPTH, TOL)
    print(f"1d status: {v1.status}, delta* = {v1.delta_star}")
    print("depth  min deviation")
    for d, g in v1.gap_by_depth:
        print(f"{d:5d}  {g}")
    print("improving witnesses (projection form):")
    for el, dev in zip(v1.witnesses, v1.witness_deviations):
        print(f"  dev={dev}  j={el.j_word} i={el.i_word}")
    v2 = wsp_check_2d(system, min(DEPTH, 8), TOL)
    print(f"2d status: {v2.status}, delta* = {v2.delta_star}")
    print()


def main():
    show("dyadic 1/2,1/2", dyadic_parabola_system())
    show("mixed 1/2,2/3", mixed_ratio_parabola_system())
    print("Reading the tables: a flat terminal run of the profile is a")
    print("plateau, not a proof that the limit is positive.  Raising the")
    print("depth bound can always break it, as the mixed profile shows.")


if __name__ == "__main__":
    main()
