"""Gale transform basics on a tiny example, all in exact arithmetic.

Three collinear points 0, 1, 2 on the line have a one-dimensional Gale
transform spanned by (1, -2, 1) -- the coefficients of the affine
dependence x_1 - 2 x_2 + x_3 = 0.  The transform and its inverse are
exact, and directions alpha correspond to dependences lambda via
lambda_i = <alpha, y_i>, both ways.

Run: python3 demos/gale_duality_basics.py
"""

from fractions import Fraction

from oddsphere import (
    PointConfiguration,
    dependence_from_direction,
    direction_from_dependence,
    gale_transform,
    reconstruct_points,
    relint_origin_test,
)

points = PointConfiguration(((0,), (1,), (2,)))
gale = gale_transform(points)
print("points on the line:", [p[0] for p in points.points])
print("Gale transform:", [v[0] for v in gale.vectors])

back = reconstruct_points(gale)
print("reconstructed points:", [p[0] for p in back.points])
print("(any affinely equivalent collinear triple is correct)")

lam = dependence_from_direction(gale, (Fraction(1),))
print("\ndependence for alpha=(1):", lam)
print("sum lambda_i =", sum(lam))
print("sum lambda_i x_i =", sum(l * p[0] for l, p in zip(lam, back.points)))
alpha = direction_from_dependence(gale, lam)
print("alpha recovered:", alpha)

print("\norigin-in-relative-interior tests (exact):")
for vectors in (
    [(1, 0), (-1, 1), (-1, -1)],   # positively spanning triple
    [(1, 0), (0, 1)],              # origin only on the hull boundary
    [(1, 0), (-1, 0)],             # interior of a segment
):
    print(f"  {vectors}: {relint_origin_test(vectors)}")
