"""Stretching-parameter geometry: scales, cylinders, the cube map, margins.

Stretching tubular neighborhoods of the surfaces in a simplex produces a
family of metrics parameterized by barycentric data and stretch values.
This demo walks the computable skeleton of that family: the cut-off ramp,
the scale of a parameter point, warped cylinder lengths (closed form vs
quadrature), the piecewise homeomorphism onto a cube face, its coverage
audit, and the quantitative vanishing margins.
"""

import random
from fractions import Fraction

from surfcomplex.paramgeo import (
    CurvatureModel,
    WeightFunction,
    cutoff,
    cylinder_length,
    cylinder_length_quadrature,
    lambda_min,
    lambda_of,
    metric_descriptor,
    psi_forward,
    psi_inverse,
    q_cover_check,
    rho0,
    sample_ext_boundary,
    vanishing_certificate,
    vanishing_data,
)

# The reference ramp and the cut-off built from it.
print("ramp: rho0(0) =", rho0(0), " rho0(1/2) =", rho0(0.5), " rho0(1) =", rho0(1))
print("cutoff on ([0,1],[1/4,3/4]) at 1/8:", cutoff(0, 1, 0.25, 0.75, 0.125))

# Weights on faces and the scale of a parameter point.
a = WeightFunction.dyadic()
sigma = ("A", "B", "C")
print("\ndyadic weights: a(vertex) = 1, a(edge) = 1/2, a(triangle) = 1/4")
print("scale minimum over the triangle:", lambda_min(sigma, a))

s0 = (("A",),)
s1 = (("A",), ("A", "B"))
lam = lambda_of([s0, s1], [Fraction(1, 2), Fraction(1, 2)], a)
print("scale of an even mix of a vertex chain and an edge chain:", lam)

# Warped cylinder lengths: the closed form against adaptive quadrature.
print("\ncylinder with scale 1 and stretch 2:")
print("  closed form:", cylinder_length(1, 2), " inner:", 3)
print("  quadrature :", cylinder_length_quadrature(1, 2))
print("  printed convention (square-root speed):",
      round(cylinder_length(1.0, 2.0, "printed"), 6))

# A metric descriptor lists every stretched segment with its lengths.
top = (("A", "B"),)   # the single-face chain at the whole edge
d = metric_descriptor(("A", "B"), top, [top], [1],
                      {"A": 1, "B": 2}, WeightFunction.one())
print("\nmetric descriptor segments:")
for seg in d.cylinder_segments():
    print(f"  surface {seg.surface}: stretch {seg.r}, total length {seg.total_length}")

# The boundary of the stretch domain maps onto the exterior cube face.
big_r = Fraction(1)
s = (("A",), ("A", "B"), ("A", "B", "C"))
x = psi_forward(sigma, "A", big_r, s,
                (Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)), {"A": big_r})
print("\nforward image of a barycenter point:", dict(sorted(x.items())))
pinned, tau, s_back, t_back, r_back = psi_inverse(sigma, big_r, x)
print("inverse recovers the piece with smallest face", tau,
      "and weights", [str(v) for v in t_back])

cover = q_cover_check(sigma, 1, Fraction(1, 8))
print(f"cube coverage audit: {cover['points']} grid points, "
      f"{cover['uncovered']} uncovered")

# Vanishing margins in the exact toy curvature model.
aa = WeightFunction.constant_on_higher(Fraction(1, 2))
model = CurvatureModel(kappa_norm_sup=Fraction(10), c1_square=4)
data = vanishing_data(sigma, aa, model)
print(f"\ntoy model: curvature excess {data['c_value']}, "
      f"scale minimum {data['lambda_min']}, threshold {data['r_bar']}")
rng = random.Random(0)
samples = sample_ext_boundary(sigma, data["r_bar"], 200, rng)
cert = vanishing_certificate(sigma, aa, model, data["r_bar"], samples,
                             {v: (0, 2) for v in sigma})
print(f"certificate over {cert.sample_count} boundary samples: "
      f"certified = {cert.certified}, smallest margin = {cert.min_margin}")
