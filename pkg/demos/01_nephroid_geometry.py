# # The nephroid domain
#
# The target region is the image of the unit disk under 1 + z - z^3/3.
# This script walks through its shape and the one geometric fact the radius
# computations lean on: the largest disk centred at a real point a.

# +
import numpy as np

from nephroid_radii import (
    DEFAULT_DOMAIN,
    boundary_point,
    contains,
    critical_x0,
    h_poly,
    inscribed_radius,
)

# -
# The boundary runs from the cusp at 5/3 (t = 0) over the top at 1 + 4i/3
# (t = pi/2) to the cusp at 1/3 (t = pi).
for t in (0.0, np.pi / 4, np.pi / 2, 3 * np.pi / 4, np.pi):
    u, v = boundary_point(t)
    print(f"t = {t:.4f}   w = {u:.6f} {v:+.6f}i")

# -
# Both cusps point inwards, so points just past them on the real axis sit
# in a thin notch outside the domain.
for w in (1.0, 1 / 3, 5 / 3, 5 / 3 + 1e-3, 5 / 3 + 1e-3 + 1e-3j, 1 + 1.34j):
    print(f"{w!s:>28}  {contains(w).name}")

# -
# Squared distance from (a, 0) to the boundary point with cos t = x is a
# cubic H(x).  Its stationary point in (-1, 1) is a maximum, so the
# minimum is at x = -1 or x = 1, i.e. at one of the cusps.
for a in (0.5, 0.9, 1.0, 1.2, 1.6):
    x0 = critical_x0(a)
    ends = h_poly(-1.0, a), h_poly(1.0, a)
    print(f"a = {a:.2f}  x0 = {x0:+.5f}  H(x0) = {h_poly(x0, a):.5f}  "
          f"H(-1), H(1) = {ends[0]:.5f}, {ends[1]:.5f}  r_a = {inscribed_radius(a):.5f}")

# -
# The same radius measured numerically against the sampled boundary.
a = np.linspace(0.35, 1.65, 6)
d, t_star = DEFAULT_DOMAIN.boundary_distance(a)
print(np.column_stack([a, d, inscribed_radius(a), t_star]).round(9))
