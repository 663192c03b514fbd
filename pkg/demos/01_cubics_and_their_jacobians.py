"""Walk through the two singular cubics and their Jacobians.

Run with: python demos/01_cubics_and_their_jacobians.py
"""

from fractions import Fraction

from pinchjac import aj_eval, jac_eq, jacobian_structure, nodal_param, param_inverse
from pinchjac.builders import cuspidal_cubic, nodal_cubic, two_nodes_pair

# The nodal cubic y^2 = x*y + x^3 is a projective line with the points 0 and
# 1 glued together. Its Jacobian is a one-dimensional torus.
nodal = nodal_cubic()
presentation = jacobian_structure(nodal)
print("nodal cubic ranks:", presentation.torus_rank, presentation.unipotent_rank,
      presentation.abelian_rank)

# The parametrization t -> (t^2 - t, t^3 - t^2) covers it, with rational
# inverse (x, y) -> y/x away from the node.
for t in (Fraction(2), Fraction(-1), Fraction(7, 2)):
    x, y = nodal_param(t)
    assert y * y == x * y + x**3
    assert param_inverse(x, y) == t
print("parametrization identities hold on sample points")

# The Abel-Jacobi map with basepoint infinity sends p to the single torus
# coordinate (p - 1)/p; it separates points.
for p in (Fraction(2), Fraction(5), Fraction(-3)):
    element = aj_eval(nodal, presentation, "L", p)
    print(f"  aj({p}) =", element.torus_coords[0])
    assert element.torus_coords == ((p - 1) / p,)

# The cuspidal cubic y^2 = x^3 pinches a doubled point instead; its Jacobian
# is the additive group, read off in a truncated-logarithm coordinate.
cusp = cuspidal_cubic()
cp = jacobian_structure(cusp)
print("cuspidal cubic ranks:", cp.torus_rank, cp.unipotent_rank, cp.abelian_rank)
for p in (Fraction(5), Fraction(-2)):
    element = aj_eval(cusp, cp, "L", p)
    print(f"  aj({p}) =", element.unipotent_coords[0])
    assert element.unipotent_coords == (-1 / p,)

# Two lines glued at a pair of nodes also have a one-dimensional torus as
# Jacobian, but the smooth locus is two-dimensional in the sense that it has
# two components, so the Abel-Jacobi map cannot be injective: points p on one
# line and q on the other collide exactly when p + q = 1.
pair = two_nodes_pair()
pp = jacobian_structure(pair)
a = aj_eval(pair, pp, "L1", 2)
b = aj_eval(pair, pp, "L2", -1)
print("two-node pair: aj(L1, 2) == aj(L2, -1):", jac_eq(a, b))
