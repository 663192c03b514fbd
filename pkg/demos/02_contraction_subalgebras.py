"""Contract finite subschemes of the line and certify the resulting algebras.

Run with: python demos/02_contraction_subalgebras.py
"""

from pinchjac import (
    MembershipCertificate,
    Poly,
    contract_p1,
    contraction_generators,
    finite_subscheme,
    subalgebra_membership,
    vanishing_ideal_generator,
)

# Functions on the curve obtained by gluing 0 and 1 are the polynomials of
# the form constant + multiple of t(t - 1).
z = finite_subscheme([(0, 1), (1, 1)])
g = vanishing_ideal_generator(z)
print("ideal generator:", g)

generators = contraction_generators(g)
print("algebra generators:", [str(p) for p in generators.generators])
print("dimension certificate checked through degree", generators.hilbert_checked_to)

# Membership comes with an explicit expression in the generators.
f = Poly((0, 0, 0, 0, -1, 1))  # t^5 - t^4
answer = subalgebra_membership(f, g)
assert isinstance(answer, MembershipCertificate)
print(f"{f} = {answer.constant} + sum of", answer.terms)
assert answer.expand() == f

# t itself is not a function on the glued curve: it separates 0 from 1.
print("t in the algebra:", subalgebra_membership(Poly((0, 1)), g))

# The doubled point at 0 contracts to the cusp, with generators t^2 and t^3.
doubled = finite_subscheme([(0, 2)])
print("cusp generators:", [str(p) for p in
                           contraction_generators(vanishing_ideal_generator(doubled)).generators])

# Either contraction also produces the pinched-curve datum itself.
print("contracted curve:", contract_p1(z).singularities)
