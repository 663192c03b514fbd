"""When does the Abel-Jacobi map extend beyond the smooth locus?

A curve is modifiable when one component can be pulled away from the rest at
a mutual point so the curve disconnects; modification does not change the
Jacobian, so the Abel-Jacobi map extends over the new point. Everywhere
else, a unit germ exists over the singularity that no global unit of the
partial normalization can match, and that germ obstructs any extension.

Run with: python demos/03_modification_and_obstructions.py
"""

from pinchjac import (
    jacobian_structure,
    liftability_problem,
    liftability_test,
    modifiable_sites,
    modify,
    obstruction_witness,
)
from pinchjac.builders import two_lines, two_nodes_pair

# Two lines through one node: both branches are modification sites, and
# pulling them apart leaves two disjoint lines with the same (trivial)
# Jacobian.
pair = two_lines()
sites = modifiable_sites(pair)
print("two lines, sites:", sites)
before = jacobian_structure(pair)
after = jacobian_structure(modify(pair, sites[0]))
print("ranks before:", (before.torus_rank, before.unipotent_rank, before.abelian_rank))
print("ranks after: ", (after.torus_rank, after.unipotent_rank, after.abelian_rank))

# Two lines through two nodes: detaching either branch of either node leaves
# the curve connected through the other node, so nothing is modifiable...
lut = two_nodes_pair()
print("two-node pair, sites:", modifiable_sites(lut))

# ...and at every branch there is an obstruction witness: the germ with
# value 2 at that branch and 1 elsewhere cannot be matched by a global unit,
# because the two lines stay connected away from the chosen node.
for singularity in ("n1", "n2"):
    for branch in (0, 1):
        witness = obstruction_witness(lut, singularity, branch)
        print(f"witness at ({singularity}, {branch}):", witness.case, witness.failure)

# The solver is the ground truth: re-checking the first witness by hand.
witness = obstruction_witness(lut, "n1", 0)
problem = liftability_problem(lut, "n1", dict(enumerate(witness.germ)))
print("solver verdict:", liftability_test(problem))
