# Weight multiplicities
#
# The Freudenthal recursion does the real work.  A slow Kostant partition
# function formula is kept as an independent check at small rank.

from liemult import (
    freudenthal_multiplicity, kostant_multiplicity_oracle, multiplicity_table, root_system,
    weight_count_profile, weyl_dimension,
)

a2 = root_system("A2")
print("m_(2,2)(0) =", freudenthal_multiplicity(a2, (2, 2), (0, 0)))
print("oracle     =", kostant_multiplicity_oracle(a2, (2, 2), (0, 0)))

# A full table over dominant weights.

g2 = root_system("G2")
table = multiplicity_table(g2, (1, 1))
for mu, m in table:
    print("  ", mu, m)
print("dim", weyl_dimension(g2, (1, 1)), "max multiplicity", table.max_multiplicity)

# Profiles count every weight of the module (whole orbits), grouped by multiplicity.

for name, lam in [("C5", (0, 0, 0, 0, 1)), ("A3", (0, 3, 0)), ("F4", (0, 0, 0, 1))]:
    p = weight_count_profile(root_system(name), lam)
    print(f"{name} {lam}: n1={p.n(1)} n2={p.n(2)} dim={p.dim}")
