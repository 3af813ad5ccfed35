# Root systems and weights
#
# Everything is exact: Cartan matrices are integers, the invariant form is a
# matrix of Fractions.  Weights are tuples of fundamental coordinates.

from liemult import (
    dominant_representative, inner_product, root_system, subdominant_weights,
    weyl_orbit_size,
)

# F4 has 24 positive roots, stored in simple-root coordinates and ordered by height.

f4 = root_system("F4")
print(f4.type, "positive roots:", len(f4.positive_roots))
print("highest root:", f4.positive_roots[-1])
print("cartan:")
for row in f4.cartan:
    print("   ", row)

# Long roots have squared length 2.  In A2 the first fundamental weight has norm 2/3.

a2 = root_system("A2")
print("<w1, w1> in A2 =", inner_product(a2, (1, 0), (1, 0)))

# Dominant weights strictly below 2*w2 in A5.

a5 = root_system("A5")
print("below (0,2,0,0,0):", subdominant_weights(a5, (0, 2, 0, 0, 0)))

# Any integral weight has one dominant conjugate; the orbit size comes from its stabilizer.

w = (-1, 2)
d = dominant_representative(a2, w)
print(f"{w} -> {d}, orbit of size {weyl_orbit_size(a2, d)}")
