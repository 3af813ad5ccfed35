# Bounded classification of small maximal multiplicity
#
# Search every dominant weight up to a coordinate sum and compare the
# outcome with the bundled reference tables.  Results hold only up to the bound.

from liemult import LieType, root_system
from liemult.classification import a2_family_check, classify_type, omega_search

s = omega_search(root_system("C2"), 2, 4)
print("C2 multiplicity free:", s.omega(1))
print("C2 maximum exactly 2:", s.omega_prime(2))

rep = classify_type(LieType("C", 5), 4)
print("C5:", rep.omega2_prime, "conflicts:", len(rep.conflicts))

for name in ["A4", "G2", "C2"]:
    for d in classify_type(LieType.parse(name), 4).diffs:
        tag = "annotated" if d["annotated"] else "DIFF"
        print(f"{tag:9} {name} {d['entry']} {d['field']}: table {d['table_value']}, "
              f"computed {d['computed_value']}")

print("A2 family ok:", a2_family_check(10, 4)["ok"])
