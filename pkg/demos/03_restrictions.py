# Restrictions and reductions
#
# Multiplicities can often be read off a smaller group.  Each check returns
# a witness holding the numbers it compared.

from liemult import root_system
from liemult.lemmas import (
    check_levi_multiplicity, check_shift_reduction, levi_restriction, shift_reduce,
    subsystem_base, subsystem_restrict,
)

# Levi subsystem on the first three nodes of F4 is B3.

f4 = root_system("F4")
print(levi_restriction(f4, (0, 0, 0, 1), {1, 2, 3}).to_dict())

# A2: (5,4) at (5,4) - 2(alpha1 + alpha2) reduces to the zero weight of (2,2).

a2 = root_system("A2")
print(shift_reduce(a2, (5, 4), (3, 2), {1, 2}))
print(check_shift_reduction(a2, (5, 4), (3, 2), {1, 2}).values)

# Levi restriction preserves the multiplicity when the difference is supported on S.

b3 = root_system("B3")
print(check_levi_multiplicity(b3, (0, 2, 0), (2, 0, 0), {2, 3}).values)

# Non-simple subsystems: long roots of B4 span a D4.

b4 = root_system("B4")
base = subsystem_base(b4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 1, 2)])
print(base.induced_type, subsystem_restrict(b4, (1, 1, 0, 0), base).to_dict())
