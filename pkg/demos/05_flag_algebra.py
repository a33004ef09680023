"""Column rewriting of quantum tabloids into quantum tableaux."""
from qstraighten.combinatorics import Tabloid, column_reading, insertion_tableau
from qstraighten.straighten import (
    expand_in_quantum_tableaux,
    q_zero_class,
    quantum_tableau,
    straighten_flag,
)

delta = Tabloid([(1, 5), (2, 3, 6)])
exp = straighten_flag(delta, 6)
print(f"tabloid {delta} =")
for t, c in sorted(exp.items()):
    print(f"   {str(c):>10}  ({t})")

# The same coefficients come out of a brute-force linear solve.
print("agrees with linear solve:", exp == expand_in_quantum_tableaux(quantum_tableau(delta, 6)))

u = column_reading(delta)
print("column reading", "".join(map(str, u)), "inserts to", insertion_tableau(u))
print("survivor at q = 0:", q_zero_class(exp))
