"""Expanding monomials on quantum bitableaux and reading off the q = 0 term."""
from qstraighten.combinatorics import rs
from qstraighten.straighten import expand_in_bitableaux, monomial, q_zero_class, verify_theorem1

w, u = (2, 1, 3), (3, 1, 2)
exp = expand_in_bitableaux(monomial(w, u, 3))
print("t23 t11 t32 =")
for b, c in sorted(exp.items()):
    print(f"   {str(c):>16}  {b}")
print("survivor at q = 0:", q_zero_class(exp))
print("RS prediction:    ", rs(w).p, "|", rs(u).p, "  (Q tableaux equal:", rs(w).q == rs(u).q, ")")

# When the recording tableaux differ nothing survives.
print("\nt12 t21 survivor:", verify_theorem1((1, 2), (2, 1), 2)["q0_class"])

# A short sweep.
bad = 0
for a in range(1, 4):
    for b in range(1, 4):
        for c in range(1, 4):
            for x in range(1, 4):
                for y in range(1, 4):
                    for z in range(1, 4):
                        bad += not verify_theorem1((a, b, c), (x, y, z), 3)["match"]
print("degree-3 monomials for n=3 disagreeing with RS:", bad)
