"""Normal forms, quantum minors and the quantum determinant."""
from qstraighten.qmatrix import NCPoly, qdet, qminor

t = lambda i, j: NCPoly.gen(i, j, 3)  # noqa: E731

print("t22 t11 =", t(2, 2) * t(1, 1))
print("t12 t11 =", t(1, 2) * t(1, 1))
print("t32 t23 =", t(3, 2) * t(2, 3))

print("\nqminor(12|23) =", qminor((1, 2), (2, 3), 3))
d = qdet(3)
print(f"qdet(3) has {len(d.terms)} terms")
central = all((d * t(i, j) - t(i, j) * d).is_zero() for i in range(1, 4) for j in range(1, 4))
print("qdet(3) commutes with every generator:", central)

# At q = 1 everything collapses to the commutative polynomial ring.
p = t(2, 3) * t(1, 1) * t(3, 2)
print("\nt23 t11 t32 in normal form:", p)
print("at q = 1:", p.at_q1())
