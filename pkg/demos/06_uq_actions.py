"""The two commuting actions of the quantum enveloping algebra."""
from qstraighten.combinatorics import Tableau, yamanouchi_tableau
from qstraighten.straighten import expand_in_quantum_tableaux, monomial, quantum_tableau
from qstraighten.uqaction import RIGHT, act_e, act_f, check_bimodule_commutation, column_module_graph

tau = Tableau([[1, 1], [3]])
image = act_f(1, quantum_tableau(tau, 3), RIGHT)
print(f"f_1 ({tau}) =")
for t, c in sorted(expand_in_quantum_tableaux(image).items()):
    print(f"   {str(c):>8}  ({t})")

y = quantum_tableau(yamanouchi_tableau((2, 1)), 3)
print("\ne_i kills the highest vector:", all(act_e(i, y, RIGHT).is_zero() for i in (1, 2)))

p = monomial((2, 1, 3), (3, 1, 2), 3)
ok = all(check_bimodule_commutation(p, i, j) for i in (1, 2, 3) for j in (1, 2, 3))
print("row and column actions commute on t23 t11 t32:", ok)

g = column_module_graph(2, 4)
print("\ncolumns of size 2 over 1..4 under f_i:")
for s, i, t in sorted(g.edge_labels()):
    print(f"   {''.join(map(str, s))} -{i}-> {''.join(map(str, t))}")
