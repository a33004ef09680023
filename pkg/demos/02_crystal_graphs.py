"""Crystal operators on words and the graphs they generate.

Writes two DOT files next to this script; render with ``dot -Tpng``.
"""
from collections import Counter
from pathlib import Path

from qstraighten.combinatorics import insertion_tableau, is_yamanouchi
from qstraighten.crystal import (
    connected_components,
    lower_op,
    raise_op,
    shape_component,
    stats,
    to_dot,
    word_graph,
)

w = (2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2)
print("w          ", "".join(map(str, w)))
print("e_1 w      ", "".join(map(str, raise_op(w, 1))))
print("f_1 w      ", "".join(map(str, lower_op(w, 1))))
print("(eps, phi) ", tuple(stats(w, 1)))

# Every component of the word crystal has one Yamanouchi (highest) word,
# and components of the same shape are isomorphic.
g = word_graph(3, 3)
shapes = Counter()
for comp in connected_components(g):
    top = [g.vertices[v] for v in comp if is_yamanouchi(g.vertices[v])]
    shapes[insertion_tableau(top[0]).shape] += 1
print("\ncomponents of the 27 words of length 3:", dict(shapes))

out = Path(__file__).parent
for shape, n in [((2, 1), 3), ((2, 2), 4)]:
    comp = shape_component(shape, n)
    name = "crystal_" + "".join(map(str, shape)) + ".dot"
    (out / name).write_text(to_dot(comp))
    print(f"shape {shape}, n={n}: {len(comp.vertices)} vertices, {len(comp.edges)} edges -> {name}")
