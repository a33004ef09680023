"""Row insertion, the recording tableau, and plactic classes."""
from itertools import product

from qstraighten.combinatorics import (
    insertion_tableau,
    partitions,
    rs,
    rs_inverse,
    standard_tableaux,
)

w = (2, 1, 4, 3, 5, 1, 2)
p, q = rs(w)
print("word        ", "".join(map(str, w)))
print("insertion P ", p)
print("recording Q ", q)
print("inverse     ", "".join(map(str, rs_inverse(p, q))))

# Words sharing P form a plactic class; its size is the number of standard
# tableaux of the shape, since Q ranges over all of them.
classes = {}
for word in product((1, 2, 3), repeat=4):
    classes.setdefault(insertion_tableau(word), []).append(word)
print(f"\n{3 ** 4} words of length 4 over 1..3 fall into {len(classes)} plactic classes")
for nu in partitions(4, 3):
    sizes = {len(v) for t, v in classes.items() if t.shape == nu}
    print(f"  shape {nu}: class size {sizes} = #SYT {len(standard_tableaux(nu))}")
