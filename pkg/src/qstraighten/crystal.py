"""Kashiwara operators on words at q = 0 and the crystal graphs they generate.

The operators act on the subword of letters ``i, i+1``: every factor
``(i+1) i`` is cancelled repeatedly, leaving ``i^r (i+1)^s``.  Raising turns
the leftmost surviving ``i+1`` into ``i``; lowering turns the rightmost
surviving ``i`` into ``i+1``.  ``None`` plays the role of the zero vector.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, NamedTuple, Sequence

from .combinatorics import Word, insertion_tableau, is_yamanouchi

LEFT = "LEFT"
RIGHT = "RIGHT"

DEFAULT_MAX_VERTICES = 200_000


class StringStats(NamedTuple):
    epsilon: int
    phi: int


def _unmatched(word: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of the surviving i's and surviving (i+1)'s after bracket cancellation."""
    free_i: list[int] = []
    open_ip1: list[int] = []
    for pos, x in enumerate(word):
        if x == i + 1:
            open_ip1.append(pos)
        elif x == i:
            if open_ip1:
                open_ip1.pop()
            else:
                free_i.append(pos)
    return free_i, open_ip1


def raise_op(word: Sequence[int], i: int) -> Word | None:
    """The operator e_i on a word, or None when it vanishes."""
    _, ip1 = _unmatched(word, i)
    if not ip1:
        return None
    w = list(word)
    w[ip1[0]] = i
    return tuple(w)


def lower_op(word: Sequence[int], i: int) -> Word | None:
    """The operator f_i on a word, or None when it vanishes."""
    free_i, _ = _unmatched(word, i)
    if not free_i:
        return None
    w = list(word)
    w[free_i[-1]] = i + 1
    return tuple(w)


def stats(word: Sequence[int], i: int) -> StringStats:
    """(epsilon_i, phi_i): distances to the start and the end of the i-string."""
    free_i, ip1 = _unmatched(word, i)
    return StringStats(len(ip1), len(free_i))


def tensor_lower(left: StringStats, right: StringStats) -> str:
    """Which tensor factor f_i acts on in ``u (x) v``."""
    return RIGHT if left.epsilon < right.phi else LEFT


def tensor_raise(left: StringStats, right: StringStats) -> str:
    """Which tensor factor e_i acts on in ``u (x) v``."""
    return LEFT if left.epsilon > right.phi else RIGHT


def tensor_apply(u: Sequence[int], v: Sequence[int], i: int, op: str = "f") -> Word | None:
    """Apply e_i or f_i to the concatenation ``u v`` through the tensor product rule."""
    su, sv = stats(u, i), stats(v, i)
    if op == "f":
        side = tensor_lower(su, sv)
        apply = lower_op
    else:
        side = tensor_raise(su, sv)
        apply = raise_op
    if side == LEFT:
        x = apply(u, i)
        return None if x is None else tuple(x) + tuple(v)
    x = apply(v, i)
    return None if x is None else tuple(u) + tuple(x)


# --------------------------------------------------------------------------
# graphs
# --------------------------------------------------------------------------

@dataclass
class CrystalGraph:
    """Vertices plus coloured arrows ``(source, colour, target)`` given by index."""

    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    def index(self) -> dict:
        return {v: k for k, v in enumerate(self.vertices)}

    def edge_labels(self) -> set[tuple[Hashable, int, Hashable]]:
        return {(self.vertices[s], i, self.vertices[t]) for s, i, t in self.edges}

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def to_json(self) -> str:
        return json.dumps(
            {"vertices": [_label_json(v) for v in self.vertices],
             "edges": [list(e) for e in self.edges]},
            sort_keys=True,
        )


def _label_json(v):
    if hasattr(v, "to_json"):
        return v.to_json()
    return list(v)


def _label_text(v) -> str:
    if isinstance(v, tuple):
        from .combinatorics import format_word
        return format_word(v)
    return str(v)


def _sorted_graph(vertices, arrows) -> CrystalGraph:
    verts = sorted(vertices)
    idx = {v: k for k, v in enumerate(verts)}
    edges = sorted((idx[s], i, idx[t]) for s, i, t in arrows)
    return CrystalGraph(verts, edges)


def word_graph(n: int, m: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> CrystalGraph:
    """Crystal graph of the m-th tensor power of the basic representation."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if n ** m > max_vertices:
        raise ValueError(f"{n}^{m} words exceeds the cap of {max_vertices} vertices")
    words = list(product(range(1, n + 1), repeat=m))
    arrows = []
    for w in words:
        for i in range(1, n):
            v = lower_op(w, i)
            if v is not None:
                arrows.append((w, i, v))
    return _sorted_graph(words, arrows)


def word_component(highest: Sequence[int], n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> CrystalGraph:
    """Connected component of a Yamanouchi word, with word labels."""
    highest = tuple(highest)
    if not is_yamanouchi(highest):
        raise ValueError(f"{highest} is not a Yamanouchi word")
    if any(not 1 <= x <= n for x in highest):
        raise ValueError(f"letters of {highest} must lie in 1..{n}")
    seen = {highest}
    queue = deque([highest])
    arrows = []
    while queue:
        w = queue.popleft()
        for i in range(1, n):
            v = lower_op(w, i)
            if v is None:
                continue
            arrows.append((w, i, v))
            if v not in seen:
                if len(seen) >= max_vertices:
                    raise ValueError(f"component exceeds {max_vertices} vertices")
                seen.add(v)
                queue.append(v)
    return _sorted_graph(seen, arrows)


def component(highest: Sequence[int], n: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> CrystalGraph:
    """Connected component of a Yamanouchi word, vertices relabelled by insertion tableau."""
    g = word_component(highest, n, max_vertices)
    relabel = {w: insertion_tableau(w) for w in g.vertices}
    if len(set(relabel.values())) != len(relabel):
        raise AssertionError("insertion tableaux do not separate the component")
    arrows = [(relabel[g.vertices[s]], i, relabel[g.vertices[t]]) for s, i, t in g.edges]
    return _sorted_graph(relabel.values(), arrows)


def shape_component(shape: Sequence[int], n: int) -> CrystalGraph:
    """Crystal graph of the irreducible module with highest weight ``shape``.

    Seeded by the row reading of the Yamanouchi tableau, which is a Yamanouchi word.
    """
    from .combinatorics import yamanouchi_tableau

    if len(shape) > n:
        raise ValueError(f"shape {tuple(shape)} has more than {n} rows")
    return component(yamanouchi_tableau(shape).reading_word(), n)


def connected_components(g: CrystalGraph) -> list[list[int]]:
    parent = list(range(len(g.vertices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, _, t in g.edges:
        a, b = find(s), find(t)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(len(g.vertices)):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def to_dot(g: CrystalGraph, name: str = "") -> str:
    """Deterministic Graphviz text: vertices in label order, colour as edge label."""
    head = f"digraph {name} {{" if name else "digraph {"
    if not g.vertices:
        return head + "}\n"
    lines = [head]
    for k, v in enumerate(g.vertices):
        lines.append(f'  v{k} [label="{_label_text(v)}"];')
    for s, i, t in g.edges:
        lines.append(f'  v{s} -> v{t} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
