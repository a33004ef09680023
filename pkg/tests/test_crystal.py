from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qstraighten.combinatorics import (
    insertion_tableau,
    is_yamanouchi,
    partitions,
    recording_tableau,
    rs_inverse,
    semistandard_tableaux,
    standard_tableaux,
)
from qstraighten.crystal import (
    LEFT,
    RIGHT,
    StringStats,
    component,
    connected_components,
    lower_op,
    raise_op,
    shape_component,
    stats,
    tensor_apply,
    tensor_lower,
    tensor_raise,
    to_dot,
    word_component,
    word_graph,
)
from qstraighten.verify import V21_EDGES

W = (2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2)


def all_words(n, max_len):
    for k in range(max_len + 1):
        yield from product(range(1, n + 1), repeat=k)


def literal_residue(word, i):
    """Delete factors (i+1) i one at a time until none is left; return the positions kept."""
    kept = [(p, x) for p, x in enumerate(word) if x in (i, i + 1)]
    changed = True
    while changed:
        changed = False
        for k in range(len(kept) - 1):
            if kept[k][1] == i + 1 and kept[k + 1][1] == i:
                del kept[k:k + 2]
                changed = True
                break
    return kept


def literal_lower(word, i):
    free = [p for p, x in literal_residue(word, i) if x == i]
    if not free:
        return None
    w = list(word)
    w[free[-1]] = i + 1
    return tuple(w)


def literal_raise(word, i):
    free = [p for p, x in literal_residue(word, i) if x == i + 1]
    if not free:
        return None
    w = list(word)
    w[free[0]] = i
    return tuple(w)


def test_operators_on_long_word():
    assert raise_op(W, 1) == (2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 1)
    assert lower_op(W, 1) == (2, 1, 1, 1, 2, 2, 1, 1, 1, 2, 2)


def test_stats():
    assert stats((1,), 1) == StringStats(0, 1)
    # residue 1 1 1 1 2: four free 1s, one free 2
    assert stats(W, 1) == StringStats(1, 4)


def test_null_results():
    assert raise_op((1, 1), 1) is None
    assert lower_op((2,), 1) is None
    assert lower_op((2, 1), 1) is None


@pytest.mark.parametrize("n", [2, 3])
def test_bracket_rule_matches_literal_deletion(n):
    for w in all_words(n, 6):
        for i in range(1, n):
            assert lower_op(w, i) == literal_lower(w, i)
            assert raise_op(w, i) == literal_raise(w, i)


@pytest.mark.parametrize("n", [2, 3])
def test_inverse_pair(n):
    for w in all_words(n, 6):
        for i in range(1, n):
            u = lower_op(w, i)
            if u is not None:
                assert raise_op(u, i) == w
            v = raise_op(w, i)
            if v is not None:
                assert lower_op(v, i) == w


def test_string_lengths_count_applications():
    for w in all_words(3, 5):
        for i in (1, 2):
            e, f, x = 0, 0, w
            while (x := raise_op(x, i)) is not None:
                e += 1
            x = w
            while (x := lower_op(x, i)) is not None:
                f += 1
            assert stats(w, i) == (e, f)


def test_operators_preserve_recording_tableau():
    for w in all_words(3, 5):
        for i in (1, 2):
            for op in (raise_op, lower_op):
                v = op(w, i)
                if v is not None:
                    assert recording_tableau(v) == recording_tableau(w)


plactic_pairs = st.tuples(
    st.sampled_from([t for k in range(1, 6) for nu in partitions(k, 3) for t in semistandard_tableaux(nu, 3)]),
    st.data(),
)


@given(plactic_pairs)
def test_operators_are_plactic(pair):
    p, data = pair
    taus = standard_tableaux(p.shape)
    q1 = data.draw(st.sampled_from(taus))
    q2 = data.draw(st.sampled_from(taus))
    w, u = rs_inverse(p, q1), rs_inverse(p, q2)
    for i in (1, 2):
        for op in (raise_op, lower_op):
            a, b = op(w, i), op(u, i)
            assert (a is None) == (b is None)
            if a is not None:
                assert insertion_tableau(a) == insertion_tableau(b)


@given(st.lists(st.integers(1, 3), max_size=8).map(tuple), st.integers(1, 2))
def test_weight_shift(w, i):
    v = lower_op(w, i)
    if v is not None:
        cw, cv = Counter(w), Counter(v)
        assert cv[i] == cw[i] - 1 and cv[i + 1] == cw[i + 1] + 1
        assert all(cv[x] == cw[x] for x in (1, 2, 3) if x not in (i, i + 1))


def test_tensor_rule_examples():
    assert tensor_lower(StringStats(0, 0), StringStats(0, 1)) == RIGHT
    assert tensor_lower(StringStats(1, 0), StringStats(0, 1)) == LEFT
    assert tensor_lower(StringStats(0, 0), StringStats(0, 0)) == LEFT
    assert lower_op((), 1) is None


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_rule_agrees_with_bracket_rule(n):
    for w in all_words(n, 5):
        for cut in range(len(w) + 1):
            u, v = w[:cut], w[cut:]
            for i in range(1, n):
                assert tensor_apply(u, v, i, "f") == lower_op(w, i)
                assert tensor_apply(u, v, i, "e") == raise_op(w, i)


def test_tensor_raise_rule():
    assert tensor_raise(StringStats(2, 0), StringStats(0, 1)) == LEFT
    assert tensor_raise(StringStats(1, 0), StringStats(0, 1)) == RIGHT


def test_word_graph_small():
    g = word_graph(2, 1)
    assert g.edge_labels() == {((1,), 1, (2,))}
    g = word_graph(2, 2)
    assert len(g.vertices) == 4
    assert g.edge_labels() == {((1, 1), 1, (1, 2)), ((1, 2), 1, (2, 2))}
    assert [len(c) for c in connected_components(g)] == [3, 1]


def test_word_graph_cap():
    with pytest.raises(ValueError):
        word_graph(4, 10, max_vertices=1000)


@pytest.mark.parametrize("m", range(1, 5))
def test_component_multiplicities(m):
    n = 3
    g = word_graph(n, m)
    shapes = Counter()
    for comp in connected_components(g):
        words = [g.vertices[v] for v in comp]
        highest = [w for w in words if is_yamanouchi(w)]
        assert len(highest) == 1
        shape = insertion_tableau(highest[0]).shape
        assert len(comp) == len(semistandard_tableaux(shape, n))
        shapes[shape] += 1
    assert shapes == {nu: len(standard_tableaux(nu)) for nu in partitions(m, n)}


def test_yamanouchi_words_are_highest():
    for w in all_words(3, 5):
        if is_yamanouchi(w):
            assert all(stats(w, i).epsilon == 0 for i in (1, 2))
        else:
            assert any(stats(w, i).epsilon > 0 for i in (1, 2))


def test_shape_21_component():
    g = component((2, 1, 1), 3)
    assert len(g.vertices) == 8 and len(g.edges) == 8
    assert g.edge_labels() == V21_EDGES
    assert shape_component((2, 1), 3).edge_labels() == V21_EDGES


def test_shape_22_component():
    g = shape_component((2, 2), 4)
    assert len(g.vertices) == 20
    assert g.is_connected()
    assert set(g.vertices) == set(semistandard_tableaux((2, 2), 4))


def test_component_rejects_non_yamanouchi_seed():
    with pytest.raises(ValueError):
        component((1, 1, 2), 3)


def test_path_component():
    g = word_component((1,), 2)
    assert g.edge_labels() == {((1,), 1, (2,))}


def test_to_dot():
    assert to_dot(word_graph(1, 0).__class__()) == "digraph {}\n"
    text = to_dot(word_graph(2, 2))
    assert text.count("->") == 2 and text.count("[label=") == 6
    assert text == to_dot(word_graph(2, 2))
    fig = to_dot(component((2, 1, 1), 3))
    assert fig.count("->") == 8 and 'label="11/2"' in fig


def test_json_dump():
    import json

    data = json.loads(word_graph(2, 2).to_json())
    assert data["vertices"] == [[1, 1], [1, 2], [2, 1], [2, 2]]
    assert data["edges"] == [[0, 1, 1], [1, 1, 3]]
