from itertools import combinations, product

import pytest
from hypothesis import given, strategies as st

from qstraighten import verify as V
from qstraighten.coeffs import ONE, Q, parse, q_power
from qstraighten.combinatorics import Tableau, partitions, yamanouchi_tableau
from qstraighten.qmatrix import NCPoly
from qstraighten.straighten import expand_in_quantum_tableaux, monomial, quantum_tableau
from qstraighten.uqaction import (
    LEFT,
    RIGHT,
    SIDES,
    act_e,
    act_f,
    act_qeps,
    act_qh,
    check_bimodule_commutation,
    check_module_relations,
    column_module_action,
    column_module_graph,
    weight,
)


def t(i, j, n=3):
    return NCPoly.gen(i, j, n)


def test_generator_rules():
    assert act_qeps(3, t(2, 3), RIGHT) == t(2, 3).scale(Q)
    assert act_qeps(1, t(2, 3), RIGHT) == t(2, 3)
    assert act_qeps(2, t(2, 3) * t(2, 1), LEFT) == (t(2, 3) * t(2, 1)).scale(q_power(2))
    assert act_f(1, t(1, 1), RIGHT) == t(1, 2)
    assert act_e(1, t(1, 1), RIGHT).is_zero()
    assert act_e(1, t(2, 3), LEFT) == t(1, 3)
    assert act_f(2, t(2, 3), LEFT) == t(3, 3)


def test_index_errors():
    with pytest.raises(ValueError):
        act_e(3, t(1, 1), RIGHT)
    with pytest.raises(ValueError):
        act_qeps(4, t(1, 1), RIGHT)
    with pytest.raises(ValueError):
        act_f(1, t(1, 1), "UP")


def test_qh_scaling():
    p = t(2, 3) * t(1, 2) * t(3, 2)
    m = next(iter(p.normalize().terms))
    for side in SIDES:
        idx = [g[1] if side == RIGHT else g[0] for g in m]
        mono = NCPoly(3, {m: ONE})
        for i in (1, 2):
            h = idx.count(i) - idx.count(i + 1)
            assert act_qh(i, mono, side) == mono.scale(q_power(h))
            assert act_qh(i, act_qh(i, mono, side), side, sign=-1) == mono


def test_action_reference():
    image = act_f(1, quantum_tableau(Tableau([[1, 1], [3]]), 3), RIGHT)
    assert expand_in_quantum_tableaux(image) == {
        Tableau([[1, 2], [3]]): parse("1 + q^2"),
        Tableau([[1, 3], [2]]): parse("-q^3"),
    }


@pytest.mark.parametrize("n", [2, 3])
def test_module_relations_on_generators(n):
    span = [NCPoly.gen(a, b, n) for a, b in product(range(1, n + 1), repeat=2)]
    for side in SIDES:
        for i, j in product(range(1, n), repeat=2):
            assert check_module_relations(span, i, j, side)


def test_module_relations_degree_two():
    assert V.module_relations(2, degree=2).ok
    assert V.module_relations(3, degree=2).ok


def test_module_relations_checker_reports_counterexample(monkeypatch):
    import qstraighten.uqaction as U

    def unscaled_f(i, p, side):
        # Leibniz rule without the q^{h_i} factor
        terms = {}
        for m, c in p.terms.items():
            for j, g in enumerate(m):
                if U._index(g, side) == i:
                    w = m[:j] + (U._moved(g, side, i + 1),) + m[j + 1:]
                    terms[w] = terms.get(w, 0) + c
        return NCPoly(p.n, terms).normalize()

    span = [t(1, 1, 2) * t(2, 1, 2)]
    assert check_module_relations(span, 1, 1, RIGHT)
    monkeypatch.setattr(U, "act_f", unscaled_f)
    res = check_module_relations(span, 1, 1, RIGHT)
    assert not res and res.counterexample["side"] == RIGHT


def test_bimodule_commutation_example():
    assert check_bimodule_commutation(monomial((2, 1, 3), (3, 1, 2), 3), 1, 2)
    assert check_bimodule_commutation(t(1, 1), 1, 1)


def test_bimodule_commutation_random():
    assert V.bimodule_commutation(3, degree=3, samples=25, seed=11).ok


gens3 = [(i, j) for i in range(1, 4) for j in range(1, 4)]


@given(st.lists(st.sampled_from(gens3), min_size=1, max_size=4), st.integers(1, 2),
       st.sampled_from(["e", "f"]), st.sampled_from(SIDES))
def test_action_is_independent_of_representative(word, i, op, side):
    act = act_e if op == "e" else act_f
    raw = NCPoly(3, {tuple(word): ONE})
    assert act(i, raw, side) == act(i, raw.normalize(), side)


@given(st.lists(st.sampled_from(gens3), min_size=1, max_size=4), st.integers(1, 2), st.sampled_from(SIDES))
def test_weight_ladder(word, i, side):
    p = NCPoly(3, {tuple(word): ONE})
    mu = weight(p, side)
    up = act_e(i, p, side)
    if not up.is_zero():
        nu = list(mu)
        nu[i - 1] += 1
        nu[i] -= 1
        assert weight(up, side) == tuple(nu)
    down = act_f(i, p, side)
    if not down.is_zero():
        nu = list(mu)
        nu[i - 1] -= 1
        nu[i] += 1
        assert weight(down, side) == tuple(nu)


def test_weight_of_mixed_element_rejected():
    with pytest.raises(ValueError):
        weight(t(1, 1) + t(1, 2), RIGHT)


@pytest.mark.parametrize("n", [2, 3])
def test_highest_weight_vectors_are_annihilated(n):
    for k in range(1, 5):
        for lam in partitions(k, n):
            y = quantum_tableau(yamanouchi_tableau(lam), n)
            for i in range(1, n):
                assert act_e(i, y, RIGHT).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_column_rule_matches_action(n):
    for k in range(1, n + 1):
        for c in combinations(range(1, n + 1), k):
            p = quantum_tableau([c], n)
            for i in range(1, n):
                for op, act in (("e", act_e), ("f", act_f)):
                    d = column_module_action(c, i, op)
                    image = act(i, p, RIGHT)
                    if d is None:
                        assert image.is_zero()
                    else:
                        assert image == quantum_tableau([d], n)


def test_column_rule_examples():
    assert column_module_action((1, 2), 2, "f") == (1, 3)
    assert column_module_action((1, 2), 1, "f") is None
    assert column_module_action((1, 3), 1, "e") is None
    with pytest.raises(ValueError):
        column_module_action((1,), 1, "g")


def test_column_graph_k2_n4():
    g = column_module_graph(2, 4)
    assert len(g.vertices) == 6
    assert g.edge_labels() == V.COLUMN_GRAPH_EDGES
