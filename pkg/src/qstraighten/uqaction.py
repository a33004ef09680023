"""The two commuting U_q(gl_n) actions on F_q[Mat_n].

The RIGHT action moves column indices, the LEFT (dagger) action moves row
indices.  On a word ``x_1 ... x_m`` in the generators the Leibniz rules give::

    e_i(x_1...x_m) = sum_j q^{-h_i}(x_1...x_{j-1}) e_i(x_j) x_{j+1}...x_m
    f_i(x_1...x_m) = sum_j x_1...x_{j-1} f_i(x_j) q^{h_i}(x_{j+1}...x_m)

where ``q^{h_i}`` scales a word by ``q^(#i - #(i+1))`` counted on the acting side.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coeffs import ZERO, q_int_signed, q_power
from .qmatrix import NCPoly

LEFT = "LEFT"
RIGHT = "RIGHT"
SIDES = (LEFT, RIGHT)


def _index(g, side: str) -> int:
    if side == RIGHT:
        return g[1]
    if side == LEFT:
        return g[0]
    raise ValueError(f"side must be LEFT or RIGHT, got {side!r}")


def _moved(g, side: str, new: int):
    return (g[0], new) if side == RIGHT else (new, g[1])


def _h(word, i: int, side: str) -> int:
    h = 0
    for g in word:
        x = _index(g, side)
        if x == i:
            h += 1
        elif x == i + 1:
            h -= 1
    return h


def _check_color(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"colour {i} outside 1..{n - 1}")


def weight(p: NCPoly, side: str) -> tuple[int, ...]:
    """Weight vector of a homogeneous element (index multiplicities on one side)."""
    ws = set()
    for m in p.terms:
        mu = [0] * p.n
        for g in m:
            mu[_index(g, side) - 1] += 1
        ws.add(tuple(mu))
    if len(ws) != 1:
        raise ValueError(f"element is not a weight vector ({len(ws)} weights)")
    return ws.pop()


def act_qeps(i: int, p: NCPoly, side: str) -> NCPoly:
    """q^{eps_i}: scale each word by q^(number of occurrences of index i)."""
    if not 1 <= i <= p.n:
        raise ValueError(f"index {i} outside 1..{p.n}")
    terms = {}
    for m, c in p.terms.items():
        k = sum(1 for g in m if _index(g, side) == i)
        terms[m] = c * q_power(k)
    return NCPoly(p.n, terms).normalize()


def act_qh(i: int, p: NCPoly, side: str, sign: int = 1) -> NCPoly:
    """q^{+-h_i} = q^{+-eps_i} q^{-+eps_{i+1}}."""
    _check_color(i, p.n)
    return NCPoly(p.n, {m: c * q_power(sign * _h(m, i, side)) for m, c in p.terms.items()}).normalize()


def act_e(i: int, p: NCPoly, side: str) -> NCPoly:
    """Raising operator e_i (RIGHT) or e_i^dagger (LEFT)."""
    _check_color(i, p.n)
    terms: dict = {}
    for m, c in p.terms.items():
        for j, g in enumerate(m):
            if _index(g, side) != i + 1:
                continue
            scale = q_power(-_h(m[:j], i, side))
            w = m[:j] + (_moved(g, side, i),) + m[j + 1:]
            terms[w] = terms.get(w, ZERO) + c * scale
    return NCPoly(p.n, terms).normalize()


def act_f(i: int, p: NCPoly, side: str) -> NCPoly:
    """Lowering operator f_i (RIGHT) or f_i^dagger (LEFT)."""
    _check_color(i, p.n)
    terms: dict = {}
    for m, c in p.terms.items():
        for j, g in enumerate(m):
            if _index(g, side) != i:
                continue
            scale = q_power(_h(m[j + 1:], i, side))
            w = m[:j] + (_moved(g, side, i + 1),) + m[j + 1:]
            terms[w] = terms.get(w, ZERO) + c * scale
    return NCPoly(p.n, terms).normalize()


ACTIONS = {"e": act_e, "f": act_f, "qeps": act_qeps}


@dataclass
class CheckResult:
    """Outcome of an operator-identity check; falsy when a counterexample exists."""

    ok: bool
    counterexample: dict | None = field(default=None)

    def __bool__(self):
        return self.ok


def check_module_relations(span: Iterable[NCPoly], i: int, j: int, side: str) -> CheckResult:
    """Check ``[e_i, f_j] v = delta_ij [h_i] v`` for every v in span."""
    for v in span:
        v = v.normalize()
        lhs = act_e(i, act_f(j, v, side), side) - act_f(j, act_e(i, v, side), side)
        if i == j:
            rhs = NCPoly(v.n, {m: c * q_int_signed(_h(m, i, side)) for m, c in v.terms.items()})
        else:
            rhs = NCPoly.zero(v.n)
        if not (lhs - rhs).is_zero():
            return CheckResult(False, {"element": str(v), "i": i, "j": j, "side": side,
                                       "lhs": str(lhs.normalize()), "rhs": str(rhs.normalize())})
    return CheckResult(True)


def _valid(op: str, i: int, n: int) -> bool:
    return 1 <= i <= (n if op == "qeps" else n - 1)


def check_bimodule_commutation(p: NCPoly, i: int, j: int) -> CheckResult:
    """Check that every RIGHT operator with index i commutes with every LEFT operator with index j."""
    p = p.normalize()
    for x, act_x in ACTIONS.items():
        if not _valid(x, i, p.n):
            continue
        for y, act_y in ACTIONS.items():
            if not _valid(y, j, p.n):
                continue
            a = act_x(i, act_y(j, p, LEFT), RIGHT)
            b = act_y(j, act_x(i, p, RIGHT), LEFT)
            if a != b:
                return CheckResult(False, {"element": str(p), "right_op": (x, i), "left_op": (y, j),
                                           "right_after_left": str(a), "left_after_right": str(b)})
    return CheckResult(True)


def column_module_action(c: Sequence[int], i: int, op: str) -> tuple[int, ...] | None:
    """e_i / f_i on the basis vector of the column module labelled by the set c."""
    c = tuple(c)
    s = set(c)
    if op == "e":
        if i + 1 not in s or i in s:
            return None
        s = (s - {i + 1}) | {i}
    elif op == "f":
        if i + 1 in s or i not in s:
            return None
        s = (s - {i}) | {i + 1}
    else:
        raise ValueError(f"op must be 'e' or 'f', got {op!r}")
    return tuple(sorted(s))


def column_module_graph(k: int, n: int):
    """Coloured graph of the f_i on k-element columns over 1..n."""
    from itertools import combinations

    from .crystal import _sorted_graph

    cols = list(combinations(range(1, n + 1), k))
    arrows = []
    for c in cols:
        for i in range(1, n):
            d = column_module_action(c, i, "f")
            if d is not None:
                arrows.append((c, i, d))
    return _sorted_graph(cols, arrows)
