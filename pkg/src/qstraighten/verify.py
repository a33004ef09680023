"""Desk-scale verification suites.

Each suite returns a :class:`SuiteReport`; ``report.ok`` is the verdict and
``report.failures`` holds at most a handful of counterexamples.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterable

from .coeffs import parse
from .combinatorics import (
    Tableau,
    Tabloid,
    b_sigma_labels,
    column_reading,
    column_superstandard,
    conjugate,
    count_semistandard,
    dominates,
    enumerate_tabloids,
    insertion_tableau,
    partitions,
    permuted_conjugate,
    recording_tableau,
)
from .crystal import component, lower_op, raise_op, shape_component
from .qmatrix import NCPoly, qdet
from .straighten import (
    Bitableau,
    BasisError,
    LatticeError,
    bitabloid_to_ncpoly,
    expand_in_bitableaux,
    expand_in_quantum_tableaux,
    expand_in_shape,
    monomial,
    q_zero_class,
    quantum_tableau,
    rank,
    straighten_flag,
    verify_theorem1,
)
from .uqaction import SIDES, RIGHT, act_f, check_bimodule_commutation, check_module_relations, column_module_graph

MAX_FAILURES = 5


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    failed: int = 0
    params: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, detail=None) -> None:
        self.cases += 1
        if not passed:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(detail)

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params, "cases": self.cases,
                "failed": self.failed, "ok": self.ok, "failures": self.failures}


def _map(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def words(n: int, k: int) -> list[tuple[int, ...]]:
    return list(product(range(1, n + 1), repeat=k))


# --------------------------------------------------------------------------
# bitableau straightening vs Robinson-Schensted
# --------------------------------------------------------------------------

def _theorem1_case(args):
    w, u, n = args
    r = verify_theorem1(w, u, n)
    return r["match"], None if r["match"] else {
        "rows": list(w), "cols": list(u), "q0_class": str(r["q0_class"]),
        "rs_prediction": str(r["rs_prediction"]), "polynomial": r["polynomial"], "error": r["error"]}


def theorem1(n: int, k: int, jobs: int = 1, lengths: Iterable[int] | None = None) -> SuiteReport:
    """Every monomial of degree k (or each degree in ``lengths``) against RS."""
    lengths = list(lengths or [k])
    rep = SuiteReport("theorem1", params={"n": n, "k": lengths})
    cases = [(w, u, n) for kk in lengths for w in words(n, kk) for u in words(n, kk)]
    for ok, detail in _map(_theorem1_case, cases, jobs):
        rep.record(ok, detail)
    return rep


def _value_vector(exp) -> dict:
    return {b: c.value_at_zero() for b, c in exp.items() if c.value_at_zero() != 0}


def corollary(n: int, k: int) -> SuiteReport:
    """Diagonal monomials are congruent mod qL exactly for plactic-equivalent words."""
    rep = SuiteReport("corollary", params={"n": n, "k": k})
    ws = words(n, k)
    vecs = {w: _value_vector(expand_in_bitableaux(monomial(w, w, n))) for w in ws}
    ptab = {w: insertion_tableau(w) for w in ws}
    for w, u in product(ws, ws):
        congruent = vecs[w] == vecs[u]
        plactic = ptab[w] == ptab[u]
        rep.record(congruent == plactic, {"w": list(w), "u": list(u), "congruent": congruent, "plactic": plactic})
    return rep


# --------------------------------------------------------------------------
# flag algebra
# --------------------------------------------------------------------------

def flag_tabloids(max_columns: int, n: int, max_size: int) -> list[Tabloid]:
    out = []
    for r in range(1, max_columns + 1):
        for shape in product(range(1, n + 1), repeat=r):
            if sum(shape) <= max_size:
                out.extend(enumerate_tabloids(shape, n))
    return out


def _flag_case(args):
    cols, n, full = args
    delta = Tabloid(cols)
    lam = conjugate(sorted(delta.shape, reverse=True))
    rewritten = straighten_flag(delta, n)
    detail = {"tabloid": [list(c) for c in cols]}
    try:
        p = quantum_tableau(delta, n)
        oracle = expand_in_quantum_tableaux(p) if full else expand_in_shape(p, lam)
    except (BasisError, ValueError) as e:
        detail["error"] = str(e)
        return False, detail
    if rewritten != oracle:
        detail["rewritten"] = {str(t): str(c) for t, c in rewritten.items()}
        detail["oracle"] = {str(t): str(c) for t, c in oracle.items()}
        return False, detail
    if any(t.shape != lam for t in rewritten):
        detail["error"] = "tableau of the wrong shape"
        return False, detail
    if not all(c.is_polynomial() for c in rewritten.values()):
        detail["error"] = "coefficient outside K[q]"
        return False, detail
    p = insertion_tableau(column_reading(delta))
    expected = p if p.shape == lam else None
    try:
        got = q_zero_class(rewritten)
    except LatticeError as e:
        detail["error"] = str(e)
        return False, detail
    if got != expected:
        detail["q0_class"] = str(got)
        detail["expected"] = str(expected)
        return False, detail
    return True, None


def flag(n: int = 4, max_columns: int = 3, max_size: int = 6, jobs: int = 1,
         sample: int | None = None, seed: int = 0, full_oracle: bool = False) -> SuiteReport:
    """Column rewriting against a linear-solve oracle, plus the tabloid q -> 0 class.

    The default oracle solves over quantum tableaux of the target shape only;
    ``full_oracle`` solves in the whole bitableau basis of the graded component.
    """
    rep = SuiteReport("flag", params={"n": n, "max_columns": max_columns, "max_size": max_size,
                                      "oracle": "full" if full_oracle else "shape"})
    tabs = flag_tabloids(max_columns, n, max_size)
    if sample is not None and sample < len(tabs):
        tabs = random.Random(seed).sample(tabs, sample)
        rep.params["sample"] = sample
    for ok, detail in _map(_flag_case, [(t.columns, n, full_oracle) for t in tabs], jobs):
        rep.record(ok, detail)
    return rep


def bsigma(lam=(2, 1), n: int = 3) -> SuiteReport:
    """B_sigma is a basis of V_lambda for every sigma, and its q -> 0 classes are sigma-independent."""
    lam = tuple(lam)
    rep = SuiteReport("bsigma", params={"lambda": list(lam), "n": n})
    r = len(conjugate(lam))
    dim = count_semistandard(lam, n)
    classes = {}
    for sigma in permutations(range(1, r + 1)):
        labels = b_sigma_labels(lam, sigma, n)
        rep.record(len(labels) == dim, {"sigma": sigma, "size": len(labels), "dim": dim})
        polys = [quantum_tableau(t, n).terms for t in labels]
        rep.record(rank(polys) == dim, {"sigma": sigma, "error": "B_sigma not independent"})
        for t in labels:
            exp = straighten_flag(t, n)
            classes[(sigma, t)] = (q_zero_class(exp), _value_vector(exp), insertion_tableau(column_reading(t)))
    items = sorted(classes.items())
    for (ka, (ca, va, pa)), (kb, (cb, vb, pb)) in product(items, items):
        rep.record((va == vb) == (pa == pb), {"a": str(ka), "b": str(kb)})
    return rep


def bimodule_basis(lam, sigma, n: int) -> list[tuple[Tabloid, Tabloid]]:
    """Bitabloids (d | d') of shape sigma(lam') with Q(u_d) = Q(u_d') = tau_nu for some nu <= lam.

    tau_nu is the column-superstandard tableau of shape nu.
    """
    lam = tuple(lam)
    mu = permuted_conjugate(lam, sigma)
    k = sum(lam)
    targets = {column_superstandard(nu) for nu in partitions(k, n) if dominates(lam, nu)}
    tabs = enumerate_tabloids(mu, n)
    by_q: dict[Tableau, list[Tabloid]] = {}
    for t in tabs:
        qt = recording_tableau(column_reading(t))
        if qt in targets:
            by_q.setdefault(qt, []).append(t)
    return [(a, b) for group in by_q.values() for a in group for b in group]


def bimodule(lams=((2,), (1, 1)), n: int = 2) -> SuiteReport:
    """B_{lambda,sigma} is a basis of W_lambda with q -> 0 classes (P(u_d) | P(u_d'))."""
    rep = SuiteReport("bimodule", params={"lambdas": [list(l) for l in lams], "n": n})
    for lam in lams:
        lam = tuple(lam)
        k = sum(lam)
        dim = sum(count_semistandard(nu, n) ** 2 for nu in partitions(k, n) if dominates(lam, nu))
        r = len(conjugate(lam))
        for sigma in permutations(range(1, r + 1)):
            basis = bimodule_basis(lam, sigma, n)
            rep.record(len(basis) == dim, {"lambda": lam, "sigma": sigma, "size": len(basis), "dim": dim})
            polys = [bitabloid_to_ncpoly(a, b, n).terms for a, b in basis]
            rep.record(rank(polys) == dim, {"lambda": lam, "sigma": sigma, "error": "dependent"})
            for a, b in basis:
                exp = expand_in_bitableaux(bitabloid_to_ncpoly(a, b, n))
                expected = Bitableau(insertion_tableau(column_reading(a)), insertion_tableau(column_reading(b)))
                try:
                    got = q_zero_class(exp)
                except LatticeError as e:
                    got = str(e)
                rep.record(got == expected, {"lambda": lam, "sigma": sigma, "bitabloid": (str(a), str(b)),
                                             "got": str(got), "expected": str(expected)})
    return rep


# --------------------------------------------------------------------------
# algebra structure
# --------------------------------------------------------------------------

def centrality(n: int) -> SuiteReport:
    rep = SuiteReport("centrality", params={"n": n})
    d = qdet(n)
    for i, j in product(range(1, n + 1), repeat=2):
        g = NCPoly.gen(i, j, n)
        rep.record((d * g - g * d).is_zero(), {"i": i, "j": j})
    return rep


def module_relations(n: int, degree: int = 1) -> SuiteReport:
    """Chevalley relation [e_i, f_j] on all monomials up to ``degree``, both sides."""
    rep = SuiteReport("module-relations", params={"n": n, "degree": degree})
    span = []
    for d in range(1, degree + 1):
        for w in words(n, d):
            for u in words(n, d):
                span.append(monomial(w, u, n).normalize())
    for side in SIDES:
        for i, j in product(range(1, n), repeat=2):
            res = check_module_relations(span, i, j, side)
            rep.record(res.ok, res.counterexample)
    return rep


def bimodule_commutation(n: int, degree: int = 3, samples: int = 20, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("bimodule-commutation", params={"n": n, "degree": degree, "samples": samples})
    rng = random.Random(seed)
    for _ in range(samples):
        w = tuple(rng.randint(1, n) for _ in range(degree))
        u = tuple(rng.randint(1, n) for _ in range(degree))
        p = monomial(w, u, n)
        for i, j in product(range(1, n + 1), repeat=2):
            res = check_bimodule_commutation(p, i, j)
            rep.record(res.ok, res.counterexample)
    return rep


# --------------------------------------------------------------------------
# reference values
# --------------------------------------------------------------------------

def _T(*rows) -> Tableau:
    return Tableau(rows)


V21_EDGES = {
    (_T([1, 1], [2]), 1, _T([1, 2], [2])),
    (_T([1, 1], [2]), 2, _T([1, 1], [3])),
    (_T([1, 1], [3]), 1, _T([1, 2], [3])),
    (_T([1, 2], [3]), 1, _T([2, 2], [3])),
    (_T([2, 2], [3]), 2, _T([2, 3], [3])),
    (_T([1, 2], [2]), 2, _T([1, 3], [2])),
    (_T([1, 3], [2]), 2, _T([1, 3], [3])),
    (_T([1, 3], [3]), 1, _T([2, 3], [3])),
}

COLUMN_GRAPH_EDGES = {
    ((1, 2), 2, (1, 3)), ((1, 3), 3, (1, 4)), ((1, 3), 1, (2, 3)),
    ((1, 4), 1, (2, 4)), ((2, 3), 3, (2, 4)), ((2, 4), 2, (3, 4)),
}

OPERATOR_WORD = (2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 2)
OPERATOR_RAISED = (2, 1, 1, 1, 2, 2, 1, 1, 1, 1, 1)
OPERATOR_LOWERED = (2, 1, 1, 1, 2, 2, 1, 1, 1, 2, 2)

T23_T11_T32_COEFFS = sorted(map(str, map(parse, ["q^3", "-q^3", "1 - q^2 + q^4", "q^4", "q^5", "-q^5"])))
FLAG_COEFFS = sorted(map(str, map(parse, ["1 - q^2", "q^3 - q", "q", "-q^2", "-q^4"])))


def crystal_21() -> bool:
    g = component((2, 1, 1), 3)
    return len(g.vertices) == 8 and len(g.edges) == 8 and g.edge_labels() == V21_EDGES


def crystal_22() -> bool:
    g = shape_component((2, 2), 4)
    return len(g.vertices) == 20 and g.is_connected()


def column_graph() -> bool:
    return column_module_graph(2, 4).edge_labels() == COLUMN_GRAPH_EDGES


def operator_reference() -> bool:
    return raise_op(OPERATOR_WORD, 1) == OPERATOR_RAISED and lower_op(OPERATOR_WORD, 1) == OPERATOR_LOWERED


def monomial_expansion() -> bool:
    exp = expand_in_bitableaux(monomial((2, 1, 3), (3, 1, 2), 3))
    cls = q_zero_class(exp)
    return (sorted(str(c) for c in exp.values()) == T23_T11_T32_COEFFS
            and cls == Bitableau(_T([1, 3], [2]), _T([1, 2], [3])))


def flag_reference() -> bool:
    exp = straighten_flag(Tabloid([(1, 5), (2, 3, 6)]), 6)
    return (sorted(str(c) for c in exp.values()) == FLAG_COEFFS
            and exp.get(_T([1, 2], [3, 6], [5])) == parse("1 - q^2")
            and insertion_tableau((5, 1, 6, 3, 2)) == _T([1, 2], [3, 6], [5]))


def action_reference() -> bool:
    image = act_f(1, quantum_tableau(_T([1, 1], [3]), 3), RIGHT)
    return expand_in_quantum_tableaux(image) == {
        _T([1, 2], [3]): parse("1 + q^2"),
        _T([1, 3], [2]): parse("-q^3"),
    }


REFERENCE_CHECKS = {
    "crystal-21": crystal_21,
    "crystal-22": crystal_22,
    "column-module-graph": column_graph,
    "operator-reference": operator_reference,
    "monomial-expansion": monomial_expansion,
    "flag-reference": flag_reference,
    "action-reference": action_reference,
}


def figures() -> SuiteReport:
    rep = SuiteReport("figures")
    for name, check in REFERENCE_CHECKS.items():
        rep.record(check(), name)
    return rep


def run_suite(name: str, n: int | None = None, k: int | None = None, jobs: int = 1, seed: int = 0) -> list[SuiteReport]:
    """Dispatch used by the command line; defaults follow the acceptance sizes."""
    if name == "theorem1":
        if n is None:
            return [theorem1(2, 4, jobs, lengths=range(1, 5)), theorem1(3, 3, jobs)]
        return [theorem1(n, k or 3, jobs, lengths=range(1, (k or 3) + 1))]
    if name == "corollary":
        nn = n or 3
        return [corollary(nn, kk) for kk in range(1, (k or 3) + 1)]
    if name == "flag":
        return [flag(n or 4, 3, k or 6, jobs)]
    if name == "bsigma":
        return [bsigma((2, 1), n or 3)]
    if name == "bimodule":
        return [bimodule(((2,), (1, 1)), n or 2), bimodule_commutation(n or 3, k or 3, seed=seed)]
    if name == "centrality":
        return [centrality(nn) for nn in ([n] if n else [2, 3])]
    if name == "module-relations":
        return [module_relations(nn, k or 1) for nn in ([n] if n else [2, 3])]
    if name == "figures":
        return [figures()]
    if name == "all":
        out = []
        for s in ("figures", "centrality", "module-relations", "corollary", "bsigma", "bimodule", "flag", "theorem1"):
            out.extend(run_suite(s, None, None, jobs, seed))
        return out
    raise ValueError(f"unknown suite {name!r}")


SUITES = ("theorem1", "corollary", "flag", "bsigma", "bimodule", "centrality", "module-relations", "figures", "all")
