"""Quantum bitableaux, their expansions, and q -> 0 congruence classes.

Two routes are provided:

* :func:`expand_in_bitableaux` solves the linear system of a graded
  component of F_q[Mat_n] against the quantum bitableau basis.  It works for
  any element and serves as the reference for everything else.
* :func:`straighten_flag` rewrites a quantum tabloid of the flag algebra into
  quantum tableaux with the column relations (alternation, Sylvester-type
  column exchange, Garnir-type shuffle relation).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .coeffs import ONE, ZERO, RationalQ, NotInLatticeRing, q_power
from .combinatorics import (
    Tableau,
    Tabloid,
    partitions,
    rs,
    semistandard_tableaux,
    to_tableau,
    yamanouchi_tableau,
)
from .qmatrix import Monomial, NCPoly, product_of, qminor

log = logging.getLogger(__name__)

#: Order in which the column minors of a bitableau are multiplied.
COLUMN_ORDER = "left-to-right"

DEFAULT_STEP_BUDGET = 100_000


class BasisError(RuntimeError):
    """The bitableau system of a graded component is not square and invertible."""


class LatticeError(AssertionError):
    """A q -> 0 class contradicts the crystal-lattice structure."""


@dataclass(frozen=True, order=True)
class Bitableau:
    left: Tableau
    right: Tableau

    def __post_init__(self):
        if self.left.shape != self.right.shape:
            raise ValueError(f"bitableau sides have shapes {self.left.shape} and {self.right.shape}")

    @property
    def shape(self):
        return self.left.shape

    def to_json(self) -> dict:
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True, order=True)
class Bitabloid:
    left: Tabloid
    right: Tabloid

    def __post_init__(self):
        if self.left.shape != self.right.shape:
            raise ValueError(f"bitabloid sides have shapes {self.left.shape} and {self.right.shape}")


Expansion = dict  # label -> RationalQ


# --------------------------------------------------------------------------
# quantum bitabloids as elements of F_q[Mat_n]
# --------------------------------------------------------------------------

def _columns(x) -> tuple:
    if isinstance(x, (Tableau, Tabloid)):
        return x.columns
    return tuple(tuple(c) for c in x)


def bitabloid_to_ncpoly(left, right, n: int) -> NCPoly:
    """Product of the quantum minors on matching columns of two tabloids/tableaux."""
    lc, rc = _columns(left), _columns(right)
    if tuple(map(len, lc)) != tuple(map(len, rc)):
        raise ValueError(f"column sizes differ: {tuple(map(len, lc))} vs {tuple(map(len, rc))}")
    return _bitabloid(lc, rc, n)


@lru_cache(maxsize=None)
def _bitabloid(lc: tuple, rc: tuple, n: int) -> NCPoly:
    pairs = list(zip(lc, rc))
    if COLUMN_ORDER != "left-to-right":
        pairs.reverse()
    return product_of((qminor(a, b, n) for a, b in pairs), n)


def bitableau_to_ncpoly(b: Bitableau, n: int) -> NCPoly:
    return bitabloid_to_ncpoly(b.left, b.right, n)


def quantum_tableau(tau, n: int) -> NCPoly:
    """The quantum tableau (y_lambda | tau); also accepts a tabloid (quantum tabloid)."""
    cols = _columns(tau)
    if any(len(c) > n for c in cols):
        raise ValueError(f"column longer than n={n}")
    left = tuple(tuple(range(1, len(c) + 1)) for c in cols)
    return bitabloid_to_ncpoly(left, cols, n)


# --------------------------------------------------------------------------
# exact linear algebra over Q(q)
# --------------------------------------------------------------------------

def solve(columns: Sequence[Mapping[object, RationalQ]], rhs: Mapping[object, RationalQ]) -> list[RationalQ]:
    """Solve ``sum_j x_j * columns[j] = rhs`` exactly (sparse Gauss elimination).

    Raises:
        BasisError: if the columns are dependent or rhs is not in their span.
    """
    return _Eliminator(columns).solve(rhs)


class _Eliminator:
    """Reduced row echelon data for a fixed set of column vectors, reusable for many RHS."""

    def __init__(self, columns: Sequence[Mapping[object, RationalQ]]):
        keys = sorted({k for c in columns for k in c})
        self.keys = keys
        kidx = {k: r for r, k in enumerate(keys)}
        ncols = len(columns)
        # rows of the augmented-with-identity transpose: we eliminate on the column vectors
        # directly, tracking the combination that produced each reduced vector.
        self.ncols = ncols
        pivots: list[tuple[int, dict[int, RationalQ], dict[int, RationalQ]]] = []
        for j, col in enumerate(columns):
            vec = {kidx[k]: v for k, v in col.items() if v}
            comb = {j: ONE}
            for r, pvec, pcomb in pivots:
                c = vec.get(r)
                if c:
                    _axpy(vec, -c, pvec)
                    _axpy(comb, -c, pcomb)
            if not vec:
                raise BasisError(f"column {j} is linearly dependent on the previous ones")
            r = _pick_pivot(vec)
            inv = vec[r].inverse()
            vec = {k: v * inv for k, v in vec.items()}
            comb = {k: v * inv for k, v in comb.items()}
            # keep earlier pivots reduced against the new one
            new_pivots = []
            for r2, pvec, pcomb in pivots:
                c = pvec.get(r)
                if c:
                    pvec = dict(pvec)
                    pcomb = dict(pcomb)
                    _axpy(pvec, -c, vec)
                    _axpy(pcomb, -c, comb)
                new_pivots.append((r2, pvec, pcomb))
            new_pivots.append((r, vec, comb))
            pivots = new_pivots
        self.pivots = pivots
        self.kidx = kidx

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, rhs: Mapping[object, RationalQ]) -> list[RationalQ]:
        vec = {}
        for k, v in rhs.items():
            if not v:
                continue
            if k not in self.kidx:
                raise BasisError(f"right-hand side has support {k!r} outside the span")
            vec[self.kidx[k]] = v
        x: dict[int, RationalQ] = {}
        for r, pvec, pcomb in self.pivots:
            c = vec.get(r)
            if c:
                _axpy(vec, -c, pvec)
                _axpy(x, c, pcomb)
        if vec:
            raise BasisError("right-hand side is not in the span of the columns")
        return [x.get(j, ZERO) for j in range(self.ncols)]


def _pick_pivot(vec: Mapping[int, RationalQ]) -> int:
    # a unit pivot (+-q^k) keeps the elimination inside Laurent polynomials
    def cost(r):
        c = vec[r]
        return (len(c.num) + len(c.den), r)
    return min(vec, key=cost)


def _axpy(y: dict, a: RationalQ, x: Mapping) -> None:
    for k, v in x.items():
        s = y.get(k, ZERO) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def rank(vectors: Sequence[Mapping[object, RationalQ]]) -> int:
    """Rank of a family of sparse vectors over Q(q)."""
    pivots: list[tuple[object, dict]] = []
    for col in vectors:
        vec = {k: v for k, v in col.items() if v}
        for r, pvec in pivots:
            c = vec.get(r)
            if c:
                _axpy(vec, -c, pvec)
        if vec:
            r = _pick_pivot(vec)
            inv = vec[r].inverse()
            pivots.append((r, {k: v * inv for k, v in vec.items()}))
    return len(pivots)


# --------------------------------------------------------------------------
# graded components and the bitableau basis
# --------------------------------------------------------------------------

def sorted_monomials(row_content: Sequence[int], col_content: Sequence[int]) -> list[Monomial]:
    """Normal-form monomials with given row and column contents (contingency tables)."""
    n = len(row_content)
    out: list[Monomial] = []
    cols_left = list(col_content)

    def rows_from(i, acc):
        if i == n:
            if not any(cols_left):
                out.append(tuple(acc))
            return
        for comp in _compositions(row_content[i], cols_left):
            for j, c in enumerate(comp):
                cols_left[j] -= c
            gens = [(i + 1, j + 1) for j, c in enumerate(comp) for _ in range(c)]
            rows_from(i + 1, acc + gens)
            for j, c in enumerate(comp):
                cols_left[j] += c

    rows_from(0, [])
    return out


def _compositions(total: int, caps: Sequence[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    for c in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - c, caps[1:]):
            yield (c,) + rest


def graded_bitableaux(row_content: Sequence[int], col_content: Sequence[int]) -> list[Bitableau]:
    """Bitableaux whose left side has the given content and right side the other."""
    n = len(row_content)
    k = sum(row_content)
    out = []
    for nu in partitions(k, n):
        lefts = semistandard_tableaux(nu, n, row_content)
        if not lefts:
            continue
        rights = semistandard_tableaux(nu, n, col_content)
        out.extend(Bitableau(a, b) for a in lefts for b in rights)
    return out


class GradedComponent:
    """The (row content, column content) component with its bitableau basis."""

    def __init__(self, row_content: tuple[int, ...], col_content: tuple[int, ...]):
        self.row_content = row_content
        self.col_content = col_content
        self.n = len(row_content)
        self.monomials = sorted_monomials(row_content, col_content)
        self.basis = graded_bitableaux(row_content, col_content)
        if len(self.basis) != len(self.monomials):
            raise BasisError(
                f"{len(self.basis)} bitableaux for {len(self.monomials)} monomials "
                f"in component {row_content}/{col_content}")
        self.vectors = [bitableau_to_ncpoly(b, self.n).terms for b in self.basis]
        self._elim = None

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    @property
    def eliminator(self) -> _Eliminator:
        if self._elim is None:
            self._elim = _Eliminator(self.vectors)
        return self._elim

    def expand(self, p: NCPoly) -> dict[Bitableau, RationalQ]:
        x = self.eliminator.solve(p.normalize().terms)
        return {b: c for b, c in zip(self.basis, x) if c}


@lru_cache(maxsize=None)
def graded_component(row_content: tuple[int, ...], col_content: tuple[int, ...]) -> GradedComponent:
    return GradedComponent(tuple(row_content), tuple(col_content))


def expand_in_bitableaux(p: NCPoly) -> dict[Bitableau, RationalQ]:
    """Coefficients of p on the quantum bitableau basis.

    Raises:
        ValueError: if p is not homogeneous in both the row and column contents.
    """
    p = p.normalize()
    if not p.terms:
        return {}
    comps = p.degree_components()
    if len(comps) != 1:
        raise ValueError("element is not homogeneous; split it with NCPoly.degree_components()")
    (rc, cc), part = next(iter(comps.items()))
    return graded_component(rc, cc).expand(part)


def expand_in_quantum_tableaux(p: NCPoly) -> dict[Tableau, RationalQ]:
    """Coefficients of a flag-algebra element on quantum tableaux (tau) = (y | tau).

    Raises:
        ValueError: if the bitableau expansion has a left side that is not Yamanouchi.
    """
    out = {}
    for b, c in expand_in_bitableaux(p).items():
        if b.left != yamanouchi_tableau(b.shape):
            raise ValueError(f"{b} is not a quantum tableau; element is outside the flag algebra")
        out[b.right] = c
    return out


@lru_cache(maxsize=None)
def _shape_eliminator(shape: tuple, content: tuple, n: int):
    taus = semistandard_tableaux(shape, n, content)
    return taus, _Eliminator([quantum_tableau(t, n).terms for t in taus])


def expand_in_shape(p: NCPoly, shape: Sequence[int]) -> dict[Tableau, RationalQ]:
    """Coefficients of p on the quantum tableaux of one shape only.

    Much cheaper than :func:`expand_in_quantum_tableaux` since the system has
    one unknown per tableau of the given shape and content.

    Raises:
        BasisError: if p is not in the span of those quantum tableaux.
    """
    p = p.normalize()
    if not p.terms:
        return {}
    comps = p.degree_components()
    if len(comps) != 1:
        raise ValueError("element is not homogeneous")
    (_, cc), part = next(iter(comps.items()))
    taus, elim = _shape_eliminator(tuple(shape), cc, p.n)
    if not taus:
        raise BasisError(f"no tableaux of shape {tuple(shape)} with content {cc}")
    x = elim.solve(part.terms)
    return {t: c for t, c in zip(taus, x) if c}


# --------------------------------------------------------------------------
# straightening in the flag algebra via the column relations
# --------------------------------------------------------------------------

_MQ = -q_power(1)


def _shuffles(l: int, k: int):
    """Subsets S of size k of range(l) with the inversion count of the shuffle (S, complement)."""
    for s in combinations(range(l), k):
        rest = [x for x in range(l) if x not in s]
        inv = sum(1 for a in s for b in rest if a > b)
        yield s, rest, inv


def sort_column(col: Sequence[int]) -> tuple[RationalQ, tuple[int, ...]] | None:
    """Alternation: None if a letter repeats, else (coefficient, sorted column)."""
    if len(set(col)) != len(col):
        return None
    inv = sum(1 for a in range(len(col)) for b in range(a + 1, len(col)) if col[a] > col[b])
    return _MQ ** (-inv), tuple(sorted(col))


def _normalize_columns(cols: Sequence[Sequence[int]]) -> tuple[RationalQ, tuple] | None:
    coeff = ONE
    out = []
    for c in cols:
        r = sort_column(c)
        if r is None:
            return None
        coeff = coeff * r[0]
        out.append(r[1])
    return coeff, tuple(out)


def column_exchange(a: Sequence[int], b: Sequence[int]) -> list[tuple[RationalQ, tuple, tuple]]:
    """Rewrite the product [a][b] with |a| <= |b| so the longer column comes first.

    Returns unnormalized (coefficient, new left column, new right column) terms.
    """
    k, l = len(a), len(b)
    out = []
    for s, rest, inv in _shuffles(l, k):
        left = tuple(a) + tuple(b[x] for x in rest)
        right = tuple(b[x] for x in s)
        out.append((_MQ ** inv, left, right))
    return out


def garnir(a: Sequence[int], b: Sequence[int], p: int) -> list[tuple[RationalQ, tuple, tuple]]:
    """Rewrite [a][b] (|a| >= |b|) violating the row condition at row p (0-based).

    The shuffle relation on ``j = b[:p+1] + a[p:]`` has [a][b] as its identity
    term; the returned terms are the negated remaining terms.

    Raises:
        ValueError: unless ``a[p] > b[p]``, which makes the letters of j distinct.
    """
    if not (p < len(b) <= len(a) and a[p] > b[p]):
        raise ValueError(f"no row violation at row {p} between {tuple(a)} and {tuple(b)}")
    k = p + 1
    fixed_left = tuple(a[:p])
    j = tuple(b[:k]) + tuple(a[p:])
    tail = tuple(b[k:])
    l = len(j)
    out = []
    for s, rest, inv in _shuffles(l, k):
        if inv == 0:
            continue
        left = fixed_left + tuple(j[x] for x in rest)
        right = tuple(j[x] for x in s) + tail
        out.append((-(_MQ ** inv), left, right))
    return out


def _first_defect(cols: tuple) -> tuple[str, int, int] | None:
    for c in range(len(cols) - 1):
        if len(cols[c]) < len(cols[c + 1]):
            return ("exchange", c, -1)
    for c in range(len(cols) - 1):
        a, b = cols[c], cols[c + 1]
        for p in range(len(b)):
            if a[p] > b[p]:
                return ("garnir", c, p)
    return None


def straighten_flag(delta, n: int | None = None, step_budget: int = DEFAULT_STEP_BUDGET) -> dict[Tableau, RationalQ]:
    """Expand the quantum tabloid (delta) on quantum tableaux by column rewriting.

    ``delta`` is a :class:`Tabloid` or any sequence of columns (listed bottom
    to top, not necessarily increasing).

    Raises:
        RuntimeError: if the rewriting exceeds ``step_budget`` steps.
    """
    cols = _columns(delta)
    if n is not None and any(x > n or x < 1 for c in cols for x in c):
        raise ValueError(f"entries must lie in 1..{n}")
    start = _normalize_columns(cols)
    if start is None:
        return {}
    pending: dict[tuple, RationalQ] = {start[1]: start[0]}
    done: dict[tuple, RationalQ] = {}
    steps = 0
    while pending:
        # treat the largest pending term first so coefficients merge before rewriting
        term = max(pending)
        coeff = pending.pop(term)
        if not coeff:
            continue
        defect = _first_defect(term)
        if defect is None:
            done[term] = done.get(term, ZERO) + coeff
            continue
        steps += 1
        if steps > step_budget:
            raise RuntimeError(f"straightening exceeded {step_budget} rewriting steps")
        kind, c, p = defect
        a, b = term[c], term[c + 1]
        new = column_exchange(a, b) if kind == "exchange" else garnir(a, b, p)
        for k, left, right in new:
            norm = _normalize_columns((left, right))
            if norm is None:
                continue
            s, (l2, r2) = norm
            key = term[:c] + (l2, r2) + term[c + 2:]
            pending[key] = pending.get(key, ZERO) + coeff * k * s
    out = {}
    for cols2, c in done.items():
        if c:
            tab = to_tableau(Tabloid(cols2))
            out[tab] = out.get(tab, ZERO) + c
    return {t: c for t, c in out.items() if c}


# --------------------------------------------------------------------------
# q -> 0
# --------------------------------------------------------------------------

def q_zero_class(expansion: Mapping[object, RationalQ]):
    """The unique basis label surviving at q = 0, or None if everything vanishes.

    Raises:
        LatticeError: on a pole at 0, several survivors, or a survivor whose value is not 1.
    """
    survivors = []
    for label, c in expansion.items():
        try:
            v = c.value_at_zero()
        except NotInLatticeRing as exc:
            raise LatticeError(f"coefficient {c} of {label} is not regular at q = 0") from exc
        if v != 0:
            survivors.append((label, v))
    if not survivors:
        return None
    if len(survivors) > 1:
        raise LatticeError(f"{len(survivors)} labels survive at q = 0: {survivors}")
    label, v = survivors[0]
    if v != 1:
        raise LatticeError(f"surviving label {label} has value {v} at q = 0, expected 1")
    return label


def monomial(rows: Sequence[int], cols: Sequence[int], n: int) -> NCPoly:
    return NCPoly.word(tuple(rows), tuple(cols), n)


def rs_prediction(w: Sequence[int], u: Sequence[int]) -> Bitableau | None:
    """(P(w) | P(u)) if Q(w) = Q(u), else None."""
    pw, pu = rs(w), rs(u)
    if pw.q != pu.q:
        return None
    return Bitableau(pw.p, pu.p)


def verify_theorem1(w: Sequence[int], u: Sequence[int], n: int) -> dict:
    """Straighten t_{w1 u1} ... t_{wk uk} and compare its q = 0 class with RS."""
    w, u = tuple(w), tuple(u)
    if len(w) != len(u):
        raise ValueError("words must have equal length")
    exp = expand_in_bitableaux(monomial(w, u, n))
    polynomial = all(c.is_polynomial() for c in exp.values())
    try:
        cls = q_zero_class(exp)
        error = None
    except LatticeError as e:
        cls, error = None, str(e)
    pred = rs_prediction(w, u)
    match = error is None and polynomial and cls == pred
    return {
        "rows": w,
        "cols": u,
        "expansion": exp,
        "q0_class": cls,
        "rs_prediction": pred,
        "polynomial": polynomial,
        "error": error,
        "match": match,
    }


def expansion_to_json(exp: Mapping[object, RationalQ]) -> list[dict]:
    out = []
    for label in sorted(exp):
        c = exp[label]
        if isinstance(label, Bitableau):
            entry = {"left": label.left.to_json(), "right": label.right.to_json()}
        else:
            entry = {"tableau": label.to_json()}
        entry["coeff"] = str(c)
        out.append(entry)
    return out


def label_to_json(label):
    if label is None:
        return None
    if isinstance(label, Bitableau):
        return label.to_json()
    return label.to_json()
