"""The quantum matrix algebra F_q[Mat_n] by rewriting to sorted normal form.

Generators ``t_ij`` are pairs ``(i, j)`` ordered lexicographically.  A
monomial is in normal form when its generators are weakly increasing.  For
``i < j`` and ``k < l`` the defining relations are oriented as::

    t_il t_ik -> q t_ik t_il                      (same row)
    t_jk t_ik -> q t_ik t_jk                      (same column)
    t_jk t_il -> t_il t_jk                        (anti-diagonal pair)
    t_jl t_ik -> t_ik t_jl - (q^-1 - q) t_il t_jk (diagonal pair)
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .coeffs import ONE, Q, ZERO, RationalQ, q_power

Generator = tuple  # (row, col)
Monomial = tuple  # tuple[Generator, ...]

_QINV_MINUS_Q = q_power(-1) - Q
_MINUS_Q = -Q


def rewrite_pair(a: Generator, b: Generator) -> list[tuple[RationalQ, Generator, Generator]] | None:
    """Rewrite an adjacent product ``a b`` with ``a > b``; None if already ordered."""
    if a <= b:
        return None
    (i1, j1), (i2, j2) = a, b
    if i1 == i2:
        return [(Q, b, a)]
    if j1 == j2:
        return [(Q, b, a)]
    if j1 < j2:
        return [(ONE, b, a)]
    # a = t_jl, b = t_ik with i < j, k < l
    return [(ONE, b, a), (-_QINV_MINUS_Q, (i2, j1), (i1, j2))]


@lru_cache(maxsize=None)
def _insert(m: Monomial, x: Generator) -> tuple[tuple[Monomial, RationalQ], ...]:
    """Normal form of (normal monomial m) * x."""
    if not m or m[-1] <= x:
        return ((m + (x,), ONE),)
    acc: dict[Monomial, RationalQ] = {}
    head = m[:-1]
    for c, a, b in rewrite_pair(m[-1], x):
        for m1, c1 in _insert(head, a):
            for m2, c2 in _insert(m1, b):
                acc[m2] = acc.get(m2, ZERO) + c * c1 * c2
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def normal_form(word: Monomial) -> tuple[tuple[Monomial, RationalQ], ...]:
    """Normal form of a single (arbitrarily ordered) word in the generators."""
    if len(word) <= 1 or all(a <= b for a, b in zip(word, word[1:])):
        return ((word, ONE),)
    acc: dict[Monomial, RationalQ] = {}
    for m, c in normal_form(word[:-1]):
        for m2, c2 in _insert(m, word[-1]):
            acc[m2] = acc.get(m2, ZERO) + c * c2
    return tuple((k, v) for k, v in acc.items() if v)


class NCPoly:
    """A finite linear combination of words in the generators ``t_ij``.

    The stored words need not be sorted; :meth:`normalize` reduces them.
    Arithmetic other than addition always returns normal forms.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        self.n = n
        self.terms: dict[Monomial, RationalQ] = {}
        for m, c in (terms or {}).items():
            c = RationalQ.coerce(c)
            if c:
                m = tuple(tuple(g) for g in m)
                for i, j in m:
                    if not (1 <= i <= n and 1 <= j <= n):
                        raise ValueError(f"generator t[{i},{j}] outside 1..{n}")
                self.terms[m] = self.terms.get(m, ZERO) + c
        self.terms = {m: c for m, c in self.terms.items() if c}

    @classmethod
    def _from(cls, n: int, terms: dict) -> "NCPoly":
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def one(cls, n: int) -> "NCPoly":
        return cls._from(n, {(): ONE})

    @classmethod
    def zero(cls, n: int) -> "NCPoly":
        return cls._from(n, {})

    @classmethod
    def gen(cls, i: int, j: int, n: int) -> "NCPoly":
        return cls(n, {((i, j),): ONE})

    @classmethod
    def word(cls, rows: Sequence[int], cols: Sequence[int], n: int) -> "NCPoly":
        """The monomial ``t_{r1 c1} t_{r2 c2} ...`` (not normalized)."""
        if len(rows) != len(cols):
            raise ValueError("row and column words must have equal length")
        return cls(n, {tuple(zip(rows, cols)): ONE})

    # -- structure -----------------------------------------------------------
    def normalize(self) -> "NCPoly":
        acc: dict[Monomial, RationalQ] = {}
        for w, c in self.terms.items():
            for m, c2 in normal_form(w):
                acc[m] = acc.get(m, ZERO) + c * c2
        return NCPoly._from(self.n, {m: c for m, c in acc.items() if c})

    def is_normal(self) -> bool:
        return all(all(a <= b for a, b in zip(m, m[1:])) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.normalize().terms

    def __bool__(self):
        return not self.is_zero()

    def degree_components(self) -> dict[tuple[tuple[int, ...], tuple[int, ...]], "NCPoly"]:
        """Split by (row content, column content)."""
        out: dict = {}
        for m, c in self.terms.items():
            key = weights(m, self.n)
            out.setdefault(key, {})[m] = c
        return {k: NCPoly._from(self.n, v) for k, v in out.items()}

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "NCPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"mismatched sizes n={self.n} and n={other.n}")

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, ZERO) + c
        return NCPoly._from(self.n, {m: c for m, c in acc.items() if c})

    def __neg__(self) -> "NCPoly":
        return NCPoly._from(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def scale(self, c) -> "NCPoly":
        c = RationalQ.coerce(c)
        if not c:
            return NCPoly.zero(self.n)
        return NCPoly._from(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.n == other.n and self.normalize().terms == other.normalize().terms

    __hash__ = None

    def map_coeffs(self, f) -> "NCPoly":
        return NCPoly(self.n, {m: f(c) for m, c in self.terms.items()})

    def at_q1(self) -> dict[Monomial, object]:
        """Commutative specialization: coefficients summed over sorted monomials."""
        acc: dict = {}
        for m, c in self.terms.items():
            key = tuple(sorted(m))
            acc[key] = acc.get(key, 0) + c.evaluate(1)
        return {m: c for m, c in acc.items() if c}

    # -- rendering -----------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            word = "*".join(f"t[{i},{j}]" for i, j in m) or "1"
            parts.append(f"({c})*{word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPoly(n={self.n}, {self})"

    def to_json(self) -> list[dict]:
        return [{"monomial": [list(g) for g in m], "coeff": str(self.terms[m])}
                for m in sorted(self.terms)]

    @classmethod
    def from_json(cls, data: Iterable[dict], n: int) -> "NCPoly":
        return cls(n, {tuple(tuple(g) for g in t["monomial"]): t["coeff"] for t in data})


def weights(m: Monomial, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(row content, column content) of a word in the generators."""
    rows = [0] * n
    cols = [0] * n
    for i, j in m:
        rows[i - 1] += 1
        cols[j - 1] += 1
    return tuple(rows), tuple(cols)


_GEN = re.compile(r"t\[\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_monomial(text: str) -> Monomial:
    """Parse ``"t[2,3]*t[1,1]*t[3,2]"``."""
    text = text.strip()
    if not text or text == "1":
        return ()
    parts = [p.strip() for p in text.split("*")]
    out = []
    for p in parts:
        m = _GEN.fullmatch(p)
        if not m:
            raise ValueError(f"malformed generator {p!r}")
        out.append((int(m.group(1)), int(m.group(2))))
    return tuple(out)


def format_monomial(m: Monomial) -> str:
    return "*".join(f"t[{i},{j}]" for i, j in m) or "1"


def normalize(p: NCPoly) -> NCPoly:
    return p.normalize()


def mul(a: NCPoly, b: NCPoly) -> NCPoly:
    """Product in F_q[Mat_n], returned in normal form."""
    a._check(b)
    acc: dict[Monomial, RationalQ] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            for m, c2 in normal_form(ma + mb):
                acc[m] = acc.get(m, ZERO) + c * c2
    return NCPoly._from(a.n, {m: c for m, c in acc.items() if c})


def product_of(factors: Iterable[NCPoly], n: int) -> NCPoly:
    out = NCPoly.one(n)
    for f in factors:
        out = mul(out, f)
    return out


def permutation_length(w: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


@lru_cache(maxsize=None)
def _qminor(rows: tuple[int, ...], cols: tuple[int, ...], n: int) -> NCPoly:
    k = len(rows)
    acc = NCPoly.zero(n)
    terms = {}
    for w in permutations(range(k)):
        c = _MINUS_Q ** (-permutation_length(w))
        terms[tuple((rows[a], cols[w[a]]) for a in range(k))] = c
    acc = NCPoly(n, terms)
    return acc.normalize()


def qminor(rows: Sequence[int], cols: Sequence[int], n: int | None = None) -> NCPoly:
    """Quantum minor on rows I and columns J (both strictly increasing)."""
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError(f"minor needs |I| = |J|, got {len(rows)} and {len(cols)}")
    for seq in (rows, cols):
        if any(a >= b for a, b in zip(seq, seq[1:])):
            raise ValueError(f"minor indices {seq} must be strictly increasing")
    if n is None:
        n = max(rows + cols, default=1)
    return _qminor(rows, cols, n)


def qdet(n: int) -> NCPoly:
    """Quantum determinant of the n x n generic quantum matrix."""
    if n < 1:
        raise ValueError("n must be positive")
    idx = tuple(range(1, n + 1))
    return _qminor(idx, idx, n)
