"""Words, Young tableaux, tabloids and the Robinson-Schensted correspondence.

Tableaux are drawn French style: ``rows[0]`` is the bottom (longest) row and
columns increase strictly from bottom to top.  Words are plain tuples of
positive integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple, Sequence

Word = tuple  # tuple[int, ...]
Partition = tuple  # weakly decreasing tuple of positive ints


# --------------------------------------------------------------------------
# partitions
# --------------------------------------------------------------------------

def is_partition(shape: Sequence[int]) -> bool:
    return all(p > 0 for p in shape) and all(a >= b for a, b in zip(shape, shape[1:]))


def conjugate(shape: Sequence[int]) -> Partition:
    """Transpose of a partition (row lengths <-> column lengths)."""
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > j) for j in range(shape[0]))


@lru_cache(maxsize=None)
def partitions(k: int, max_parts: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of k, in reverse lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(k, max_part), 0, -1):
        rest = partitions(k - first, None if max_parts is None else max_parts - 1, first)
        out.extend((first,) + r for r in rest)
    return tuple(out)


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu <= lam in dominance order (partial sums of mu never exceed lam's)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if b > a:
            return False
    return True


# --------------------------------------------------------------------------
# tableaux and tabloids
# --------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Tableau:
    """A Young tableau stored bottom row first."""

    rows: tuple

    def __init__(self, rows: Sequence[Sequence[int]] = ()):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows if len(r)))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Columns left to right, each listed bottom to top."""
        if not self.rows:
            return ()
        return tuple(
            tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))
        )

    def content(self, n: int | None = None) -> tuple[int, ...]:
        """Multiplicities of the letters 1..n."""
        letters = [x for r in self.rows for x in r]
        if n is None:
            n = max(letters, default=0)
        return tuple(letters.count(i) for i in range(1, n + 1))

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def is_semistandard(self) -> bool:
        if not is_partition(self.shape):
            return False
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        return all(all(a < b for a, b in zip(c, c[1:])) for c in self.columns)

    def is_standard(self) -> bool:
        return self.is_semistandard() and sorted(self.entries()) == list(range(1, self.size + 1))

    def reading_word(self) -> Word:
        """Row reading, top row first, each row left to right (plactic representative)."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def to_tabloid(self) -> "Tabloid":
        return Tabloid(self.columns)

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        return cls(data["rows"])

    def __str__(self):
        return "/".join("".join(map(str, r)) if max(r, default=0) < 10 else ",".join(map(str, r))
                        for r in self.rows) or "()"


@dataclass(frozen=True, order=True)
class Tabloid:
    """A sequence of strictly increasing columns, each listed bottom to top."""

    columns: tuple

    def __init__(self, columns: Sequence[Sequence[int]] = ()):
        cols = tuple(tuple(c) for c in columns)
        for c in cols:
            if any(a >= b for a, b in zip(c, c[1:])):
                raise ValueError(f"tabloid column {c} is not strictly increasing")
        object.__setattr__(self, "columns", cols)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def content(self, n: int) -> tuple[int, ...]:
        letters = [x for c in self.columns for x in c]
        return tuple(letters.count(i) for i in range(1, n + 1))

    def is_tableau(self) -> bool:
        return to_tableau(self) is not None

    def to_json(self) -> dict:
        return {"columns": [list(c) for c in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> "Tabloid":
        return cls(data["columns"])

    def __str__(self):
        return "|".join("".join(map(str, c)) for c in self.columns)


def to_tableau(t: Tabloid) -> Tableau | None:
    """Reinterpret a tabloid as a tableau, or None if the columns do not fit."""
    cols = t.columns
    if any(len(a) < len(b) for a, b in zip(cols, cols[1:])):
        return None
    height = len(cols[0]) if cols else 0
    rows = [tuple(c[i] for c in cols if len(c) > i) for i in range(height)]
    tab = Tableau(rows)
    return tab if tab.is_semistandard() else None


def yamanouchi_tableau(shape: Sequence[int]) -> Tableau:
    """The tableau of shape and weight ``shape``: row i holds only the letter i."""
    if not is_partition(shape):
        raise ValueError(f"{tuple(shape)} is not a partition")
    return Tableau([[i + 1] * p for i, p in enumerate(shape)])


def column_superstandard(shape: Sequence[int]) -> Tableau:
    """Standard tableau filled column by column: 1..l'_1 up the first column, and so on."""
    if not is_partition(shape):
        raise ValueError(f"{tuple(shape)} is not a partition")
    rows = [[0] * p for p in shape]
    k = 1
    for j, h in enumerate(conjugate(shape)):
        for i in range(h):
            rows[i][j] = k
            k += 1
    return Tableau(rows)


def semistandard_tableaux(shape: Sequence[int], n: int, content: Sequence[int] | None = None) -> list[Tableau]:
    """All semistandard tableaux of the given shape with entries in 1..n.

    If ``content`` is given only tableaux with that letter multiplicity vector
    are returned.
    """
    shape = tuple(shape)
    if not is_partition(shape) and shape:
        raise ValueError(f"{shape} is not a partition")
    if len(shape) > n:
        return []
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    remaining = list(content) + [0] * (n - len(content)) if content is not None else None
    if remaining is not None and sum(remaining) != len(cells):
        return []
    grid = [[0] * p for p in shape]
    out = []

    def fill(idx):
        if idx == len(cells):
            out.append(Tableau(grid))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        # room for the rows above in this column
        hi = n - sum(1 for r in range(i + 1, len(shape)) if shape[r] > j)
        for x in range(lo, hi + 1):
            if remaining is not None:
                if remaining[x - 1] == 0:
                    continue
                remaining[x - 1] -= 1
            grid[i][j] = x
            fill(idx + 1)
            if remaining is not None:
                remaining[x - 1] += 1
        grid[i][j] = 0

    fill(0)
    return out


def standard_tableaux(shape: Sequence[int]) -> list[Tableau]:
    k = sum(shape)
    return semistandard_tableaux(shape, k, (1,) * k)


def count_semistandard(shape: Sequence[int], n: int) -> int:
    """Hook-content formula, used as an independent count."""
    from fractions import Fraction

    conj = conjugate(shape)
    num = Fraction(1)
    for i, p in enumerate(shape):
        for j in range(p):
            hook = (p - j - 1) + (conj[j] - i - 1) + 1
            num *= Fraction(n + j - i, hook)
    return int(num)


# --------------------------------------------------------------------------
# Robinson-Schensted
# --------------------------------------------------------------------------

class RSPair(NamedTuple):
    p: Tableau
    q: Tableau


def row_insert(rows: list[list[int]], x: int) -> int:
    """Schensted row insertion in place; returns the index of the row that grew."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i
        row = rows[i]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return i
        row[lo], x = x, row[lo]
        i += 1


def rs(word: Sequence[int]) -> RSPair:
    """Robinson-Schensted insertion and recording tableaux of a word."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for k, x in enumerate(word, start=1):
        i = row_insert(p, x)
        if i == len(q):
            q.append([])
        q[i].append(k)
    return RSPair(Tableau(p), Tableau(q))


def insertion_tableau(word: Sequence[int]) -> Tableau:
    return rs(word).p


def recording_tableau(word: Sequence[int]) -> Tableau:
    return rs(word).q


def rs_inverse(p: Tableau, q: Tableau) -> Word:
    """Recover the word from its (P, Q) pair by reverse bumping."""
    if p.shape != q.shape:
        raise ValueError("P and Q must have the same shape")
    prow = [list(r) for r in p.rows]
    qrow = [list(r) for r in q.rows]
    out = []
    for k in range(q.size, 0, -1):
        i = next(r for r, row in enumerate(qrow) if row and row[-1] == k)
        qrow[i].pop()
        x = prow[i].pop()
        for r in range(i - 1, -1, -1):
            row = prow[r]
            # rightmost entry strictly less than x
            j = max(jj for jj, y in enumerate(row) if y < x)
            row[j], x = x, row[j]
        out.append(x)
        if not prow[i]:
            prow.pop(i)
            qrow.pop(i)
    return tuple(reversed(out))


def plactic_equiv(w: Sequence[int], u: Sequence[int]) -> bool:
    """Knuth (plactic) equivalence: equal insertion tableaux."""
    return insertion_tableau(w) == insertion_tableau(u)


def is_yamanouchi(word: Sequence[int]) -> bool:
    """Every suffix contains at least as many i as i+1, for every i."""
    counts: dict[int, int] = {}
    for x in reversed(word):
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def yamanouchi_word(tau: Tableau) -> Word:
    """The unique Yamanouchi word whose recording tableau is the standard tableau tau.

    Its insertion tableau is the Yamanouchi tableau of the same shape.
    """
    if not tau.is_standard():
        raise ValueError(f"{tau} is not a standard tableau")
    return rs_inverse(yamanouchi_tableau(tau.shape), tau)


# --------------------------------------------------------------------------
# tabloids
# --------------------------------------------------------------------------

def column_reading(t: Tabloid) -> Word:
    """Read each column top to bottom, columns left to right."""
    return tuple(x for c in t.columns for x in reversed(c))


def enumerate_tabloids(shape: Sequence[int], n: int) -> list[Tabloid]:
    """All tabloids with the given column sizes and entries at most n."""
    choices = [list(combinations(range(1, n + 1), k)) for k in shape]
    return [Tabloid(cols) for cols in product(*choices)]


def permuted_conjugate(lam: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """The composition (l'_{sigma_1}, ..., l'_{sigma_r}); sigma is 1-based."""
    conj = conjugate(lam)
    if sorted(sigma) != list(range(1, len(conj) + 1)):
        raise ValueError(f"{tuple(sigma)} does not permute the {len(conj)} columns of {tuple(lam)}")
    return tuple(conj[s - 1] for s in sigma)


def b_sigma_labels(lam: Sequence[int], sigma: Sequence[int], n: int) -> list[Tabloid]:
    """Tabloids of shape sigma(lam') whose column reading inserts to shape lam."""
    lam = tuple(lam)
    mu = permuted_conjugate(lam, sigma)
    return [t for t in enumerate_tabloids(mu, n) if insertion_tableau(column_reading(t)).shape == lam]


# --------------------------------------------------------------------------
# text / JSON forms
# --------------------------------------------------------------------------

def parse_word(text: str) -> Word:
    """Parse ``"2143512"`` or ``"10,2,3"`` (commas required for letters above 9)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    elif " " in text:
        parts = text.split()
    else:
        parts = list(text)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed word {text!r}") from None
    if any(x < 1 for x in word):
        raise ValueError(f"letters must be positive in {text!r}")
    return word


def format_word(word: Sequence[int]) -> str:
    if any(x > 9 for x in word):
        return ",".join(map(str, word))
    return "".join(map(str, word))


def check_word(word: Sequence[int], n: int) -> None:
    bad = [x for x in word if not 1 <= x <= n]
    if bad:
        raise ValueError(f"letters {bad} outside 1..{n}")
