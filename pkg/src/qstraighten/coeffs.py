"""Exact arithmetic in the field Q(q) of rational functions in one indeterminate.

A :class:`RationalQ` is stored as ``q**val * num(q) / den(q)`` where neither
``num`` nor ``den`` vanishes at ``q = 0``.  Splitting the power of ``q`` off
keeps Laurent polynomials (the overwhelmingly common case) away from any
polynomial gcd computation.

Polynomials are tuples of coefficients, lowest degree first.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Union

__all__ = [
    "RationalQ",
    "NotInLatticeRing",
    "Q",
    "ZERO",
    "ONE",
    "q_int",
    "q_int_signed",
    "q_factorial",
    "q_power",
    "value_at_zero",
    "is_polynomial_in_q",
    "is_laurent",
    "parse",
]

Poly = tuple  # tuple[int | Fraction, ...], lowest degree first, no trailing zeros
Scalar = Union[int, Fraction]


class NotInLatticeRing(ArithmeticError):
    """Raised when a value with a pole at ``q = 0`` is evaluated there."""


# --------------------------------------------------------------------------
# dense univariate polynomial helpers
# --------------------------------------------------------------------------

def _c(x: Scalar) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def _trim(p: Iterable[Scalar]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(_c(c) for c in p)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _trim(a[0] * c for c in b)
    if len(b) == 1:
        return _trim(c * b[0] for c in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pshift(a: Poly, k: int) -> Poly:
    """Multiply by q**k, k >= 0."""
    if not a or k == 0:
        return a
    return (0,) * k + a


def _pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    lead = Fraction(b[-1])
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), _trim(r)
    quo = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        c = c / lead
        quo[k] = c
        for j, y in enumerate(b):
            r[k + j] -= c * y
    return _trim(quo), _trim(r[:db])


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q."""
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    lead = Fraction(a[-1])
    return _trim(c / lead for c in a)


def _strip_low(a: Poly) -> tuple[int, Poly]:
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return k, a[k:]


def _primitive_scale(p: Poly) -> Fraction:
    """Factor s such that s * p has coprime integer coefficients and positive lead."""
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    s = Fraction(den, g)
    return -s if p[-1] < 0 else s


# --------------------------------------------------------------------------
# RationalQ
# --------------------------------------------------------------------------

class RationalQ:
    """An element of Q(q) in canonical reduced form.

    Structural equality coincides with mathematical equality: the numerator
    and denominator are coprime, the denominator has integer coefficients
    with content 1 and a positive leading coefficient, and powers of ``q``
    are kept in the separate exponent ``val``.
    """

    __slots__ = ("val", "num", "den", "_hash")

    def __init__(self, num: Iterable[Scalar] = (), den: Iterable[Scalar] = (1,), val: int = 0):
        num = _trim(Fraction(c) for c in num)
        den = _trim(Fraction(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        k, num = _strip_low(num)
        j, den = _strip_low(den)
        val += k - j
        if den != (1,) and num:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
        if not num:
            self._set(0, (), (1,))
            return
        if den != (1,):
            s = _primitive_scale(den)
            den = _trim(c * s for c in den)
            num = _trim(c * s for c in num)
        self._set(val, num, den)

    def _set(self, val: int, num: Poly, den: Poly) -> None:
        self.val = val
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, val: int, num: Poly, den: Poly = (1,)) -> "RationalQ":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        if not num:
            obj._set(0, (), (1,))
        else:
            obj._set(val, num, den)
        return obj

    @classmethod
    def laurent(cls, coeffs: dict[int, Scalar]) -> "RationalQ":
        """Build ``sum c * q**e`` from an exponent -> coefficient mapping."""
        coeffs = {e: c for e, c in coeffs.items() if c != 0}
        if not coeffs:
            return ZERO
        lo, hi = min(coeffs), max(coeffs)
        return cls._raw(lo, _trim(Fraction(coeffs.get(e, 0)) for e in range(lo, hi + 1)))

    @classmethod
    def coerce(cls, x) -> "RationalQ":
        if isinstance(x, RationalQ):
            return x
        if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
            return cls._raw(0, _trim((Fraction(x),)))
        if isinstance(x, str):
            return parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RationalQ")

    # -- views -------------------------------------------------------------
    @property
    def numerator(self) -> Poly:
        """Numerator as an ordinary polynomial (q-power folded in when val >= 0)."""
        return _pshift(self.num, self.val) if self.val > 0 else self.num

    @property
    def denominator(self) -> Poly:
        return _pshift(self.den, -self.val) if self.val < 0 else self.den

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return self.den == (1,)

    def is_polynomial(self) -> bool:
        return self.den == (1,) and (self.val >= 0 or not self.num)

    def is_regular_at_zero(self) -> bool:
        return self.val >= 0 or not self.num

    def laurent_terms(self) -> dict[int, Scalar]:
        """Exponent -> coefficient map; only valid for Laurent polynomials."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return {self.val + i: c for i, c in enumerate(self.num) if c != 0}

    def value_at_zero(self) -> Fraction:
        if not self.num:
            return Fraction(0)
        if self.val < 0:
            raise NotInLatticeRing(f"{self} has a pole at q = 0")
        if self.val > 0:
            return Fraction(0)
        return Fraction(self.num[0]) / self.den[0]

    def evaluate(self, x: Scalar) -> Fraction:
        """Exact value at ``q = x``."""
        x = Fraction(x)

        def horner(p):
            acc = Fraction(0)
            for c in reversed(p):
                acc = acc * x + c
            return acc

        d = horner(self.den)
        if d == 0 or (x == 0 and self.val < 0 and self.num):
            raise ZeroDivisionError(f"{self} has a pole at q = {x}")
        return horner(self.num) / d * x ** self.val if self.num else Fraction(0)

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        v = min(self.val, o.val)
        if self.den == o.den:
            num = _padd(_pshift(self.num, self.val - v), _pshift(o.num, o.val - v))
            if self.den == (1,):
                k, num = _strip_low(num)
                return RationalQ._raw(v + k, num)
            return RationalQ(num, self.den, v)
        num = _padd(_pmul(_pshift(self.num, self.val - v), o.den),
                    _pmul(_pshift(o.num, o.val - v), self.den))
        return RationalQ(num, _pmul(self.den, o.den), v)

    __radd__ = __add__

    def __neg__(self):
        return RationalQ._raw(self.val, _pneg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RationalQ.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        if self.den == (1,) and o.den == (1,):
            return RationalQ._raw(self.val + o.val, _pmul(self.num, o.num))
        return RationalQ(_pmul(self.num, o.num), _pmul(self.den, o.den), self.val + o.val)

    __rmul__ = __mul__

    def inverse(self) -> "RationalQ":
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RationalQ(self.den, self.num, -self.val)

    def __truediv__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RationalQ.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------
    def _key(self):
        return (self.val, self.num, self.den)

    def __eq__(self, other):
        if isinstance(other, RationalQ):
            return self._key() == other._key()
        try:
            return self._key() == RationalQ.coerce(other)._key()
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __reduce__(self):
        return (RationalQ._raw, (self.val, self.num, self.den))

    # -- rendering ---------------------------------------------------------
    def __str__(self):
        if self.den == (1,):
            return _format_laurent(self.laurent_terms())
        num = _format_laurent({i: c for i, c in enumerate(self.numerator) if c})
        den = _format_laurent({i: c for i, c in enumerate(self.denominator) if c})
        return f"({num})/({den})"

    def __repr__(self):
        return f"RationalQ('{self}')"


def _format_monomial(e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return "q"
    return f"q^{e}"


def _format_laurent(terms: dict[int, Scalar]) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = Fraction(terms[e])
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        elif a == 1:
            body = _format_monomial(e)
        else:
            body = f"{a}*{_format_monomial(e)}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = RationalQ._raw(0, ())
ONE = RationalQ._raw(0, (1,))
Q = RationalQ._raw(1, (1,))


# --------------------------------------------------------------------------
# q-numbers
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_power(k: int) -> RationalQ:
    """The monomial ``q**k`` for any integer k."""
    return RationalQ._raw(k, (1,))


@lru_cache(maxsize=None)
def q_int(m: int) -> RationalQ:
    """Symmetric q-integer ``[m] = (q**m - q**-m) / (q - q**-1)``.

    Raises:
        ValueError: if ``m`` is negative.
    """
    if m < 0:
        raise ValueError(f"q_int expects m >= 0, got {m}")
    if m == 0:
        return ZERO
    return RationalQ.laurent({m - 1 - 2 * j: 1 for j in range(m)})


def q_int_signed(m: int) -> RationalQ:
    """``[m]`` extended to negative m by ``[-m] = -[m]``."""
    return -q_int(-m) if m < 0 else q_int(m)


@lru_cache(maxsize=None)
def q_factorial(m: int) -> RationalQ:
    if m < 0:
        raise ValueError(f"q_factorial expects m >= 0, got {m}")
    out = ONE
    for j in range(1, m + 1):
        out = out * q_int(j)
    return out


def value_at_zero(x) -> Fraction:
    """Evaluate at ``q = 0``; raises :class:`NotInLatticeRing` on a pole."""
    return RationalQ.coerce(x).value_at_zero()


def is_polynomial_in_q(x) -> bool:
    return RationalQ.coerce(x).is_polynomial()


def is_laurent(x) -> bool:
    return RationalQ.coerce(x).is_laurent()


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\*\*|[-+*/^()]))")


def parse(text: str) -> RationalQ:
    """Parse expressions such as ``"q^3 - q"``, ``"(1 - q^2 + q^4)"`` or ``"1/(1+q^2)"``.

    Grammar: sums and products of integers and ``q``, parentheses, division and
    integer powers written ``^`` or ``**`` (exponents may be negative).
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        pos = m.end()
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif var is not None:
            tokens.append(("q", None))
        else:
            tokens.append(("op", "^" if op == "**" else op))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        i += 1
        return tokens[i - 1]

    def expect(op):
        kind, v = take()
        if kind != "op" or v != op:
            raise ValueError(f"expected {op!r} in {text!r}")

    def expr():
        acc = ZERO
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while True:
            tok = peek()
            if tok in (("op", "*"), ("op", "/")):
                take()
                f = power()
                acc = acc * f if tok[1] == "*" else acc / f
            elif tok[0] in ("num", "q") or tok == ("op", "("):
                acc = acc * power()  # implicit product, e.g. "3q^2"
            else:
                return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            sign = 1
            if peek() == ("op", "-"):
                take()
                sign = -1
            if peek() == ("op", "("):
                take()
                sign2 = 1
                if peek() == ("op", "-"):
                    take()
                    sign2 = -1
                kind, v = take()
                expect(")")
                sign *= sign2
            else:
                kind, v = take()
            if kind != "num":
                raise ValueError(f"exponent must be an integer in {text!r}")
            return base ** (sign * v)
        return base

    def atom():
        kind, v = take()
        if kind == "num":
            return RationalQ.coerce(v)
        if kind == "q":
            return Q
        if (kind, v) == ("op", "("):
            e = expr()
            expect(")")
            return e
        if (kind, v) == ("op", "-"):
            return -power()
        raise ValueError(f"unexpected token in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result
