"""Exact arithmetic in the rational function field Q(s), with q = s**2.

A :class:`QScalar` is stored as ``num / den`` where ``num`` is a Laurent
polynomial in ``s`` with integer coefficients and ``den`` an ordinary integer
polynomial with nonzero constant term and positive leading coefficient.  The
two share no common factor and no common integer content, so equal field
elements have equal representations.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Union

from .errors import PoleError, ScalarZeroDivision

# --------------------------------------------------------------------------
# dense integer polynomials: tuples of coefficients, lowest degree first
# --------------------------------------------------------------------------


def _trim(p: list) -> tuple:
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def pscale(a: tuple, c: int) -> tuple:
    return _trim([x * c for x in a]) if c else ()


def content(p: Iterable[int]) -> int:
    g = 0
    for x in p:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def primitive(p: tuple) -> tuple:
    """Primitive part with positive leading coefficient."""
    g = content(p)
    if p[-1] < 0:
        g = -g
    return tuple(x // g for x in p)


def prem(a: tuple, b: tuple) -> tuple:
    """Pseudo-remainder of ``a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return tuple(r)


def pgcd(a: tuple, b: tuple) -> tuple:
    """Primitive gcd over Q[s] (primitive PRS)."""
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (1,)
        r = prem(a, b)
        a, b = b, (primitive(r) if r else ())
    return a


def pdivexact(a: tuple, b: tuple) -> tuple:
    """Quotient of an exact division in Z[s]; raises if not exact."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        if lr % lb:
            raise ArithmeticError("inexact polynomial division")
        c = lr // lb
        shift = len(r) - 1 - db
        q[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def laurent_to_dense(lp: dict) -> tuple[int, tuple]:
    lo = min(lp)
    hi = max(lp)
    dense = [0] * (hi - lo + 1)
    for e, c in lp.items():
        dense[e - lo] = c
    return lo, tuple(dense)


def dense_to_laurent(lo: int, dense: tuple) -> dict:
    return {lo + i: c for i, c in enumerate(dense) if c}


# --------------------------------------------------------------------------


Coercible = Union["QScalar", int, Fraction]


class QScalar:
    """Element of Q(s); immutable, hashable, equality is structural."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: dict | None = None, den: tuple = (1,)):
        lp = {e: c for e, c in (num or {}).items() if c}
        self.num, self.den = _canonical(lp, tuple(den))
        self._hash = None

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "QScalar":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def coerce(cls, x: Coercible) -> "QScalar":
        if isinstance(x, QScalar):
            return x
        if isinstance(x, int):
            return cls._raw(((0, x),) if x else (), (1,))
        if isinstance(x, Fraction):
            return cls({0: x.numerator}, (x.denominator,))
        raise TypeError(f"cannot coerce {type(x).__name__} to QScalar")

    @classmethod
    def s_power(cls, e: int, coeff: int = 1) -> "QScalar":
        return cls._raw(((e, coeff),) if coeff else (), (1,))

    @classmethod
    def q_power(cls, j: int, coeff: int = 1) -> "QScalar":
        return cls.s_power(2 * j, coeff)

    @classmethod
    def laurent(cls, lp: dict) -> "QScalar":
        return cls(lp, (1,))

    # -- predicates / views -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return self.den == (1,)

    def laurent_terms(self) -> tuple:
        """``((e, c), ...)`` when this is a Laurent polynomial with integer coefficients."""
        if self.den != (1,):
            raise ValueError("not an integral Laurent polynomial")
        return self.num

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Coercible) -> "QScalar":
        try:
            o = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            lp = dict(self.num)
            for e, c in o.num:
                lp[e] = lp.get(e, 0) + c
            if self.den == (1,):
                return QScalar._raw(tuple(sorted((e, c) for e, c in lp.items() if c)), (1,))
            return QScalar(lp, self.den)
        lp = _lmul_dense(dict(self.num), o.den)
        for e, c in _lmul_dense(dict(o.num), self.den).items():
            lp[e] = lp.get(e, 0) + c
        return QScalar(lp, pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar._raw(tuple((e, -c) for e, c in self.num), self.den)

    def __sub__(self, other: Coercible) -> "QScalar":
        try:
            return self + (-QScalar.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other: Coercible) -> "QScalar":
        return QScalar.coerce(other) - self

    def __mul__(self, other: Coercible) -> "QScalar":
        try:
            o = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        lp: dict = {}
        for e1, c1 in self.num:
            for e2, c2 in o.num:
                lp[e1 + e2] = lp.get(e1 + e2, 0) + c1 * c2
        if self.den == (1,) and o.den == (1,):
            return QScalar._raw(tuple(sorted((e, c) for e, c in lp.items() if c)), (1,))
        return QScalar(lp, pmul(self.den, o.den))

    __rmul__ = __mul__

    def inv(self) -> "QScalar":
        if not self.num:
            raise ScalarZeroDivision("inverse of zero scalar")
        lo, dense = laurent_to_dense(dict(self.num))
        # den / (s^lo * dense)
        return QScalar({i - lo: c for i, c in enumerate(self.den) if c}, dense)

    def __truediv__(self, other: Coercible) -> "QScalar":
        try:
            o = QScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: Coercible) -> "QScalar":
        return QScalar.coerce(other) * self.inv()

    def __pow__(self, n: int) -> "QScalar":
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QScalar.coerce(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- evaluation ---------------------------------------------------------

    def eval(self, s0: Union[int, Fraction]) -> Fraction:
        """Exact value at ``s = s0``; raises :class:`PoleError` at a pole."""
        s0 = Fraction(s0)
        d = sum((Fraction(c) * s0**i for i, c in enumerate(self.den)), Fraction(0))
        if d == 0:
            raise PoleError(f"denominator vanishes at s = {s0}")
        if s0 == 0 and any(e < 0 for e, _ in self.num):
            raise PoleError("negative power of s at s = 0")
        n = sum((c * s0**e for e, c in self.num), Fraction(0))
        return n / d

    def eval_q(self, q0: Union[int, Fraction]) -> Fraction:
        """Value at ``q = q0`` when only even powers of ``s`` occur."""
        if any(e % 2 for e, _ in self.num) or any(c for i, c in enumerate(self.den) if i % 2):
            raise ValueError("scalar involves odd powers of s")
        q0 = Fraction(q0)
        d = sum((Fraction(c) * q0 ** (i // 2) for i, c in enumerate(self.den)), Fraction(0))
        if d == 0:
            raise PoleError(f"denominator vanishes at q = {q0}")
        return sum((c * q0 ** (e // 2) for e, c in self.num), Fraction(0)) / d

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        num = _render_laurent(self.num)
        if self.den == (1,):
            return num
        den = self.den
        if len(den) == 1:
            dtxt = str(den[0])
        else:
            dtxt = "(" + _render_laurent(tuple((i, c) for i, c in enumerate(den) if c)) + ")"
        if len(self.num) > 1 or num.startswith("-"):
            num = "(" + num + ")"
        return f"{num}/{dtxt}"

    def __repr__(self) -> str:
        return f"QScalar({self})"

    @classmethod
    def parse(cls, text: str) -> "QScalar":
        from .parser import parse_scalar

        return parse_scalar(text)


def _lmul_dense(lp: dict, dense: tuple) -> dict:
    out: dict = {}
    for e, c in lp.items():
        for i, d in enumerate(dense):
            if d:
                out[e + i] = out.get(e + i, 0) + c * d
    return out


def _canonical(lp: dict, den: tuple) -> tuple[tuple, tuple]:
    if not den or not any(den):
        raise ScalarZeroDivision("zero denominator")
    if not lp:
        return (), (1,)
    den = tuple(den)
    shift = 0
    while den[0] == 0:
        den = den[1:]
        shift += 1
    if shift:
        lp = {e - shift: c for e, c in lp.items()}
    den = _trim(list(den))
    if len(den) > 1:
        lo, dense = laurent_to_dense(lp)
        g = pgcd(dense, den)
        if len(g) > 1:
            dense = pdivexact(dense, g)
            den = pdivexact(den, g)
            lp = dense_to_laurent(lo, dense)
    g = content(list(lp.values()) + list(den))
    if den[-1] < 0:
        g = -g
    if g != 1:
        lp = {e: c // g for e, c in lp.items()}
        den = tuple(d // g for d in den)
    return tuple(sorted(lp.items())), den


def _render_monomial_s(e: int) -> str:
    qe, se = divmod(e, 2)
    parts = []
    if qe == 1:
        parts.append("q")
    elif qe:
        parts.append(f"q^{qe}")
    if se:
        parts.append("s")
    return " ".join(parts)


def _render_laurent(terms: tuple) -> str:
    if not terms:
        return "0"
    out = []
    for e, c in sorted(terms, reverse=True):
        mono = _render_monomial_s(e)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag} {mono}"
        else:
            body = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


ZERO = QScalar._raw((), (1,))
ONE = QScalar._raw(((0, 1),), (1,))
S = QScalar.s_power(1)
Q = QScalar.q_power(1)
HALF = QScalar({0: 1}, (2,))


def qint(n: int) -> QScalar:
    """The q-integer ``[n] = (q**n - q**-n) / (q - q**-1)`` as a Laurent polynomial."""
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    n = abs(n)
    return QScalar._raw(tuple((2 * (n - 1 - 2 * j), sign) for j in reversed(range(n))), (1,))


def coerce(x: Coercible) -> QScalar:
    return QScalar.coerce(x)
