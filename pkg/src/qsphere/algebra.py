"""The quantum 3-sphere as a PBW normal-form algebra.

Every element is a finite combination of monomials ``a^k c^m (c*)^n`` or
``(a*)^k c^m (c*)^n``.  Products are brought to that basis with the
commutation rules

    ac = q ca,   ac* = q c*a,   ca* = q a*c,   c*a* = q a*c*,   cc* = c*c,

and the sphere relations ``a*a = 1 - c*c``, ``aa* = 1 - q^2 cc*``.  The kernel
applies the closed form of these rewrites (see ``_kernel_py.apart``); the
rewrite-by-rewrite engine lives in the test suite as an oracle.

Internally an element is ``N / D``: ``N`` a flat map ``(k, m, n, e) -> int``
(``e`` the power of ``s``) and ``D`` an integer polynomial in ``s``, reduced
so that equal elements have identical data.
"""
from __future__ import annotations

import contextlib
from fractions import Fraction
from math import gcd
from typing import Iterator, NamedTuple, Union

from . import kernel
from .errors import PoleError
from .scalar import (
    ONE as S_ONE,
    QScalar,
    content,
    dense_to_laurent,
    laurent_to_dense,
    pdivexact,
    pgcd,
    pmul,
)

_DEGREE_CAP = 24


def get_degree_cap() -> int:
    return _DEGREE_CAP


def set_degree_cap(cap: int) -> None:
    global _DEGREE_CAP
    _DEGREE_CAP = int(cap)


@contextlib.contextmanager
def degree_cap(cap: int) -> Iterator[None]:
    old = _DEGREE_CAP
    set_degree_cap(cap)
    try:
        yield
    finally:
        set_degree_cap(old)


class Monomial(NamedTuple):
    """PBW word ``A(a) c^c (c*)^cs`` with ``A(k) = a^k`` or ``(a*)^-k``."""

    a: int
    c: int
    cs: int

    @property
    def degree(self) -> int:
        return abs(self.a) + self.c + self.cs

    def __str__(self) -> str:
        parts = []
        if self.a:
            name = "a" if self.a > 0 else "as"
            parts.append(name if abs(self.a) == 1 else f"{name}^{abs(self.a)}")
        if self.c:
            parts.append("c" if self.c == 1 else f"c^{self.c}")
        if self.cs:
            parts.append("cs" if self.cs == 1 else f"cs^{self.cs}")
        return " ".join(parts) or "1"


Scalarish = Union[QScalar, int, Fraction]


def _canonical(t: dict, d: tuple) -> tuple[dict, tuple]:
    if not t:
        return {}, (1,)
    if d == (1,):
        return t, d
    if len(d) > 1:
        polys: dict = {}
        for (k, m, n, e), c in t.items():
            polys.setdefault((k, m, n), {})[e] = c
        g = d
        dense = {}
        for mono, lp in polys.items():
            lo, dn = laurent_to_dense(lp)
            dense[mono] = (lo, dn)
            if len(g) > 1:
                g = pgcd(g, dn)
        if len(g) > 1:
            d = pdivexact(d, g)
            t = {}
            for (k, m, n), (lo, dn) in dense.items():
                for e, c in dense_to_laurent(lo, pdivexact(dn, g)).items():
                    t[(k, m, n, e)] = c
    g = content(d)
    if g != 1:
        for c in t.values():
            g = gcd(g, c)
            if g == 1:
                break
    if d[-1] < 0:
        g = -g
    if g != 1:
        t = {key: c // g for key, c in t.items()}
        d = tuple(x // g for x in d)
    return t, d


def _times_dense(t: dict, dense: tuple) -> dict:
    if dense == (1,):
        return t
    acc: dict = {}
    kernel.axpy(acc, t, tuple((i, c) for i, c in enumerate(dense) if c))
    return acc


class AlgebraElement:
    """Immutable element of the quantum 3-sphere in PBW normal form."""

    __slots__ = ("_t", "_d", "_hash")

    def __init__(self, terms: dict | None = None):
        """Build from ``{Monomial-like: scalar}``."""
        acc = ZERO
        for mono, coeff in (terms or {}).items():
            acc = acc + AlgebraElement.monomial(*mono) * coeff
        self._t, self._d, self._hash = acc._t, acc._d, None

    @classmethod
    def _make(cls, t: dict, d: tuple = (1,), canonical: bool = False) -> "AlgebraElement":
        obj = cls.__new__(cls)
        if not canonical:
            t, d = _canonical(t, d)
        obj._t = t
        obj._d = d
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def scalar(cls, x: Scalarish) -> "AlgebraElement":
        x = QScalar.coerce(x)
        return cls._make({(0, 0, 0, e): c for e, c in x.num}, x.den, canonical=True)

    @classmethod
    def monomial(cls, a: int, c: int = 0, cs: int = 0, coeff: Scalarish = 1) -> "AlgebraElement":
        if c < 0 or cs < 0:
            raise ValueError("c and c* exponents must be nonnegative")
        x = QScalar.coerce(coeff)
        return cls._make({(a, c, cs, e): v for e, v in x.num}, x.den, canonical=True)

    # -- views --------------------------------------------------------------

    def terms(self) -> dict:
        """``{Monomial: QScalar}`` with nonzero coefficients."""
        polys: dict = {}
        for (k, m, n, e), c in self._t.items():
            polys.setdefault(Monomial(k, m, n), {})[e] = c
        return {mono: QScalar(lp, self._d) for mono, lp in polys.items()}

    def coeff(self, mono) -> QScalar:
        mono = tuple(mono)
        lp = {e: c for (k, m, n, e), c in self._t.items() if (k, m, n) == mono}
        return QScalar(lp, self._d) if lp else QScalar.coerce(0)

    def monomials(self) -> set:
        return {Monomial(k, m, n) for (k, m, n, _e) in self._t}

    @property
    def degree(self) -> int:
        return max((abs(k) + m + n for (k, m, n, _e) in self._t), default=0)

    def is_zero(self) -> bool:
        return not self._t

    def is_scalar(self) -> bool:
        return all(k == 0 and m == 0 and n == 0 for (k, m, n, _e) in self._t)

    def scalar_value(self) -> QScalar:
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.coeff((0, 0, 0))

    def is_integral(self) -> bool:
        """True when all coefficients lie in Z[s, 1/s]."""
        return self._d == (1,)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "AlgebraElement":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        if not self._t:
            return o
        if self._d == o._d:
            acc = dict(self._t)
            get = acc.get
            for key, c in o._t.items():
                v = get(key, 0) + c
                if v:
                    acc[key] = v
                else:
                    del acc[key]
            return AlgebraElement._make(acc, self._d, canonical=self._d == (1,))
        acc = _times_dense(self._t, o._d)
        acc = dict(acc) if acc is self._t else acc
        kernel.axpy(acc, o._t, tuple((i, c) for i, c in enumerate(self._d) if c))
        return AlgebraElement._make(acc, pmul(self._d, o._d))

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement._make({k: -c for k, c in self._t.items()}, self._d, canonical=True)

    def __sub__(self, other) -> "AlgebraElement":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "AlgebraElement":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, x: Scalarish) -> "AlgebraElement":
        x = QScalar.coerce(x)
        if not x.num or not self._t:
            return ZERO
        acc: dict = {}
        kernel.axpy(acc, self._t, x.num)
        if x.den == (1,) and self._d == (1,):
            return AlgebraElement._make(acc, (1,), canonical=True)
        return AlgebraElement._make(acc, pmul(self._d, x.den))

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (QScalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if not self._t or not other._t:
            return ZERO
        t = kernel.mul_flat(self._t, other._t, _DEGREE_CAP)
        if self._d == (1,) and other._d == (1,):
            return AlgebraElement._make(t, (1,), canonical=True)
        return AlgebraElement._make(t, pmul(self._d, other._d))

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (QScalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: Scalarish) -> "AlgebraElement":
        return self.scale(QScalar.coerce(other).inv())

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers are not defined in the algebra")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def star(self) -> "AlgebraElement":
        """Involutive anti-automorphism; scalars are fixed (q real)."""
        return AlgebraElement._make(kernel.star_flat(self._t), self._d, canonical=True)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._d == o._d and self._t == o._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._t.items()), self._d))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._t)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        items = sorted(self.terms().items(), key=lambda kv: (-kv[0].degree, -kv[0].a, -kv[0].c, -kv[0].cs))
        if not items:
            return "0"
        parts = []
        for mono, coeff in items:
            if mono == (0, 0, 0):
                txt = str(coeff)
                parts.append(txt if _is_atomic(txt) else f"({txt})")
            elif coeff == S_ONE:
                parts.append(str(mono))
            else:
                parts.append(f"({coeff}) {mono}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def _is_atomic(txt: str) -> bool:
    return " " not in txt and "/" not in txt and not txt.startswith("-")


def _coerce(x) -> AlgebraElement | None:
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, (QScalar, int, Fraction)):
        return AlgebraElement.scalar(x)
    return None


def elem(x) -> AlgebraElement:
    """Coerce scalars and elements to :class:`AlgebraElement`."""
    out = _coerce(x)
    if out is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to AlgebraElement")
    return out


ZERO = AlgebraElement._make({}, (1,), canonical=True)
ONE = AlgebraElement._make({(0, 0, 0, 0): 1}, (1,), canonical=True)
A = AlgebraElement.monomial(1)
AS = AlgebraElement.monomial(-1)
C = AlgebraElement.monomial(0, 1, 0)
CS = AlgebraElement.monomial(0, 0, 1)

GENERATORS = {"a": A, "as": AS, "c": C, "cs": CS}


def relations() -> dict:
    """The eight defining relations as ``LHS - RHS`` (each must vanish)."""
    q = QScalar.q_power(1)
    return {
        "ac = q ca": A * C - (C * A).scale(q),
        "c*a* = q a*c*": CS * AS - (AS * CS).scale(q),
        "ac* = q c*a": A * CS - (CS * A).scale(q),
        "ca* = q a*c": C * AS - (AS * C).scale(q),
        "cc* = c*c": C * CS - CS * C,
        "a*a + c*c = 1": AS * A + CS * C - ONE,
        "aa* + q^2 cc* = 1": A * AS + (C * CS).scale(q * q) - ONE,
        "a*a + c*c = aa* + q^2 cc*": AS * A + CS * C - A * AS - (C * CS).scale(q * q),
    }


# --------------------------------------------------------------------------
# classical limit
# --------------------------------------------------------------------------


def classical_limit(f: AlgebraElement) -> dict:
    """Commutative image at ``q = 1``: ``{Monomial: Fraction}`` with zeros dropped.

    At ``q = 1`` the PBW monomials are a basis of the commutative coordinate
    ring with ``a̅ a + c̅ c = 1``, so the image is read off coefficientwise.
    Coefficients are canonical, so only genuine poles at ``s = 1`` raise.
    """
    out: dict = {}
    for mono, coeff in f.terms().items():
        try:
            v = coeff.eval(1)
        except PoleError as exc:
            raise PoleError(f"coefficient of {mono} has a pole at s = 1") from exc
        if v:
            out[mono] = v
    return out
