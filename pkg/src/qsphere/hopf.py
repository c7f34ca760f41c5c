"""Left and right actions of U_q(su(2)) on the quantum 3-sphere.

Generator values come from the coproduct of the 3-sphere and the pairing
with ``E, F, K, K^-1``; actions on longer monomials are obtained by peeling
one generator at a time with ``Δ(E) = E⊗K + K⁻¹⊗E`` (same for ``F``).  ``K``
acts diagonally on monomials, so it is applied as a weight shift.

The twisted derivations are ``X+ = √q EK``, ``X- = FK/√q`` and
``X_z = (1 - K^4)/(1 - q^-2)``, with twists ``σ± = K²`` and ``σ_z = K⁴``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import kernel
from .algebra import A, AS, C, CS, ONE, ZERO, AlgebraElement, elem
from .scalar import QScalar

LEFT = "left"
RIGHT = "right"
INDICES = ("+", "-", "z")
HOPF_GENERATORS = ("E", "F", "K", "Kinv")

_q = QScalar.q_power(1)
_LETTER_ELEM = {"a": A, "as": AS, "c": C, "cs": CS}

# Δ on generators: [(coeff, left factor, right factor)]
COPRODUCT = {
    "a": [(QScalar.coerce(1), "a", "a"), (-_q, "cs", "c")],
    "c": [(QScalar.coerce(1), "c", "a"), (QScalar.coerce(1), "as", "c")],
    "as": [(-_q, "c", "cs"), (QScalar.coerce(1), "as", "as")],
    "cs": [(QScalar.coerce(1), "a", "cs"), (QScalar.coerce(1), "cs", "as")],
}

# <h, x>; unlisted pairs vanish.  <K, a*> = q^{1/2} is forced by
# <K, a*a + c*c> = <K, 1> = 1 and agrees with the K-action on (a*)^n.
PAIRING = {
    ("K", "a"): QScalar.s_power(-1),
    ("K", "as"): QScalar.s_power(1),
    ("Kinv", "a"): QScalar.s_power(1),
    ("Kinv", "as"): QScalar.s_power(-1),
    ("E", "c"): QScalar.coerce(1),
    ("F", "cs"): -_q.inv(),
}

# s-exponent of K on a monomial (k, m, n) is j * (wk*k + wm*m + wn*n)
_K_WEIGHT = {LEFT: (-1, -1, 1), RIGHT: (-1, 1, -1)}


def pairing(h: str, letter: str) -> QScalar:
    return PAIRING.get((h, letter), QScalar.coerce(0))


def generator_action(side: str, h: str, letter: str) -> AlgebraElement:
    """``h ▷ x`` (left) or ``x ◁ h`` (right) for a single generator ``x``."""
    out = ZERO
    for coeff, x1, x2 in COPRODUCT[letter]:
        if side == LEFT:
            w = pairing(h, x2)
            if w:
                out = out + _LETTER_ELEM[x1].scale(coeff * w)
        else:
            w = pairing(h, x1)
            if w:
                out = out + _LETTER_ELEM[x2].scale(coeff * w)
    return out


def k_weight(side: str, mono: Sequence[int]) -> int:
    """s-exponent by which one ``K`` scales the monomial."""
    wk, wm, wn = _K_WEIGHT[side]
    k, m, n = mono[:3]
    return wk * k + wm * m + wn * n


def k_power(f, j: int, side: str = LEFT) -> AlgebraElement:
    """``K^j ▷ f`` or ``f ◁ K^j``."""
    f = elem(f)
    if j == 0 or f.is_zero():
        return f
    wk, wm, wn = _K_WEIGHT[side]
    return AlgebraElement._make(kernel.kshift(f._t, j, wk, wm, wn), f._d, canonical=True)


def _peel(mono: tuple) -> tuple[str, tuple]:
    k, m, n = mono
    if k > 0:
        return "a", (k - 1, m, n)
    if k < 0:
        return "as", (k + 1, m, n)
    if m:
        return "c", (0, m - 1, n)
    return "cs", (0, 0, n - 1)


_IMAGES: dict = {}


def _image(side: str, h: str, mono: tuple) -> dict:
    cache = _IMAGES.setdefault((side, h), {})
    got = cache.get(mono)
    if got is not None:
        return got
    if mono == (0, 0, 0):
        img = ZERO  # counit of E and F vanishes
    else:
        letter, rest = _peel(mono)
        x = _LETTER_ELEM[letter]
        w = AlgebraElement.monomial(*rest)
        hx = generator_action(side, h, letter)
        hw = AlgebraElement._make(dict(_image(side, h, rest)), (1,), canonical=True)
        # Δh = h⊗K + K⁻¹⊗h
        if side == LEFT:
            img = hx * k_power(w, 1, LEFT) + k_power(x, -1, LEFT) * hw
        else:
            img = hx * k_power(w, 1, RIGHT) + k_power(x, -1, RIGHT) * hw
    if not img.is_integral():
        raise AssertionError("E/F images must have Laurent coefficients")
    cache[mono] = img._t
    return img._t


def _apply_ef(side: str, h: str, f: AlgebraElement) -> AlgebraElement:
    if f.is_zero():
        return f
    images = {}
    for (k, m, n, _e) in f._t:
        mono = (k, m, n)
        if mono not in images:
            images[mono] = _image(side, h, mono)
    return AlgebraElement._make(kernel.apply_images(f._t, images), f._d)


def _apply_gen(side: str, h: str, f: AlgebraElement) -> AlgebraElement:
    if h == "K":
        return k_power(f, 1, side)
    if h == "Kinv":
        return k_power(f, -1, side)
    if h in ("E", "F"):
        return _apply_ef(side, h, f)
    raise ValueError(f"unknown Hopf generator {h!r}")


def act_left(word: str | Iterable[str], f) -> AlgebraElement:
    """``h ▷ f`` for ``h = h1 h2 ... hr`` (so ``hr`` acts first)."""
    f = elem(f)
    for h in reversed(_word(word)):
        f = _apply_gen(LEFT, h, f)
    return f


def act_right(f, word: str | Iterable[str]) -> AlgebraElement:
    """``f ◁ h`` for ``h = h1 h2 ... hr`` (so ``h1`` acts first)."""
    f = elem(f)
    for h in _word(word):
        f = _apply_gen(RIGHT, h, f)
    return f


def _word(word) -> list:
    return [word] if isinstance(word, str) else list(word)


# --------------------------------------------------------------------------
# twisted derivations
# --------------------------------------------------------------------------


def _xz_laurent(w: int) -> tuple:
    # (1 - q^{2w}) / (1 - q^{-2}) as ((e, c), ...), q^2 = s^4
    if w > 0:
        return tuple((4 * i, -1) for i in range(1, w + 1))
    return tuple((4 * i, 1) for i in range(w + 1, 1))


_XZ_IMAGES: dict = {LEFT: {}, RIGHT: {}}


def _apply_xz(side: str, f: AlgebraElement) -> AlgebraElement:
    if f.is_zero():
        return f
    cache = _XZ_IMAGES[side]
    images = {}
    for (k, m, n, _e) in f._t:
        mono = (k, m, n)
        img = cache.get(mono)
        if img is None:
            img = {(k, m, n, e): c for e, c in _xz_laurent(k_weight(side, mono))}
            cache[mono] = img
        images[mono] = img
    return AlgebraElement._make(kernel.apply_images(f._t, images), f._d)


def X(a: str, f, side: str = LEFT) -> AlgebraElement:
    """Twisted derivation ``X_a ▷ f`` (left) or ``f ◁ X_a`` (right)."""
    f = elem(f)
    if a == "+":
        if side == LEFT:
            return _apply_ef(LEFT, "E", k_power(f, 1, LEFT)).scale(QScalar.s_power(1))
        return k_power(_apply_ef(RIGHT, "E", f), 1, RIGHT).scale(QScalar.s_power(1))
    if a == "-":
        if side == LEFT:
            return _apply_ef(LEFT, "F", k_power(f, 1, LEFT)).scale(QScalar.s_power(-1))
        return k_power(_apply_ef(RIGHT, "F", f), 1, RIGHT).scale(QScalar.s_power(-1))
    if a == "z":
        return _apply_xz(side, f)
    raise ValueError(f"unknown tangent index {a!r}")


def Y(a: str, f) -> AlgebraElement:
    """Right action ``f ◁ X_a``."""
    return X(a, f, RIGHT)


TWIST_POWER = {"+": 2, "-": 2, "z": 4}
DAGGER = {"+": "-", "-": "+", "z": "z"}


def sigma(a: str, f, power: int = 1, side: str = LEFT) -> AlgebraElement:
    """The twist ``σ_a`` (``K²`` or ``K⁴``) applied ``power`` times; negative inverts."""
    return k_power(f, TWIST_POWER[a] * power, side)


@dataclass(frozen=True)
class TangentAction:
    """The derivations ``X_a`` with their twists, acting from one side.

    ``star_twist[a]`` is the scalar ``λ`` in ``X_a(f*) = -λ σ_a((X_{a†} f)*)``;
    it is 1 for the left action and ``q^{±2}`` for the right action.
    """

    side: str
    star_twist: dict

    def X(self, a: str, f) -> AlgebraElement:
        return X(a, f, self.side)

    def sigma(self, a: str, f, power: int = 1) -> AlgebraElement:
        return sigma(a, f, power, self.side)

    def K(self, f, j: int = 1) -> AlgebraElement:
        return k_power(f, j, self.side)


LEFT_ACTION = TangentAction(LEFT, {"+": QScalar.coerce(1), "-": QScalar.coerce(1), "z": QScalar.coerce(1)})
RIGHT_ACTION = TangentAction(RIGHT, {"+": _q * _q, "-": (_q * _q).inv(), "z": QScalar.coerce(1)})


class TangentVector:
    """Formal combination ``Σ c_a X_a`` of the three twisted derivations."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {a: QScalar.coerce(v) for a, v in (coeffs or {}).items() if QScalar.coerce(v)}
        if set(self.coeffs) - set(INDICES):
            raise ValueError("tangent indices are '+', '-', 'z'")

    @classmethod
    def basis(cls, a: str) -> "TangentVector":
        return cls({a: 1})

    def __add__(self, other: "TangentVector") -> "TangentVector":
        out = dict(self.coeffs)
        for a, v in other.coeffs.items():
            out[a] = out.get(a, QScalar.coerce(0)) + v
        return TangentVector(out)

    def __rmul__(self, lam) -> "TangentVector":
        lam = QScalar.coerce(lam)
        return TangentVector({a: lam * v for a, v in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TangentVector) and self.coeffs == other.coeffs

    def apply(self, f, side: str = LEFT) -> AlgebraElement:
        out = ZERO
        for a, v in self.coeffs.items():
            out = out + X(a, f, side).scale(v)
        return out


def operator(name: str, side: str = LEFT) -> Callable[[AlgebraElement], AlgebraElement]:
    """CLI-facing lookup: ``E, F, K, Kinv, X+, X-, Xz``."""
    if name in HOPF_GENERATORS:
        if side == LEFT:
            return lambda f: act_left(name, f)
        return lambda f: act_right(f, name)
    if name in ("X+", "X-", "Xz"):
        a = name[1]
        return lambda f: X(a, f, side)
    raise ValueError(f"unknown operator {name!r}")


ONE_ELEMENT = ONE
