"""First-order calculus on S³_q over the left-invariant basis ω₊, ω₋, ω_z.

A :class:`OneForm` is stored in right coordinates, ``ω₊f₊ + ω₋f₋ + ω_z f_z``.
Moving a function across a basis form uses ``ω_a f = σ_a(f) ω_a``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import hopf
from .algebra import ZERO, AlgebraElement, elem
from .hopf import DAGGER, INDICES
from .scalar import QScalar

_INDEX_NAMES = {"+": "w+", "-": "w-", "z": "wz"}


class OneForm:
    """Element of Ω¹(S³_q) in right-module coordinates."""

    __slots__ = ("_c",)

    def __init__(self, plus=ZERO, minus=ZERO, z=ZERO):
        self._c = (elem(plus), elem(minus), elem(z))

    @classmethod
    def from_dict(cls, comps: dict) -> "OneForm":
        return cls(*(comps.get(a, ZERO) for a in INDICES))

    @classmethod
    def basis(cls, a: str) -> "OneForm":
        return cls.from_dict({a: elem(1)})

    @classmethod
    def from_left(cls, plus=ZERO, minus=ZERO, z=ZERO) -> "OneForm":
        """Build ``f₊ω₊ + f₋ω₋ + f_zω_z``."""
        return cls(*(hopf.sigma(a, f, -1) for a, f in zip(INDICES, (plus, minus, z))))

    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, a: str) -> AlgebraElement:
        return self._c[INDICES.index(a)]

    def left_coeffs(self) -> tuple:
        """Coefficients ``g_a`` with ``self = Σ g_a ω_a``."""
        return tuple(hopf.sigma(a, f) for a, f in zip(INDICES, self._c))

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(*(x + y for x, y in zip(self._c, other._c)))

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(*(x - y for x, y in zip(self._c, other._c)))

    def __neg__(self) -> "OneForm":
        return OneForm(*(-x for x in self._c))

    def scale(self, lam) -> "OneForm":
        lam = QScalar.coerce(lam)
        return OneForm(*(x.scale(lam) for x in self._c))

    def __mul__(self, g) -> "OneForm":
        # right module action
        g = elem(g)
        return OneForm(*(x * g for x in self._c))

    def __rmul__(self, f) -> "OneForm":
        return smulL(f, self)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self._c)

    def __eq__(self, other) -> bool:
        return isinstance(other, OneForm) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"OneForm({self})"

    def __str__(self) -> str:
        parts = [f"{_INDEX_NAMES[a]} * ({f})" for a, f in zip(INDICES, self._c) if not f.is_zero()]
        return " + ".join(parts) if parts else "0"


ZERO_FORM = OneForm()
OMEGA = {a: OneForm.basis(a) for a in INDICES}


def smulL(f, w: OneForm) -> OneForm:
    """``f·w`` in right coordinates: ``f ω_a g = ω_a σ_a⁻¹(f) g``."""
    f = elem(f)
    return OneForm(*(hopf.sigma(a, f, -1) * g for a, g in zip(INDICES, w.coeffs())))


def d(f) -> OneForm:
    """``df = Σ (X_a ▷ f) ω_a``."""
    f = elem(f)
    return OneForm.from_left(*(hopf.X(a, f) for a in INDICES))


def dagger(w: OneForm) -> OneForm:
    """Antilinear involution with ``ω₊† = -ω₋``, ``ω_z† = -ω_z`` and ``(ωg)† = g*ω†``."""
    out = {}
    for a, g in zip(INDICES, w.coeffs()):
        b = DAGGER[a]
        out[b] = -hopf.sigma(b, g.star(), -1)
    return OneForm.from_dict(out)


def combine(pairs: Iterable[tuple]) -> OneForm:
    """``Σ f_i · w_i`` for pairs ``(f_i, w_i)``."""
    out = ZERO_FORM
    for f, w in pairs:
        out = out + smulL(f, w)
    return out


def invariant_forms_from_generators() -> dict:
    """The basis forms rebuilt from ``a dc - qc da`` and its companions."""
    from .algebra import A, AS, C, CS

    q = QScalar.q_power(1)
    return {
        "+": combine([(A, d(C)), (C.scale(-q), d(A))]),
        "-": combine([(CS, d(AS)), (AS.scale(-q), d(CS))]),
        "z": combine([(AS, d(A)), (CS, d(C))]),
    }


def as_vector(w: OneForm) -> Sequence[AlgebraElement]:
    """Right coordinates as a plain list, in the order ``+, -, z``."""
    return list(w.coeffs())
