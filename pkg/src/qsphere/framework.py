"""Generic quantum tangent spaces with twist functionals ``σ^a_b``.

A :class:`QuantumTangentSpace` bundles derivations ``X_a``, a twist matrix
``σ^a_b`` of linear maps and the index involution ``a ↦ a†``.  The checks
here are the generic twisted Leibniz rule, the generic star law and
compatibility of a connection on the trivial module ``M = H`` with
``h(m₁, m₂) = m₁* m₂``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from . import hopf
from .algebra import ZERO, AlgebraElement, elem

Operator = Callable[[AlgebraElement], AlgebraElement]


@dataclass(frozen=True)
class QuantumTangentSpace:
    """``sigma[(b, a)]`` is ``σ^b_a``; missing keys are the zero map."""

    indices: tuple
    X: Callable[[str, AlgebraElement], AlgebraElement]
    sigma: dict
    dagger: dict

    @property
    def dimension(self) -> int:
        return len(self.indices)

    def twist(self, b: str, a: str, f) -> AlgebraElement:
        op: Optional[Operator] = self.sigma.get((b, a))
        return ZERO if op is None else op(elem(f))

    def is_diagonal(self) -> bool:
        return all(b == a for (b, a) in self.sigma)


def instanceS3q() -> QuantumTangentSpace:
    """The three-dimensional calculus on S³_q with ``σ₊ = σ₋ = K²``, ``σ_z = K⁴``."""
    sig = {(a, a): (lambda f, a=a: hopf.sigma(a, f)) for a in hopf.INDICES}
    return QuantumTangentSpace(hopf.INDICES, hopf.X, sig, dict(hopf.DAGGER))


def xacts_residual(qts: QuantumTangentSpace, a: str, f, g) -> AlgebraElement:
    """``X_a(fg) - f X_a(g) - Σ_b X_b(f) σ^b_a(g)``."""
    f, g = elem(f), elem(g)
    res = qts.X(a, f * g) - f * qts.X(a, g)
    for b in qts.indices:
        t = qts.twist(b, a, g)
        if not t.is_zero():
            res = res - qts.X(b, f) * t
    return res


def xacts_star_residual(qts: QuantumTangentSpace, a: str, f) -> AlgebraElement:
    """``X_a(f*) + Σ_b σ^b_a((X_{b†} f)*)``."""
    f = elem(f)
    res = qts.X(a, f.star())
    for b in qts.indices:
        res = res + qts.twist(b, a, qts.X(qts.dagger[b], f).star())
    return res


def check_xacts(qts: QuantumTangentSpace, pairs: Iterable) -> tuple:
    bad = [(a, f, g, r) for f, g in pairs for a in qts.indices
           for r in [xacts_residual(qts, a, f, g)] if not r.is_zero()]
    return not bad, bad


def check_xacts_star(qts: QuantumTangentSpace, fs: Iterable) -> tuple:
    bad = [(a, f, r) for f in fs for a in qts.indices
           for r in [xacts_star_residual(qts, a, f)] if not r.is_zero()]
    return not bad, bad


def trivial_nabla(qts: QuantumTangentSpace) -> Callable[[str, AlgebraElement], AlgebraElement]:
    """The connection on ``M = H`` given by the derivations themselves."""
    return lambda a, m: qts.X(a, m)


def genericCompatResiduals(qts: QuantumTangentSpace, nabla: Callable, m1, m2) -> dict:
    """``X_a(m₁*m₂) - m₁*∇_a m₂ + Σ_b σ^b_a((∇_{b†} m₁)* m₂)`` for each ``a``."""
    m1, m2 = elem(m1), elem(m2)
    h = m1.star() * m2
    out = {}
    for a in qts.indices:
        r = qts.X(a, h) - m1.star() * nabla(a, m2)
        for b in qts.indices:
            r = r + qts.twist(b, a, nabla(qts.dagger[b], m1).star() * m2)
        out[a] = r
    return out


def genericCompatCheck(qts: QuantumTangentSpace, nabla: Callable, m1, m2) -> tuple:
    res = genericCompatResiduals(qts, nabla, m1, m2)
    return all(r.is_zero() for r in res.values()), res
