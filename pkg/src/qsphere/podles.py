"""The Podleś sphere S²_q as the K-invariant subalgebra of S³_q.

Covers the generators ``B₀ = cc*``, ``B₊ = ca*``, ``B₋ = ac*``, the right
vector fields ``Y_a`` (the right action of ``X_a``), both forms of the
differential, the frames ``Φ_n``, ``Ψ_n`` and the projectors ``p_{±n}``.

Frame coefficients involve ``√α_{nμ}`` and ``√β_{nμ}``, which are not in
ℚ(s).  Projector identities are therefore checked on the rescaled matrix
``P'^μ_ν = w_ν W_μ W_ν*`` (``w`` the squared coefficient), which is
idempotent exactly when ``p`` is; see :func:`projector`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import hopf
from .algebra import A, AS, C, CS, ONE, ZERO, AlgebraElement, Monomial, classical_limit, elem
from .calculus import OneForm, ZERO_FORM, combine, d, smulL
from .connection import (ConnParams, Connection, HermitianForm, InducedConnection, ModuleVec,
                         christoffelFromForm, dagger_matrix, induce, is_idempotent, matmul)
from .errors import PreconditionError
from .hopf import RIGHT, RIGHT_ACTION, INDICES, Y
from .scalar import QScalar

_q = QScalar.q_power(1)
_one = QScalar.coerce(1)

B0 = C * CS
BP = C * AS
BM = A * CS


def sphereGens() -> tuple:
    return B0, BP, BM


def sphere_relations() -> dict:
    q2 = _q * _q
    return {
        "B-B0 = q^2 B0B-": BM * B0 - (B0 * BM).scale(q2),
        "B+B0 = q^-2 B0B+": BP * B0 - (B0 * BP).scale(q2.inv()),
        "B-B+ = q^2 B0(1 - q^2 B0)": BM * BP - (B0 * (ONE - B0.scale(q2))).scale(q2),
        "B+B- = B0(1 - B0)": BP * BM - B0 * (ONE - B0),
        "B- = B+*": BM - BP.star(),
    }


def isInvariant(f) -> bool:
    f = elem(f)
    return hopf.k_power(f, 1) == f


def basis_word(m: int, n: int) -> AlgebraElement:
    """``X(m) B₀^n`` with ``X(m) = B₊^m`` or ``B₋^{-m}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    head = BP ** m if m >= 0 else BM ** (-m)
    return head * B0 ** n


def sweep(mmax: int, nmax: int) -> list:
    return [(m, n) for m in range(-mmax, mmax + 1) for n in range(nmax + 1)]


def Yact(f, a: str) -> AlgebraElement:
    """``f ◁ Y_a`` for ``f`` in S²_q, with the invariance certificate checked."""
    f = elem(f)
    if not isInvariant(f):
        raise PreconditionError("Yact expects an element of the Podleś sphere")
    out = Y(a, f)
    if not isInvariant(out):
        raise AssertionError("the right action left the Podleś sphere")
    return out


def Yzz(f) -> AlgebraElement:
    return Y("z", Y("z", f))


# --------------------------------------------------------------------------
# action tables
# --------------------------------------------------------------------------


def left_table() -> dict:
    """``X_a ▷ B`` on the three generators; keys are ``(a, name)``.

    The ``X₊ ▷ B₋`` entry carries a minus sign, as the coproduct and the
    formula for ``dB₋`` require.
    """
    q = _q
    return {
        ("+", "B0"): (AS * CS).scale(q),
        ("-", "B0"): (C * A).scale(-q.inv()),
        ("z", "B0"): ZERO,
        ("+", "B+"): (AS * AS).scale(q),
        ("-", "B+"): C * C,
        ("z", "B+"): ZERO,
        ("+", "B-"): (CS * CS).scale(-q * q),
        ("-", "B-"): (A * A).scale(-q.inv()),
        ("z", "B-"): ZERO,
    }


def right_table() -> dict:
    q = _q
    q2 = q * q
    return {
        ("+", "B0"): BM.scale(q.inv()),
        ("-", "B0"): BP.scale(-q.inv()),
        ("z", "B0"): ZERO,
        ("+", "B+"): (ONE - B0.scale(1 + q2)).scale(q),
        ("-", "B+"): ZERO,
        ("z", "B+"): BP.scale(-q2 * (1 + q2)),
        ("+", "B-"): ZERO,
        ("-", "B-"): (B0.scale(1 + q2) - ONE).scale(q.inv()),
        ("z", "B-"): BM.scale(1 + q2.inv()),
    }


GEN_BY_NAME = {"B0": B0, "B+": BP, "B-": BM}


# --------------------------------------------------------------------------
# relation between the right vector fields
# --------------------------------------------------------------------------


def rel_rvf_sides(f) -> tuple:
    """Both sides of the stated quadratic relation between ``Y₊, Y₋, Y_z`` on S²_q.

    ``Y_z²`` is ``(f◁Y_z)◁Y_z`` and ``f◁K⁴`` the right action of ``K⁴``.
    """
    f = elem(f)
    q = _q
    q2, q4, q6 = q ** 2, q ** 4, q ** 6
    lhs = ((Y("+", f) * BP).scale(q) + (Y("-", f) * BM).scale(q.inv())).scale(1 + q2)
    lhs = lhs + Y("z", f) * (ONE - B0.scale(2 * (1 + q2) / (1 + q4)))
    r1 = Yzz(f) * (B0.scale((1 - q2) / (1 + q4) * (2 * q4 + q2 + 1)) - (B0 * B0).scale(1 - q6))
    r2 = hopf.k_power(f, 4, RIGHT) * (B0.scale(q4 - 1) + (B0 * B0).scale(1 - q6)).scale(1 + q2)
    return lhs, (r1 + r2).scale(q2.inv())


def checkRelRvf(m: int, n: int) -> tuple:
    lhs, rhs = rel_rvf_sides(basis_word(m, n))
    res = lhs - rhs
    return res.is_zero(), res


def classical_relation_value(f) -> AlgebraElement:
    """``2((f◁Y₊)B₊ + (f◁Y₋)B₋) + (f◁Y_z)(1 - 2B₀)`` before specialization."""
    f = elem(f)
    return (Y("+", f) * BP + Y("-", f) * BM).scale(2) + Y("z", f) * (ONE - B0.scale(2))


def classicalRelation(m: int, n: int) -> tuple:
    """The q = 1 relation on ``X(m)B₀^n``; the residual is the commutative image."""
    lim = classical_limit(classical_relation_value(basis_word(m, n)))
    return not lim, lim


# --------------------------------------------------------------------------
# differentials on the sphere
# --------------------------------------------------------------------------


def dSphere(f) -> OneForm:
    """``df = (X₋▷f)ω₋ + (X₊▷f)ω₊`` for invariant ``f``."""
    f = elem(f)
    if hopf.X("z", f) != ZERO:
        raise PreconditionError("dSphere expects a K-invariant element")
    return OneForm.from_left(hopf.X("+", f), hopf.X("-", f), ZERO)


def dB() -> dict:
    """Closed-form values of ``dB₊, dB₋, dB₀`` in left coordinates."""
    q = _q
    return {
        "B+": OneForm.from_left((AS * AS).scale(q), C * C),
        "B-": OneForm.from_left((CS * CS).scale(-q * q), (A * A).scale(-q.inv())),
        "B0": OneForm.from_left(CS * AS, (C * A).scale(-q.inv())),
    }


def omegaFromDB() -> dict:
    """Coefficients of ``ω₊, ω₋`` on ``(dB₊, dB₋, dB₀)``."""
    q = _q
    q2 = q * q
    return {
        "+": ((A * A).scale(q.inv()), (C * C).scale(-q2), (A * C).scale(1 + q2)),
        "-": (CS * CS, (AS * AS).scale(-q), (CS * AS).scale(-(1 + q2))),
    }


def omega_reconstruction() -> dict:
    """``Σ coeff · dB`` for each of ``ω₊, ω₋``, using the kernel's ``d``."""
    dbs = [d(BP), d(BM), d(B0)]
    return {a: combine(zip(coeffs, dbs)) for a, coeffs in omegaFromDB().items()}


def Vops(f) -> tuple:
    """``(f◁V₊, f◁V₋, f◁V₀)`` from the stated combinations of ``Y``'s."""
    f = elem(f)
    q = _q
    q2, q4, q6 = q ** 2, q ** 4, q ** 6
    yp, ym, yz, yzz = Y("+", f), Y("-", f), Y("z", f), Yzz(f)
    c1 = q2.inv() * (1 + q6) / (1 + q4)
    c2 = (1 - q2) / ((1 + q2) * (1 + q4))
    vp = ((yp * (ONE - B0.scale(q2.inv() * (1 + q2)))).scale(q.inv())
          - (yz * BM).scale(c1) + (yzz * BM).scale(c2))
    vm = (-(ym * (ONE - B0.scale(q2 * (1 + q2)))).scale(q)
          + (yz * BP).scale(c1) - (yzz * BP).scale(c2))
    v0 = ((yp * BP).scale(q.inv()) - (ym * BM).scale(q)).scale(1 + q2)
    v0 = v0 + (yz * B0).scale((1 - q4) * (1 + q6) / (1 + q4)) - (yzz * B0).scale((1 - q2) / (1 + q4))
    return vp, vm, v0


def vops_differential(f) -> OneForm:
    vp, vm, v0 = Vops(f)
    return combine([(vp, d(BP)), (vm, d(BM)), (v0, d(B0))])


def bis_differential(f) -> OneForm:
    """The three-term expression of ``df`` on ``dB₊, dB₋, dB₀`` via left actions."""
    f = elem(f)
    q = _q
    q2 = q * q
    xp, xm = hopf.X("+", f), hopf.X("-", f)
    cp = (xp * A * A).scale(q.inv()) + xm * CS * CS
    cm = -((xp * C * C).scale(q2) + (xm * AS * AS).scale(q))
    c0 = (xp * A * C - xm * CS * AS).scale(1 + q2)
    return combine([(cp, d(BP)), (cm, d(BM)), (c0, d(B0))])


# --------------------------------------------------------------------------
# frames, projectors and line bundles
# --------------------------------------------------------------------------


def alpha(n: int, mu: int) -> QScalar:
    out = _one
    for k in range(n - mu):
        out = out * (1 - QScalar.q_power(2 * (n - k))) / (1 - QScalar.q_power(2 * (k + 1)))
    return out


def beta(n: int, mu: int) -> QScalar:
    out = QScalar.q_power(2 * mu)
    for k in range(mu):
        out = out * (1 - QScalar.q_power(-2 * (n - k))) / (1 - QScalar.q_power(-2 * (k + 1)))
    return out


def _monomial_sqrt(v: QScalar) -> QScalar | None:
    # exact square root of c·s^(2e) with c a rational square, else None
    if not v.is_laurent():
        return None
    terms = v.laurent_terms()
    if len(terms) != 1:
        return None
    e, c = terms[0]
    r = math.isqrt(c) if c > 0 else -1
    if e % 2 or r * r != c:
        return None
    return QScalar.s_power(e // 2, r)


@dataclass(frozen=True)
class RadicalScalar:
    """``base · Π √r`` with ``r`` drawn from ``α_{nμ}`` or ``β_{nμ}``.

    ``radicals`` is a sorted tuple of ``(kind, n, μ)``, each at most once;
    repeated factors are folded into ``base``.
    """

    base: QScalar
    radicals: tuple = ()

    @staticmethod
    def value(kind: str, n: int, mu: int) -> QScalar:
        return alpha(n, mu) if kind == "alpha" else beta(n, mu)

    @classmethod
    def sqrt(cls, kind: str, n: int, mu: int) -> "RadicalScalar":
        root = _monomial_sqrt(cls.value(kind, n, mu))
        if root is not None:
            return cls(root)
        return cls(_one, ((kind, n, mu),))

    def __mul__(self, other: "RadicalScalar") -> "RadicalScalar":
        base = self.base * other.base
        rad = list(self.radicals)
        for r in other.radicals:
            if r in rad:
                rad.remove(r)
                base = base * self.value(*r)
            else:
                rad.append(r)
        return RadicalScalar(base, tuple(sorted(rad)))

    def square(self) -> QScalar:
        out = self.base * self.base
        for r in self.radicals:
            out = out * self.value(*r)
        return out

    def is_rational(self) -> bool:
        return not self.radicals

    def __str__(self) -> str:
        parts = [f"sqrt({self.value(k, n, mu)})" for k, n, mu in self.radicals]
        head = str(self.base)
        return " ".join(([] if head == "1" and parts else [f"({head})"]) + parts)


@dataclass(frozen=True)
class Frame:
    """``entries[μ] = (coeff_μ, word_μ)``: the μ-th component is ``coeff_μ · word_μ``."""

    n: int
    kind: str
    entries: tuple

    def words(self) -> list:
        return [w for _, w in self.entries]

    def weights(self) -> list:
        """Squared coefficients ``α_{nμ}`` or ``β_{nμ}``."""
        return [c.square() for c, _ in self.entries]

    def partition_of_unity(self) -> AlgebraElement:
        """``Σ_μ w_μ W_μ* W_μ``, which must equal 1."""
        return sum((w.star() * w).scale(x) for x, w in zip(self.weights(), self.words())) or ZERO

    def component(self, mu: int) -> AlgebraElement:
        c, w = self.entries[mu]
        if not c.is_rational():
            raise ValueError("component has an irrational coefficient; use words() and weights()")
        return w.scale(c.base)


def frame(n: int, kind: str) -> Frame:
    if n < 0:
        raise ValueError("frame degree must be nonnegative")
    if kind in ("Phi", "Φ"):
        ent = tuple((RadicalScalar.sqrt("alpha", n, mu), C ** (n - mu) * A ** mu) for mu in range(n + 1))
        return Frame(n, "Phi", ent)
    if kind in ("Psi", "Ψ"):
        ent = tuple((RadicalScalar.sqrt("beta", n, mu), CS ** mu * AS ** (n - mu)) for mu in range(n + 1))
        return Frame(n, "Psi", ent)
    raise ValueError("kind must be 'Phi' or 'Psi'")


@dataclass
class Projector:
    """``p_n`` for ``n ≥ 0`` (from ``Ψ_n``) or ``p_{-|n|}`` (from ``Φ_{|n|}``).

    ``words[μ][ν] = W_μ W_ν*`` and ``p^μ_ν = √(w_μ w_ν) · words[μ][ν]``.
    """

    n: int
    frame: Frame
    words: list

    @property
    def size(self) -> int:
        return len(self.words)

    def weights(self) -> list:
        return self.frame.weights()

    def rescaled(self) -> list:
        """``P'^μ_ν = w_ν W_μ W_ν*``, similar to ``p`` through ``diag(√w)``."""
        w = self.weights()
        return [[self.words[i][j].scale(w[j]) for j in range(self.size)] for i in range(self.size)]

    def idempotence_residual(self) -> list:
        """``Σ_ρ w_ρ W_{μρ} W_{ρν} - W_{μν}``."""
        w = self.weights()
        k = self.size
        return [[sum((self.words[i][r] * self.words[r][j]).scale(w[r]) for r in range(k)) - self.words[i][j]
                 for j in range(k)] for i in range(k)]

    def is_idempotent(self) -> bool:
        return all(r.is_zero() for row in self.idempotence_residual() for r in row)

    def is_self_adjoint(self) -> bool:
        # (√(w_μw_ν) W_{μν})* = √(w_μw_ν) W_{νμ}
        return all(self.words[i][j].star() == self.words[j][i] for i in range(self.size) for j in range(self.size))

    def is_invariant(self) -> bool:
        return all(isInvariant(x) for row in self.words for x in row)

    def weight_rule(self) -> bool:
        """``p^μ_ν ◁ K = q^{ν-μ} p^μ_ν``."""
        for i in range(self.size):
            for j in range(self.size):
                x = self.words[i][j]
                if hopf.k_power(x, 1, RIGHT) != x.scale(QScalar.q_power(j - i)):
                    return False
        return True

    def is_rational(self) -> bool:
        return all((self.frame.entries[i][0] * self.frame.entries[j][0]).is_rational()
                   for i in range(self.size) for j in range(self.size))

    def matrix(self) -> list:
        """Exact entries, available when every ``√(w_μ w_ν)`` is rational."""
        out = []
        for i in range(self.size):
            row = []
            for j in range(self.size):
                c = self.frame.entries[i][0] * self.frame.entries[j][0]
                if not c.is_rational():
                    raise ValueError(f"entry ({i},{j}) carries an irrational factor {c}")
                row.append(self.words[i][j].scale(c.base))
            out.append(row)
        return out

    def entry_str(self, i: int, j: int) -> str:
        c = self.frame.entries[i][0] * self.frame.entries[j][0]
        w = self.words[i][j]
        if c.is_rational():
            return str(w.scale(c.base))
        return f"{c} * ({w})"


def projector(n: int) -> Projector:
    fr = frame(abs(n), "Psi" if n >= 0 else "Phi")
    ws = fr.words()
    words = [[wi * wj.star() for wj in ws] for wi in ws]
    return Projector(n, fr, words)


def line_bundle_degree(f) -> int | None:
    """``n`` with ``K▷f = q^{-n/2} f``, or ``None`` if ``f`` is not homogeneous."""
    f = elem(f)
    if f.is_zero():
        return None
    ws = {hopf.k_weight(hopf.LEFT, m) for m in f.monomials()}
    if len(ws) != 1:
        return None
    return -ws.pop()


# --------------------------------------------------------------------------
# connections on M_n
# --------------------------------------------------------------------------


def sphere_connection(h: HermitianForm, params: ConnParams | None = None) -> Connection:
    """Free-module connection on ``(S²_q)^{k}`` built with the right vector fields."""
    k = h.rank
    params = params or ConnParams.zero(k)
    for row in list(h.h) + list(params.gamma) + list(params.rho):
        for x in row:
            if not isInvariant(x):
                raise PreconditionError("metric and parameters must lie in the Podleś sphere")
    return christoffelFromForm(h, params, RIGHT_ACTION)


def inducedSphereConnection(n: int, h: HermitianForm | None = None,
                            params: ConnParams | None = None) -> InducedConnection:
    """``p_n ∘ ∇̃`` on ``M_n``; needs ``p_n`` with rational entries."""
    p = projector(n)
    mat = p.matrix()
    h = h or HermitianForm.delta(p.size)
    return induce(mat, sphere_connection(h, params))


def closed_form_induced(ind: InducedConnection, a: str, mu: int) -> ModuleVec:
    """``∇_a ê_μ`` from the closed formula with the ``q^{2(μ-ν)}``, ``q^{4(μ-ν)}`` factors."""
    p = ind.p
    k = len(p)
    gam = ind.base.gamma[a]
    power = {"+": 2, "-": 2, "z": 4}[a]
    out = ModuleVec([ZERO] * k)
    gens = ind.generators()
    for nu in range(k):
        factor = QScalar.q_power(power * (mu - nu))
        for kap in range(k):
            coeff = (gam[kap][nu] * p[nu][mu]).scale(factor)
            if not coeff.is_zero():
                out = out + gens[kap] * coeff
        out = out + gens[nu] * Y(a, p[nu][mu])
    return out
