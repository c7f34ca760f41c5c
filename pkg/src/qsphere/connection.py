"""q-affine connections on free right modules over S³_q.

Christoffel symbols are stored as ``gamma[a][j][i] = Γ^j_{ai}`` so that
``∇_{X_a} e_i = e_j Γ^j_{ai}`` and, on a general vector,

    (∇_a m)^j = Γ^j_{ai} σ_a(m^i) + X_a(m^j).

Every checker returns the exact residuals next to its verdict.  A
connection carries the :class:`~qsphere.hopf.TangentAction` it is built on,
so the same code serves the left action on S³_q and the right action used
for modules over the Podleś sphere.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .algebra import ONE, ZERO, AlgebraElement, elem
from .errors import PreconditionError, RankMismatch
from .hopf import DAGGER, INDICES, LEFT_ACTION, TangentAction, TangentVector
from .scalar import QScalar

Matrix = list  # list of rows of AlgebraElement

_q = QScalar.q_power(1)
_HALF = QScalar.coerce(1) / 2


# --------------------------------------------------------------------------
# matrix helpers
# --------------------------------------------------------------------------


def as_matrix(rows) -> Matrix:
    return [[elem(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return [[elem(entries[i]) if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(x: Matrix, y: Matrix) -> Matrix:
    inner = len(y)
    out = []
    for row in x:
        if len(row) != inner:
            raise RankMismatch("matrix shapes do not match")
        out.append([sum((row[k] * y[k][j] for k in range(inner)), ZERO) for j in range(len(y[0]))])
    return out


def matsub(x: Matrix, y: Matrix) -> Matrix:
    return [[a - b for a, b in zip(rx, ry)] for rx, ry in zip(x, y)]


def dagger_matrix(x: Matrix) -> Matrix:
    """Conjugate transpose."""
    return [[x[j][i].star() for j in range(len(x))] for i in range(len(x[0]))]


def entrywise(x: Matrix, fn: Callable) -> Matrix:
    return [[fn(v) for v in row] for row in x]


def is_zero_matrix(x: Matrix) -> bool:
    return all(v.is_zero() for row in x for v in row)


# --------------------------------------------------------------------------
# module vectors and hermitian forms
# --------------------------------------------------------------------------


class ModuleVec:
    """``m = e_i m^i`` in a free right module."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        self.coords = tuple(elem(x) for x in coords)

    @classmethod
    def basis(cls, n: int, i: int, f=1) -> "ModuleVec":
        return cls(elem(f) if j == i else ZERO for j in range(n))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "ModuleVec") -> "ModuleVec":
        _same_rank(self.rank, other.rank)
        return ModuleVec(x + y for x, y in zip(self.coords, other.coords))

    def __sub__(self, other: "ModuleVec") -> "ModuleVec":
        _same_rank(self.rank, other.rank)
        return ModuleVec(x - y for x, y in zip(self.coords, other.coords))

    def __neg__(self) -> "ModuleVec":
        return ModuleVec(-x for x in self.coords)

    def __mul__(self, f) -> "ModuleVec":
        f = elem(f)
        return ModuleVec(x * f for x in self.coords)

    def scale(self, lam) -> "ModuleVec":
        return ModuleVec(x.scale(lam) for x in self.coords)

    def map(self, fn: Callable) -> "ModuleVec":
        return ModuleVec(fn(x) for x in self.coords)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleVec) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "ModuleVec(" + ", ".join(str(x) for x in self.coords) + ")"


def _same_rank(n: int, m: int) -> None:
    if n != m:
        raise RankMismatch(f"rank {n} does not match rank {m}")


def apply_matrix(p: Matrix, m: ModuleVec) -> ModuleVec:
    """``(p m)^μ = p^μ_ν m^ν``."""
    _same_rank(len(p), m.rank)
    return ModuleVec(sum((row[j] * m.coords[j] for j in range(m.rank)), ZERO) for row in p)


@dataclass
class HermitianForm:
    """``h(m₁, m₂) = (m₁^i)* h_ij m₂^j`` with a caller-supplied inverse."""

    h: Matrix
    hinv: Matrix
    check: bool = True

    def __post_init__(self):
        self.h = as_matrix(self.h)
        self.hinv = as_matrix(self.hinv)
        n = len(self.h)
        if any(len(r) != n for r in self.h) or len(self.hinv) != n or any(len(r) != n for r in self.hinv):
            raise RankMismatch("h and hinv must be square of the same size")
        if self.check:
            if self.h != dagger_matrix(self.h):
                raise PreconditionError("h is not hermitian: h_ij* != h_ji")
            eye = identity(n)
            if matmul(self.h, self.hinv) != eye or matmul(self.hinv, self.h) != eye:
                raise PreconditionError("hinv is not a two-sided inverse of h")

    @property
    def rank(self) -> int:
        return len(self.h)

    @classmethod
    def delta(cls, n: int) -> "HermitianForm":
        return cls(identity(n), identity(n), check=False)

    @classmethod
    def diagonal_scalar(cls, entries: Sequence) -> "HermitianForm":
        xs = [QScalar.coerce(x) for x in entries]
        return cls(diag(xs), diag([x.inv() for x in xs]))

    def __call__(self, m1: ModuleVec, m2: ModuleVec) -> AlgebraElement:
        return hEval(self, m1, m2)


def hEval(h: HermitianForm, m1: ModuleVec, m2: ModuleVec) -> AlgebraElement:
    _same_rank(h.rank, m1.rank)
    _same_rank(h.rank, m2.rank)
    out = ZERO
    for i, x in enumerate(m1.coords):
        if x.is_zero():
            continue
        xs = x.star()
        for j, y in enumerate(m2.coords):
            if not y.is_zero() and not h.h[i][j].is_zero():
                out = out + xs * h.h[i][j] * y
    return out


# --------------------------------------------------------------------------
# connections
# --------------------------------------------------------------------------


@dataclass
class Connection:
    rank: int
    gamma: dict
    action: TangentAction = field(default=LEFT_ACTION)

    def __post_init__(self):
        g = {}
        for a in INDICES:
            mat = self.gamma.get(a)
            mat = zeros(self.rank) if mat is None else as_matrix(mat)
            if len(mat) != self.rank or any(len(r) != self.rank for r in mat):
                raise RankMismatch(f"Christoffel matrix for {a!r} is not {self.rank}x{self.rank}")
            g[a] = mat
        self.gamma = g

    @classmethod
    def zero(cls, rank: int, action: TangentAction = LEFT_ACTION) -> "Connection":
        return cls(rank, {}, action)

    def christoffel(self, a: str, j: int, i: int) -> AlgebraElement:
        return self.gamma[a][j][i]

    def apply(self, a, m: ModuleVec) -> ModuleVec:
        return nablaApply(self, a, m)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Connection) and self.rank == other.rank
                and self.gamma == other.gamma and self.action.side == other.action.side)


def nablaApply(conn: Connection, a, m: ModuleVec) -> ModuleVec:
    """``∇_{X_a} m``; ``a`` may also be a :class:`TangentVector`."""
    if isinstance(a, TangentVector):
        out = ModuleVec([ZERO] * m.rank)
        for b, lam in a.coeffs.items():
            out = out + nablaApply(conn, b, m).scale(lam)
        return out
    _same_rank(conn.rank, m.rank)
    act = conn.action
    sm = [act.sigma(a, x) for x in m.coords]
    g = conn.gamma[a]
    out = []
    for j in range(conn.rank):
        v = act.X(a, m.coords[j])
        row = g[j]
        for i in range(conn.rank):
            if not row[i].is_zero() and not sm[i].is_zero():
                v = v + row[i] * sm[i]
        out.append(v)
    return ModuleVec(out)


def compat_residuals(nabla: Callable, h: HermitianForm, m1: ModuleVec, m2: ModuleVec,
                     action: TangentAction = LEFT_ACTION) -> dict:
    """``X_a h(m₁,m₂) - h(m₁,∇_a m₂) + λ_a σ_a h(∇_{a†} m₁, m₂)`` for each ``a``.

    ``nabla(a, m)`` is any covariant derivative; ``λ_a`` is 1 for the left
    action.
    """
    hm = hEval(h, m1, m2)
    out = {}
    for a in INDICES:
        r = action.X(a, hm) - hEval(h, m1, nabla(a, m2))
        twisted = action.sigma(a, hEval(h, nabla(DAGGER[a], m1), m2))
        out[a] = r + twisted.scale(action.star_twist[a])
    return out


def checkCompat(conn: Connection, h: HermitianForm, m1: ModuleVec, m2: ModuleVec) -> tuple:
    res = compat_residuals(lambda a, m: nablaApply(conn, a, m), h, m1, m2, conn.action)
    return all(r.is_zero() for r in res.values()), res


def basis_pairs(n: int) -> list:
    return [(ModuleVec.basis(n, i), ModuleVec.basis(n, j)) for i in range(n) for j in range(n)]


def checkCompatBasis(conn: Connection, h: HermitianForm) -> tuple:
    bad = {}
    for i, (m1, m2) in enumerate(basis_pairs(conn.rank)):
        ok, res = checkCompat(conn, h, m1, m2)
        if not ok:
            bad[divmod(i, conn.rank)] = res
    return not bad, bad


@dataclass
class ConnParams:
    """Parameters ``γ_ij`` (free) and ``ρ_ij`` with ``ρ_ij* = ρ_ji``."""

    gamma: Matrix
    rho: Matrix

    def __post_init__(self):
        self.gamma = as_matrix(self.gamma)
        self.rho = as_matrix(self.rho)

    @classmethod
    def zero(cls, n: int) -> "ConnParams":
        return cls(zeros(n), zeros(n))

    def rho_hermitian(self) -> bool:
        return self.rho == dagger_matrix(self.rho)


def christoffelFromForm(h: HermitianForm, p: ConnParams, action: TangentAction = LEFT_ACTION) -> Connection:
    """Connection compatible with ``h`` for the parameters ``p``.

    ``Γ_{a,kj}`` is ``½X_a(h_kj)`` plus ``K(γ_kj)``, ``λ₋K(γ_jk*)`` or
    ``K²(ρ_kj)``; then ``Γ^i_{aj} = h^{ik} Γ_{a,kj}``.  For the left action
    ``λ₋ = 1``; acting from the right the star law introduces ``λ₋ = q⁻²``.
    """
    if not p.rho_hermitian():
        raise PreconditionError("rho must satisfy rho_ij* = rho_ji")
    n = h.rank
    _same_rank(n, len(p.gamma))
    lam_minus = action.star_twist["-"]
    low = {}
    for a in INDICES:
        mat = []
        for k in range(n):
            row = []
            for j in range(n):
                v = action.X(a, h.h[k][j]).scale(_HALF)
                if a == "+":
                    v = v + action.K(p.gamma[k][j])
                elif a == "-":
                    v = v + action.K(p.gamma[j][k].star()).scale(lam_minus)
                else:
                    v = v + action.K(p.rho[k][j], 2)
                row.append(v)
            mat.append(row)
        low[a] = mat
    return Connection(n, {a: matmul(h.hinv, low[a]) for a in INDICES}, action)


def lowered(conn: Connection, h: HermitianForm) -> dict:
    """``Γ_{a,ij} = h_ik Γ^k_{aj}``."""
    return {a: matmul(h.h, conn.gamma[a]) for a in INDICES}


def paramsFromConnection(conn: Connection, h: HermitianForm) -> ConnParams:
    """Recover ``(γ, ρ)`` from a compatible connection by reading the Ansatz backwards."""
    act = conn.action
    low = lowered(conn, h)
    n = h.rank
    gamma = [[act.K(low["+"][i][j] - act.X("+", h.h[i][j]).scale(_HALF), -1) for j in range(n)]
             for i in range(n)]
    rho = [[act.K(low["z"][i][j] - act.X("z", h.h[i][j]).scale(_HALF), -2) for j in range(n)]
           for i in range(n)]
    return ConnParams(gamma, rho)


# --------------------------------------------------------------------------
# torsion and Levi-Civita connections on Ω¹
# --------------------------------------------------------------------------


def _cov(conn: Connection, a: str, b: str) -> ModuleVec:
    # ∇_a ω_b
    return nablaApply(conn, a, ModuleVec.basis(3, INDICES.index(b)))


def checkTorsionFree(conn: Connection) -> tuple:
    """Residuals of the three torsion equations on the basis ``(ω₊, ω₋, ω_z)``."""
    if conn.rank != 3:
        raise RankMismatch("torsion is defined on the rank-3 module of one-forms")
    q2 = _q * _q
    w = {b: ModuleVec.basis(3, INDICES.index(b)) for b in INDICES}
    res = [
        _cov(conn, "-", "+") - _cov(conn, "+", "-").scale(q2) - w["z"],
        _cov(conn, "z", "-").scale(q2) - _cov(conn, "-", "z").scale(q2.inv()) - w["-"].scale(1 + q2),
        _cov(conn, "+", "z").scale(q2) - _cov(conn, "z", "+").scale(q2.inv()) - w["+"].scale(1 + q2),
    ]
    return all(r.is_zero() for r in res), res


_P, _M, _Z = 0, 1, 2


def _h_of(h) -> Matrix:
    return h.h if isinstance(h, HermitianForm) else as_matrix(h)


def lcCondition(h) -> tuple:
    """Residual of the existence condition for a Levi-Civita connection."""
    from .hopf import X, sigma

    m = _h_of(h)
    if len(m) != 3:
        raise RankMismatch("the Levi-Civita condition needs a rank-3 form")
    q2 = _q * _q
    lhs = X("z", m[_P][_P] - m[_M][_M].scale(q2))
    rhs = (sigma("+", X("-", m[_Z][_P]))
           - X("-", m[_M][_Z]).scale(q2)
           - sigma("+", X("+", m[_Z][_M])).scale(q2)
           + X("+", m[_P][_Z]))
    res = lhs - rhs
    return res.is_zero(), res


LC_FREE = ("g+-", "g-+", "gzz", "r+-", "r--", "rzz")


def _abc(h: Matrix) -> tuple:
    from .hopf import X, k_power

    q2 = _q * _q
    A, B, C = {}, {}, {}
    for a, ia in zip(INDICES, (_P, _M, _Z)):
        A[a] = k_power(h[ia][_Z] - X("-", h[ia][_P]).scale(_HALF) + X("+", h[ia][_M]).scale(q2 * _HALF), -1)
        B[a] = k_power(h[ia][_M].scale(1 + q2) - X("z", h[ia][_M]).scale(q2 * _HALF)
                       + X("-", h[ia][_Z]).scale(q2.inv() * _HALF), -1)
        C[a] = k_power(h[ia][_P].scale(1 + q2) - X("+", h[ia][_Z]).scale(q2 * _HALF)
                       + X("z", h[ia][_P]).scale(q2.inv() * _HALF), -1)
    return A, B, C


def lcParams(h: HermitianForm, free: dict | None = None) -> ConnParams:
    """The parameters ``(γ, ρ)`` of the Levi-Civita solution for ``h``.

    ``free`` may set ``g+-, g-+, gzz`` (any elements), ``r+-`` (any) and the
    hermitian ``r--, rzz``; missing entries are zero.
    """
    from .hopf import k_power

    free = {k: elem(v) for k, v in (free or {}).items()}
    unknown = set(free) - set(LC_FREE)
    if unknown:
        raise PreconditionError(f"unknown free parameters {sorted(unknown)}")
    ok, res = lcCondition(h)
    if not ok:
        raise PreconditionError(f"the Levi-Civita condition fails; residual {res}")
    for key in ("r--", "rzz"):
        if key in free and free[key].star() != free[key]:
            raise PreconditionError(f"{key} must be hermitian")
    q = _q
    q2, q4 = q ** 2, q ** 4
    A, B, C = _abc(h.h)
    K = lambda f, j=1: k_power(f, j)  # noqa: E731
    g = {k: free.get(k, ZERO) for k in LC_FREE}
    gpm, gmp, gzz, rpm, rmm, rzz = (g[k] for k in LC_FREE)
    rmp = rpm.star()

    gamma = zeros(3)
    rho = zeros(3)
    gamma[_P][_M], gamma[_M][_P], gamma[_Z][_Z] = gpm, gmp, gzz
    rho[_P][_M], rho[_M][_P], rho[_M][_M], rho[_Z][_Z] = rpm, rmp, rmm, rzz

    gamma[_P][_P] = A["+"].star() + gpm.star().scale(q2)
    gamma[_M][_M] = gpm.star().scale(q2.inv()) - A["-"].scale(q2.inv())
    gamma[_Z][_P] = K(rmp, -1).scale(q4) - B["+"].star().scale(q2)
    rho[_Z][_M] = K(B["z"], -1).scale(q2.inv()) + K(gzz.star(), -1).scale(q4.inv())
    gamma[_M][_Z] = C["-"].scale(q2.inv()) + K(rmp).scale(q4.inv())
    rho[_Z][_P] = K(gzz, -1).scale(q4) - K(C["z"], -1).scale(q2)
    gamma[_Z][_M] = K(rmm, -1).scale(q4) - B["-"].star().scale(q2)
    rho[_P][_P] = (rmm.scale(q ** 10) + K(A["z"]).scale(q4)
                   - K(B["-"].star()).scale(q ** 8) - K(C["+"].star()).scale(q2))
    gamma[_P][_Z] = C["+"].scale(q2.inv()) + K(rho[_P][_P]).scale(q4.inv())
    rho[_M][_Z] = rho[_Z][_M].star()
    rho[_P][_Z] = rho[_Z][_P].star()
    if rho[_P][_P].star() != rho[_P][_P]:
        raise AssertionError("rho_++ is not hermitian although the condition holds")
    return ConnParams(gamma, rho)


def lcSolve(h: HermitianForm, free: dict | None = None) -> Connection:
    """A torsion-free connection on Ω¹ compatible with ``h``."""
    if h.rank != 3:
        raise RankMismatch("lcSolve needs a rank-3 form")
    return christoffelFromForm(h, lcParams(h, free))


def _inverse_of(x, xinv) -> AlgebraElement:
    x = elem(x)
    if xinv is None:
        if not x.is_scalar() or x.is_zero():
            raise PreconditionError("an inverse must be supplied for non-scalar entries")
        return AlgebraElement.scalar(x.scalar_value().inv())
    xinv = elem(xinv)
    if x * xinv != ONE or xinv * x != ONE:
        raise PreconditionError("supplied inverse is wrong")
    return xinv


def diagonalMetric(h, hz, hinv=None, hzinv=None) -> HermitianForm:
    """``h₋₋ = h``, ``h₊₊ = q²h``, ``h_zz = h_z``, off-diagonal zero."""
    h, hz = elem(h), elem(hz)
    hi, hzi = _inverse_of(h, hinv), _inverse_of(hz, hzinv)
    q2 = _q * _q
    return HermitianForm(diag([h.scale(q2), h, hz]), diag([hi.scale(q2.inv()), hi, hzi]))


def diagonalLC(h, hz, hinv=None, hzinv=None) -> Connection:
    """The explicit Levi-Civita connection for a diagonal metric, formula by formula."""
    from .hopf import X, k_power

    h, hz = elem(h), elem(hz)
    hi, hzi = _inverse_of(h, hinv), _inverse_of(hz, hzinv)
    q = _q
    q2, q4, q6, q8 = q ** 2, q ** 4, q ** 6, q ** 8
    u = (1 - q2.inv()).inv()
    half = _HALF
    K = k_power
    g = {a: zeros(3) for a in INDICES}

    def put(a, b, c, v):
        # ∇_a ω_b has ω_c-coefficient v
        g[a][INDICES.index(c)][INDICES.index(b)] = v

    put("+", "+", "+", hi * X("+", h))
    put("+", "-", "z", (hzi * (K(h, 2).scale(1 - half * q4) - K(h, -2).scale(half * q4))).scale(u))
    put("+", "z", "+", (hi * (K(hz, 2) + (h.scale(q2 - half * q6) - K(h, 4).scale(half * q6)).scale(u))).scale(q2.inv()))
    put("+", "z", "z", (hzi * X("+", hz)).scale(half))
    put("-", "+", "z", ONE + (hzi * (K(h, 2).scale(q2 - half * q6) - K(h, -2).scale(half * q6))).scale(u))
    put("-", "-", "-", hi * X("-", h))
    put("-", "z", "-", (hi * (h.scale(1 - half * q4) - K(h, 4).scale(half * q4))).scale(u))
    put("-", "z", "z", (hzi * X("-", hz)).scale(half))
    put("z", "+", "z", (hzi * X("+", hz)).scale(half * q4))
    put("z", "+", "+", (hi * K(hz, 2)).scale(q2) + (hi * (h.scale(1 - half * q8) - K(h, 4).scale(half * q8))).scale(u))
    put("z", "-", "z", (hzi * X("-", hz)).scale(half * q4.inv()))
    put("z", "-", "-", (hi * (h.scale(half) - K(h, 4).scale(half))).scale(u))
    put("z", "z", "z", (hzi * X("z", hz)).scale(half))
    put("z", "z", "+", -(hi * K(X("-", hz), 2)).scale(half * q2))
    put("z", "z", "-", -(hi * K(X("+", hz), 2)).scale(half * q4.inv()))
    return Connection(3, g)


# --------------------------------------------------------------------------
# projections and differences
# --------------------------------------------------------------------------


def is_idempotent(p: Matrix) -> bool:
    return matmul(p, p) == as_matrix(p)


@dataclass
class InducedConnection:
    """``p ∘ ∇`` on the image of an idempotent ``p``."""

    p: Matrix
    base: Connection

    def __post_init__(self):
        self.p = as_matrix(self.p)
        _same_rank(len(self.p), self.base.rank)
        if not is_idempotent(self.p):
            raise PreconditionError("p is not idempotent")

    @property
    def rank(self) -> int:
        return self.base.rank

    @property
    def action(self) -> TangentAction:
        return self.base.action

    def project(self, m: ModuleVec) -> ModuleVec:
        return apply_matrix(self.p, m)

    def apply(self, a, m: ModuleVec) -> ModuleVec:
        return self.project(nablaApply(self.base, a, m))

    def generators(self) -> list:
        """``p(e_μ)``, the columns of ``p``."""
        n = self.rank
        return [ModuleVec(self.p[j][i] for j in range(n)) for i in range(n)]


def induce(p: Matrix, conn: Connection) -> InducedConnection:
    return InducedConnection(p, conn)


def leibniz_residual(nabla: Callable, action: TangentAction, a: str, m: ModuleVec, f) -> ModuleVec:
    """``∇_a(mf) - (∇_a m)σ_a(f) - m X_a(f)``."""
    f = elem(f)
    return nabla(a, m * f) - nabla(a, m) * action.sigma(a, f) - m * action.X(a, f)


def checkInducedLeibniz(ind: InducedConnection, fs: Iterable) -> tuple:
    bad = []
    fs = list(fs)
    for m in ind.generators():
        for f in fs:
            for a in INDICES:
                r = leibniz_residual(ind.apply, ind.action, a, m, f)
                if not r.is_zero():
                    bad.append((a, m, f, r))
    return not bad, bad


DEFAULT_TEST_FUNCTIONS = None


def default_test_functions() -> list:
    """Generators and a few degree-2 monomials."""
    from .algebra import A, AS, C, CS

    return [ONE, A, AS, C, CS, A * C, C * CS, AS * CS]


def checkOrthogonalCompat(p: Matrix, conn: Connection, h: HermitianForm, fs: Iterable | None = None) -> tuple:
    """Orthogonality of ``p`` for ``h``, then compatibility of ``p∘∇`` on ``p(e_μ)·g``."""
    p = as_matrix(p)
    n = h.rank
    if not is_idempotent(p):
        raise PreconditionError("p is not idempotent")
    residuals = []
    for i in range(n):
        for j in range(n):
            ei, ej = ModuleVec.basis(n, i), ModuleVec.basis(n, j)
            r = hEval(h, apply_matrix(p, ei), ej) - hEval(h, ei, apply_matrix(p, ej))
            if not r.is_zero():
                residuals.append(("orthogonality", i, j, r))
    if residuals:
        return False, residuals
    ind = induce(p, conn)
    fs = default_test_functions() if fs is None else [elem(f) for f in fs]
    vecs = [m * f for m in ind.generators() for f in fs]
    gens = ind.generators()
    for m1 in gens:
        for m2 in vecs:
            for pair in ((m1, m2), (m2, m1)):
                res = compat_residuals(ind.apply, h, *pair, conn.action)
                for a, r in res.items():
                    if not r.is_zero():
                        residuals.append(("compat", a, pair, r))
    return not residuals, residuals


@dataclass
class ConnectionDifference:
    """``α(X, m) = ∇¹_X m - ∇²_X m``; right-linear in ``m``."""

    first: Connection
    second: Connection

    def __post_init__(self):
        _same_rank(self.first.rank, self.second.rank)

    def __call__(self, x, m: ModuleVec) -> ModuleVec:
        return nablaApply(self.first, x, m) - nablaApply(self.second, x, m)

    def matrix(self, a: str) -> Matrix:
        return matsub(self.first.gamma[a], self.second.gamma[a])


def connDifference(conn1: Connection, conn2: Connection) -> ConnectionDifference:
    return ConnectionDifference(conn1, conn2)


# --------------------------------------------------------------------------
# JSON
# --------------------------------------------------------------------------


def _matrix_to_json(m: Matrix) -> list:
    return [[str(x) for x in row] for row in m]


def _matrix_from_json(rows) -> Matrix:
    from .parser import parse_element

    return [[parse_element(x) if isinstance(x, str) else elem(x) for x in row] for row in rows]


def connection_to_json(conn: Connection) -> dict:
    return {
        "schema": 1,
        "rank": conn.rank,
        "side": conn.action.side,
        "gamma": {a: _matrix_to_json(conn.gamma[a]) for a in INDICES},
    }


def connection_from_json(data: dict) -> Connection:
    from .hopf import RIGHT_ACTION

    action = RIGHT_ACTION if data.get("side") == "right" else LEFT_ACTION
    gamma = {a: _matrix_from_json(m) for a, m in data.get("gamma", {}).items()}
    return Connection(int(data["rank"]), gamma, action)


def form_to_json(h: HermitianForm) -> dict:
    return {"schema": 1, "h": _matrix_to_json(h.h), "hinv": _matrix_to_json(h.hinv)}


def form_from_json(data: dict) -> HermitianForm:
    return HermitianForm(_matrix_from_json(data["h"]), _matrix_from_json(data["hinv"]))


def params_from_json(data: dict) -> dict:
    from .parser import parse_element

    return {k: parse_element(v) if isinstance(v, str) else elem(v) for k, v in data.items() if k != "schema"}
