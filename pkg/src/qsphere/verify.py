"""Verification suites behind ``qsphere verify`` and the acceptance tests.

Each ``criterionN`` function returns a :class:`Report` whose cases are exact
checks (residual zero in the symbolic kernel).  Random inputs come from a
seeded :class:`random.Random`, so every run checks the same instances.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import calculus, connection, framework, hopf, podles
from .algebra import A, AS, C, CS, ONE, ZERO, AlgebraElement, elem, relations
from .calculus import OMEGA, OneForm, d, smulL
from .connection import (
    ConnParams,
    HermitianForm,
    ModuleVec,
    basis_pairs,
    checkCompat,
    checkCompatBasis,
    checkTorsionFree,
    christoffelFromForm,
    dagger_matrix,
    diag,
    diagonalLC,
    diagonalMetric,
    lcCondition,
    lcSolve,
    matmul,
    paramsFromConnection,
)
from .hopf import DAGGER, INDICES, LEFT, LEFT_ACTION, RIGHT, RIGHT_ACTION
from .scalar import QScalar, qint

_q = QScalar.q_power(1)
SEED = 20240917


@dataclass
class Case:
    id: str
    status: str
    residual: str | None
    millis: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "residual": self.residual,
                "millis": round(self.millis, 3)}


@dataclass
class Report:
    suite: str
    cases: list = field(default_factory=list)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.id)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def millis(self) -> float:
        return sum(c.millis for c in self.cases)

    def failures(self) -> list:
        return [c for c in self.cases if not c.passed]

    def to_dict(self) -> dict:
        return {"schema": 1, "suite": self.suite, "status": "pass" if self.passed else "fail",
                "cases": [c.to_dict() for c in self.cases]}

    def lines(self, verbose: bool = False) -> list:
        out = []
        for c in self.cases:
            if verbose or not c.passed:
                tail = "" if c.residual is None else f"  residual: {c.residual}"
                out.append(f"  {c.status.upper():4} {c.id} ({c.millis:.1f} ms){tail}")
        npass = sum(c.passed for c in self.cases)
        out.append(f"{self.suite}: {npass}/{len(self.cases)} cases pass, "
                   f"{'PASS' if self.passed else 'FAIL'} ({self.millis / 1000:.2f} s)")
        return out


def merge(suite: str, reports: Iterable[Report]) -> Report:
    cases = []
    for r in reports:
        cases.extend(Case(f"{r.suite}/{c.id}", c.status, c.residual, c.millis) for c in r.cases)
    return Report(suite, cases)


def _residual_text(res) -> str | None:
    if res is None:
        return None
    if isinstance(res, (list, tuple)):
        return "; ".join(str(r) for r in res)
    if isinstance(res, dict):
        return "; ".join(f"{k}: {v}" for k, v in res.items())
    return str(res)


def run_case(case_id: str, fn: Callable[[], tuple]) -> Case:
    """``fn`` returns ``(ok, residual)``; exceptions count as failures."""
    t0 = time.perf_counter()
    try:
        ok, res = fn()
        text = None if ok else _residual_text(res)
    except Exception as exc:  # a crashing check is a failing check
        ok, text = False, f"{type(exc).__name__}: {exc}"
    return Case(case_id, "pass" if ok else "fail", text, (time.perf_counter() - t0) * 1000)


def _zero(x) -> tuple:
    """``(ok, x)`` for an element, one-form, module vector or a sequence of them."""
    if isinstance(x, (list, tuple)):
        bad = [y for y in x if not y.is_zero()]
        return not bad, bad
    return x.is_zero(), x


def _all_zero(items: Iterable) -> tuple:
    for label, x in items:
        ok, _ = _zero(x)
        if not ok:
            return False, f"{label}: {_residual_text(x)}"
    return True, None


# --------------------------------------------------------------------------
# random inputs
# --------------------------------------------------------------------------

_COEFFS = (
    QScalar.coerce(1), QScalar.coerce(-1), QScalar.coerce(2), QScalar.coerce(-3),
    _q, _q.inv(), QScalar.s_power(1), QScalar.s_power(-3), 1 + _q, (1 - _q * _q) / (1 + _q * _q),
)


def random_monomial(rng: random.Random, max_degree: int) -> tuple:
    deg = rng.randint(0, max_degree)
    k = rng.randint(-deg, deg)
    m = rng.randint(0, deg - abs(k))
    return (k, m, rng.randint(0, deg - abs(k) - m))


def random_element(rng: random.Random, max_degree: int = 3, max_terms: int = 3) -> AlgebraElement:
    out = ZERO
    for _ in range(rng.randint(1, max_terms)):
        k, m, n = random_monomial(rng, max_degree)
        out = out + AlgebraElement.monomial(k, m, n, rng.choice(_COEFFS))
    return out


def random_hermitian(rng: random.Random, max_degree: int = 2) -> AlgebraElement:
    f = random_element(rng, max_degree, 2)
    return f + f.star()


def random_vec(rng: random.Random, rank: int, max_degree: int = 2) -> ModuleVec:
    return ModuleVec(random_element(rng, max_degree, 2) for _ in range(rank))


GENERATORS = (("a", A), ("as", AS), ("c", C), ("cs", CS))


def all_monomials(max_degree: int) -> list:
    out = []
    for deg in range(max_degree + 1):
        for k in range(-deg, deg + 1):
            for m in range(deg - abs(k) + 1):
                out.append(AlgebraElement.monomial(k, m, deg - abs(k) - m))
    return out


# --------------------------------------------------------------------------
# 1. algebra
# --------------------------------------------------------------------------


def criterion1(n_random: int = 500, seed: int = SEED) -> Report:
    cases = [run_case(f"relation/{name}", lambda r=r: _zero(r)) for name, r in relations().items()]
    rng = random.Random(seed)
    triples = [tuple(random_element(rng, 4) for _ in range(3)) for _ in range(n_random)]
    pairs = [(random_element(rng, 4), random_element(rng, 4)) for _ in range(n_random)]

    def assoc():
        return _all_zero((f"triple {i}", (f * g) * h - f * (g * h)) for i, (f, g, h) in enumerate(triples))

    def star():
        return _all_zero((f"pair {i}", (f * g).star() - g.star() * f.star()) for i, (f, g) in enumerate(pairs))

    def involution():
        return _all_zero((f"element {i}", f.star().star() - f) for i, (f, _) in enumerate(pairs))

    cases += [
        run_case(f"associativity/random-{n_random}", assoc),
        run_case(f"star-antihomomorphism/random-{n_random}", star),
        run_case(f"star-involution/random-{n_random}", involution),
    ]
    return Report("algebra", cases)


# --------------------------------------------------------------------------
# 2. action tables
# --------------------------------------------------------------------------


def _sp(e: int) -> QScalar:
    return QScalar.s_power(e)


def action_table(n: int) -> list:
    """Rows ``(id, lhs, rhs)`` of the left and right action tables for exponent ``n``.

    Powers ``q^{k/2}`` are written as ``s^k``.  The right-action row for
    ``(a*)^n ◁ E`` uses the exponent ``(3 - n)/2``.
    """
    an, asn, cn, csn = A ** n, AS ** n, C ** n, CS ** n
    qn = qint(n)
    L = lambda h, f: hopf.act_left(h, f)  # noqa: E731
    R = lambda f, h: hopf.act_right(f, h)  # noqa: E731
    rows = []
    for sgn, h in ((1, "K"), (-1, "Kinv")):
        rows += [
            (f"left/{h} a^n", L(h, an), an.scale(_sp(-sgn * n))),
            (f"left/{h} c^n", L(h, cn), cn.scale(_sp(-sgn * n))),
            (f"left/{h} as^n", L(h, asn), asn.scale(_sp(sgn * n))),
            (f"left/{h} cs^n", L(h, csn), csn.scale(_sp(sgn * n))),
            (f"right/a^n {h}", R(an, h), an.scale(_sp(-sgn * n))),
            (f"right/as^n {h}", R(asn, h), asn.scale(_sp(sgn * n))),
            (f"right/c^n {h}", R(cn, h), cn.scale(_sp(sgn * n))),
            (f"right/cs^n {h}", R(csn, h), csn.scale(_sp(-sgn * n))),
        ]
    rows += [
        ("left/E a^n", L("E", an), (A ** (n - 1) * CS).scale(-_sp(3 - n) * qn)),
        ("left/E c^n", L("E", cn), (C ** (n - 1) * AS).scale(_sp(1 - n) * qn)),
        ("left/E as^n", L("E", asn), ZERO),
        ("left/E cs^n", L("E", csn), ZERO),
        ("left/F a^n", L("F", an), ZERO),
        ("left/F c^n", L("F", cn), ZERO),
        ("left/F as^n", L("F", asn), (C * AS ** (n - 1)).scale(_sp(1 - n) * qn)),
        ("left/F cs^n", L("F", csn), (A * CS ** (n - 1)).scale(-_sp(-1 - n) * qn)),
        ("right/a^n F", R(an, "F"), (C * A ** (n - 1)).scale(_sp(n - 1) * qn)),
        ("right/as^n F", R(asn, "F"), ZERO),
        ("right/c^n F", R(cn, "F"), ZERO),
        ("right/cs^n F", R(csn, "F"), (AS * CS ** (n - 1)).scale(-_sp(n - 3) * qn)),
        ("right/a^n E", R(an, "E"), ZERO),
        ("right/as^n E", R(asn, "E"), (CS * AS ** (n - 1)).scale(-_sp(3 - n) * qn)),
        ("right/c^n E", R(cn, "E"), (C ** (n - 1) * A).scale(_sp(n - 1) * qn)),
        ("right/cs^n E", R(csn, "E"), ZERO),
    ]
    return rows


def criterion2(nmax: int = 4) -> Report:
    cases = []
    for n in range(1, nmax + 1):
        t0 = time.perf_counter()
        rows = action_table(n)
        per_row = (time.perf_counter() - t0) * 1000 / len(rows)
        for rid, lhs, rhs in rows:
            c = run_case(f"table/n={n}/{rid}", lambda lhs=lhs, rhs=rhs: _zero(lhs - rhs))
            c.millis += per_row
            cases.append(c)
    return Report("hopf-tables", cases)


# --------------------------------------------------------------------------
# 3. twisted derivations
# --------------------------------------------------------------------------


def leibniz_residual(a: str, f, g, side: str = LEFT) -> AlgebraElement:
    f, g = elem(f), elem(g)
    return hopf.X(a, f * g, side) - f * hopf.X(a, g, side) - hopf.X(a, f, side) * hopf.sigma(a, g, 1, side)


def star_residual(a: str, f, action=LEFT_ACTION) -> AlgebraElement:
    """``X_a(f*) + λ_a σ_a((X_{a†} f)*)``."""
    f = elem(f)
    return action.X(a, f.star()) + action.sigma(a, action.X(DAGGER[a], f).star()).scale(action.star_twist[a])


def commutation_residuals(f, side: str = LEFT) -> dict:
    """The three q-commutation relations applied to ``f``.

    For the right action ``f ◁ (XY) = (f ◁ X) ◁ Y``, so the words are
    composed in the opposite order.
    """
    q2 = _q * _q
    if side == LEFT:
        XY = lambda x, y, f: hopf.X(x, hopf.X(y, f))  # noqa: E731
    else:
        XY = lambda x, y, f: hopf.X(y, hopf.X(x, f, RIGHT), RIGHT)  # noqa: E731
    Xs = lambda a, f: hopf.X(a, f, side)  # noqa: E731
    return {
        "Xmp": XY("-", "+", f) - XY("+", "-", f).scale(q2) - Xs("z", f),
        "Xzm": XY("z", "-", f).scale(q2) - XY("-", "z", f).scale(q2.inv()) - Xs("-", f).scale(1 + q2),
        "Xzp": XY("+", "z", f).scale(q2) - XY("z", "+", f).scale(q2.inv()) - Xs("+", f).scale(1 + q2),
    }


def criterion3(n_random: int = 200, max_degree: int = 6, seed: int = SEED) -> Report:
    rng = random.Random(seed + 3)
    pairs = [(random_element(rng, 3), random_element(rng, 3)) for _ in range(n_random)]
    singles = [random_element(rng, 4) for _ in range(n_random)]
    monos = all_monomials(max_degree)
    cases = []
    for side in (LEFT, RIGHT):
        for a in INDICES:
            cases.append(run_case(f"leibniz/{side}/X{a}/generator-pairs", lambda a=a, side=side: _all_zero(
                (f"{n1} {n2}", leibniz_residual(a, f, g, side)) for n1, f in GENERATORS for n2, g in GENERATORS)))
            cases.append(run_case(f"leibniz/{side}/X{a}/random-{n_random}", lambda a=a, side=side: _all_zero(
                (f"pair {i}", leibniz_residual(a, f, g, side)) for i, (f, g) in enumerate(pairs))))
        for rel in ("Xmp", "Xzm", "Xzp"):
            cases.append(run_case(f"commutation/{side}/{rel}/degree<={max_degree}", lambda rel=rel, side=side: _all_zero(
                (str(f), commutation_residuals(f, side)[rel]) for f in monos)))
        action = LEFT_ACTION if side == LEFT else RIGHT_ACTION
        for a in INDICES:
            cases.append(run_case(f"star/{side}/X{a}/random-{n_random}", lambda a=a, action=action: _all_zero(
                (f"element {i}", star_residual(a, f, action)) for i, f in enumerate(singles))))
    cases.append(run_case(f"left-right-commute/degree<=4", lambda: _all_zero(
        (f"{a}{b} {f}", hopf.X(a, hopf.X(b, f, RIGHT)) - hopf.X(b, hopf.X(a, f), RIGHT))
        for f in all_monomials(4) for a in INDICES for b in INDICES)))
    return Report("hopf-derivations", cases)


# --------------------------------------------------------------------------
# 4. calculus
# --------------------------------------------------------------------------


def d_leibniz_residual(f, g) -> OneForm:
    f, g = elem(f), elem(g)
    return d(f * g) - smulL(f, d(g)) - d(f) * g


def criterion4(n_random: int = 200, seed: int = SEED) -> Report:
    rng = random.Random(seed + 4)
    pairs = [(random_element(rng, 3), random_element(rng, 3)) for _ in range(n_random)]
    cases = [run_case(f"leibniz-d/random-{n_random}", lambda: _all_zero(
        (f"pair {i}", d_leibniz_residual(f, g)) for i, (f, g) in enumerate(pairs)))]
    for name, shown in podles.dB().items():
        cases.append(run_case(f"dB/{name}", lambda name=name, shown=shown: _zero(d(podles.GEN_BY_NAME[name]) - shown)))
    for a, w in podles.omega_reconstruction().items():
        cases.append(run_case(f"omega-inversion/w{a}", lambda a=a, w=w: _zero(w - OMEGA[a])))
    for a, w in calculus.invariant_forms_from_generators().items():
        cases.append(run_case(f"omega-from-generators/w{a}", lambda a=a, w=w: _zero(w - OMEGA[a])))
    cases.append(run_case("d-of-scalar", lambda: _zero(d(elem(_q + 3)))))
    return Report("calculus", cases)


# --------------------------------------------------------------------------
# 5. compatible connections from (h, γ, ρ)
# --------------------------------------------------------------------------

# unitary U = [[a, -q c*], [c, a*]]: U†U = UU† = 1
_U = [[A, CS.scale(-_q)], [C, AS]]


def _rotated_block(d1: QScalar, d2: QScalar) -> tuple:
    ud = dagger_matrix(_U)
    h = matmul(matmul(ud, diag([d1, d2])), _U)
    hinv = matmul(matmul(ud, diag([d1.inv(), d2.inv()])), _U)
    return h, hinv


_POSITIVE = (QScalar.coerce(1), QScalar.coerce(2), _q, _q ** 2, _q ** -1, 1 + _q ** 2, QScalar.coerce(3) / 2)


def random_form(rng: random.Random, rank: int) -> HermitianForm:
    """Diagonal scalar forms, or a block ``U†DU`` with non-scalar entries."""
    scalars = [rng.choice(_POSITIVE) for _ in range(rank)]
    if rank >= 2 and rng.random() < 0.5:
        blk, blkinv = _rotated_block(scalars[0], scalars[1])
        h = [[ZERO] * rank for _ in range(rank)]
        hinv = [[ZERO] * rank for _ in range(rank)]
        for i in range(2):
            for j in range(2):
                h[i][j], hinv[i][j] = blk[i][j], blkinv[i][j]
        for i in range(2, rank):
            h[i][i], hinv[i][i] = elem(scalars[i]), elem(scalars[i].inv())
        return HermitianForm(h, hinv)
    return HermitianForm.diagonal_scalar(scalars)


def random_params(rng: random.Random, rank: int) -> ConnParams:
    gamma = [[random_element(rng, 2, 2) for _ in range(rank)] for _ in range(rank)]
    r = [[random_element(rng, 2, 2) for _ in range(rank)] for _ in range(rank)]
    rho = [[r[i][j] + r[j][i].star() for j in range(rank)] for i in range(rank)]
    return ConnParams(gamma, rho)


def roundtrip_check(h: HermitianForm, p: ConnParams, vecs: list, action=LEFT_ACTION) -> tuple:
    conn = christoffelFromForm(h, p, action)
    ok, bad = checkCompatBasis(conn, h)
    if not ok:
        return False, f"basis pairs {sorted(bad)}"
    for i, (m1, m2) in enumerate(vecs):
        ok, res = checkCompat(conn, h, m1, m2)
        if not ok:
            return False, f"random pair {i}: {_residual_text(res)}"
    back = paramsFromConnection(conn, h)
    if back.gamma != p.gamma or back.rho != p.rho:
        return False, "parameters not recovered from the connection"
    return True, None


def criterion5(n_cases: int = 20, n_vecs: int = 10, seed: int = SEED) -> Report:
    rng = random.Random(seed + 5)
    cases = []
    for k in range(n_cases):
        rank = 1 + k % 3
        h = random_form(rng, rank)
        p = random_params(rng, rank)
        vecs = [(random_vec(rng, rank), random_vec(rng, rank)) for _ in range(n_vecs)]
        cases.append(run_case(f"roundtrip/{k + 1:02d}/rank{rank}",
                              lambda h=h, p=p, vecs=vecs: roundtrip_check(h, p, vecs)))
    return Report("connection-compat", cases)


# --------------------------------------------------------------------------
# 6. Levi-Civita
# --------------------------------------------------------------------------


def _lc_both(conn, h) -> tuple:
    ok_t, res_t = checkTorsionFree(conn)
    if not ok_t:
        return False, f"torsion: {_residual_text(res_t)}"
    ok_c, bad = checkCompatBasis(conn, h)
    if not ok_c:
        return False, f"compatibility fails on basis pairs {sorted(bad)}"
    return True, None


def random_free(rng: random.Random) -> dict:
    return {
        "g+-": random_element(rng, 2, 2), "g-+": random_element(rng, 2, 2),
        "gzz": random_element(rng, 2, 2), "r+-": random_element(rng, 2, 2),
        "r--": random_hermitian(rng), "rzz": random_hermitian(rng),
    }


def zero_connection_torsion() -> tuple:
    ok, res = checkTorsionFree(connection.Connection.zero(3))
    expected = -ModuleVec.basis(3, INDICES.index("z"))
    if ok:
        return False, "the zero connection is reported torsion free"
    return res[0] == expected, res[0]


def criterion6(n_random: int = 10, seed: int = SEED) -> Report:
    rng = random.Random(seed + 6)
    q2 = _q * _q
    f, g = ONE + podles.B0, (A + AS).scale(2) + 5
    cases = [
        run_case("lcCondition/diagonal h++ = q^2 h--", lambda: lcCondition(diag([f.scale(q2), f, g]))),
        run_case("lcCondition/diagonal scalar", lambda: lcCondition(diag([q2 * 3, QScalar.coerce(3), _q]))),
        run_case("lcCondition/off-diagonal h+z = a, hz+ = as is false", lambda: (
            not lcCondition([[ONE, ZERO, A], [ZERO, ONE, ZERO], [AS, ZERO, ONE]])[0], "condition reported true")),
        run_case("zero-connection/torsion residual is -wz", zero_connection_torsion),
    ]
    for hh, hz in ((1, 1), (_q ** 3, _q), (2, 5), (_q ** -1, 1 + _q ** 2)):
        h = diagonalMetric(hh, hz)
        cases.append(run_case(f"lcSolve/scalar h={hh} hz={hz}", lambda h=h: _lc_both(lcSolve(h), h)))
    for hh, hz in ((1, 1), (_q ** 3, _q)):
        h = diagonalMetric(hh, hz)
        cases.append(run_case(f"diagonalLC/h={hh} hz={hz}", lambda hh=hh, hz=hz, h=h: _lc_both(diagonalLC(hh, hz), h)))
        cases.append(run_case(f"diagonalLC/h={hh} hz={hz}/equals lcSolve",
                              lambda hh=hh, hz=hz, h=h: (diagonalLC(hh, hz) == lcSolve(h), "connections differ")))
    for k in range(n_random):
        h = diagonalMetric(rng.choice(_POSITIVE), rng.choice(_POSITIVE))
        free = random_free(rng)
        cases.append(run_case(f"lcSolve/random-free/{k + 1:02d}", lambda h=h, free=free: _lc_both(lcSolve(h, free), h)))
    return Report("levi-civita", cases)


# --------------------------------------------------------------------------
# 7. Podleś sphere: vector fields and differentials
# --------------------------------------------------------------------------


def criterion7(mmax: int = 3, nmax: int = 3) -> Report:
    cases = []
    for (a, name), v in podles.left_table().items():
        cases.append(run_case(f"table/left/X{a} {name}",
                              lambda a=a, name=name, v=v: _zero(hopf.X(a, podles.GEN_BY_NAME[name]) - v)))
    for (a, name), v in podles.right_table().items():
        cases.append(run_case(f"table/right/{name} Y{a}",
                              lambda a=a, name=name, v=v: _zero(hopf.Y(a, podles.GEN_BY_NAME[name]) - v)))
    for m, n in podles.sweep(mmax, nmax):
        tag = f"m={m:+d},n={n}"
        f = podles.basis_word(m, n)
        cases.append(run_case(f"rel-rvf/{tag}", lambda m=m, n=n: podles.checkRelRvf(m, n)))
        cases.append(run_case(f"vops/{tag}", lambda f=f: _zero(podles.vops_differential(f) - podles.dSphere(f))))
        cases.append(run_case(f"d-bis/{tag}", lambda f=f: _zero(podles.bis_differential(f) - podles.dSphere(f))))
        cases.append(run_case(f"classical/{tag}", lambda m=m, n=n: podles.classicalRelation(m, n)))
    return Report("podles", cases)


# --------------------------------------------------------------------------
# 8. projective modules
# --------------------------------------------------------------------------


def criterion8(nmax: int = 3, frame_max: int = 4) -> Report:
    cases = []
    for n in range(-nmax, nmax + 1):
        p = podles.projector(n)
        tag = f"projector/n={n:+d}"
        cases += [
            run_case(f"{tag}/idempotent", lambda p=p: _zero([x for row in p.idempotence_residual() for x in row])),
            run_case(f"{tag}/self-adjoint", lambda p=p: (p.is_self_adjoint(), "p is not self-adjoint")),
            run_case(f"{tag}/invariant", lambda p=p: (p.is_invariant(), "an entry is not K-invariant")),
            run_case(f"{tag}/weight-rule", lambda p=p: (p.weight_rule(), "weight rule fails")),
        ]
    for n in range(frame_max + 1):
        for kind in ("Phi", "Psi"):
            cases.append(run_case(f"frame/{kind}/n={n}",
                                  lambda n=n, kind=kind: _zero(podles.frame(n, kind).partition_of_unity() - ONE)))

    def p1():
        got = podles.projector(1).matrix()
        want = [[ONE - podles.B0, podles.BP], [podles.BM, podles.B0.scale(_q * _q)]]
        return got == want, [[str(x) for x in row] for row in got]

    cases.append(run_case("projector/p1 matrix", p1))
    fs = [ONE, podles.B0, podles.BP, podles.BM, podles.BP * podles.B0]

    def induced():
        return podles.inducedSphereConnection(1)

    cases.append(run_case("induced/M1/leibniz", lambda: connection.checkInducedLeibniz(induced(), fs)))
    cases.append(run_case("induced/M1/orthogonal-compat", lambda: connection.checkOrthogonalCompat(
        induced().p, induced().base, HermitianForm.delta(2), fs)))
    cases.append(run_case("induced/M1/closed-form", lambda: _all_zero(
        (f"{a} {mu}", podles.closed_form_induced(ind, a, mu) - ind.apply(a, ind.generators()[mu]))
        for ind in [induced()] for a in INDICES for mu in range(2))))
    return Report("projective-modules", cases)


# --------------------------------------------------------------------------
# 9. framework
# --------------------------------------------------------------------------


def criterion9(n_random: int = 50, seed: int = SEED) -> Report:
    rng = random.Random(seed + 9)
    qts = framework.instanceS3q()
    pairs = [(random_element(rng, 3), random_element(rng, 3)) for _ in range(n_random)]
    gen_pairs = [(f, g) for _, f in GENERATORS for _, g in GENERATORS]
    nabla = framework.trivial_nabla(qts)
    conn = connection.Connection.zero(1)
    delta = HermitianForm.delta(1)

    def agree_leibniz():
        return _all_zero((f"pair {i} X{a}", framework.xacts_residual(qts, a, f, g) - leibniz_residual(a, f, g))
                         for i, (f, g) in enumerate(pairs[:10]) for a in INDICES)

    def agree_compat():
        items = []
        for i, (f, g) in enumerate(pairs[:10]):
            gen = framework.genericCompatResiduals(qts, nabla, f, g)
            _, mod = checkCompat(conn, delta, ModuleVec([f]), ModuleVec([g]))
            items += [(f"pair {i} {a}", gen[a] - mod[a]) for a in INDICES]
        return _all_zero(items)

    def m2_one():
        # with m₂ = 1 the compatibility residual is the star identity
        return _all_zero((f"element {i} {a}", framework.genericCompatResiduals(qts, nabla, f, ONE)[a]
                          - framework.xacts_star_residual(qts, a, f))
                         for i, (f, _) in enumerate(pairs[:10]) for a in INDICES)

    cases = [
        run_case("xacts/generator-pairs", lambda: framework.check_xacts(qts, gen_pairs)),
        run_case(f"xacts/random-{n_random}", lambda: framework.check_xacts(qts, pairs)),
        run_case(f"xacts-star/random-{n_random}", lambda: framework.check_xacts_star(qts, [f for f, _ in pairs])),
        run_case(f"xhcomp/trivial-module/random-{n_random}", lambda: _all_zero(
            (f"pair {i}", list(framework.genericCompatResiduals(qts, nabla, f, g).values()))
            for i, (f, g) in enumerate(pairs))),
        run_case("xhcomp/m2=1 reduces to xacts-star", m2_one),
        run_case("agrees/xacts vs hopf leibniz", agree_leibniz),
        run_case("agrees/xhcomp vs connection.checkCompat", agree_compat),
        run_case("diagonal-twist", lambda: (qts.is_diagonal(), "twist matrix is not diagonal")),
    ]
    return Report("framework", cases)


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

CRITERIA = {
    1: criterion1, 2: criterion2, 3: criterion3, 4: criterion4, 5: criterion5,
    6: criterion6, 7: criterion7, 8: criterion8, 9: criterion9,
}

CRITERION_TITLES = {
    1: "algebra soundness",
    2: "action tables",
    3: "twisted derivations",
    4: "calculus",
    5: "compatible connections from (h, gamma, rho)",
    6: "Levi-Civita connections",
    7: "Podles sphere",
    8: "projective modules",
    9: "framework",
}

TIME_LIMITS = {1: 10, 2: 5, 3: 60, 4: 30, 5: 60, 6: 120, 7: 120, 8: 60, 9: 10}

SUITES = {
    "algebra": (1,),
    "hopf": (2, 3),
    "calculus": (4,),
    "connection": (5, 6),
    "podles": (7, 8),
    "framework": (9,),
}


def run_criterion(k: int) -> Report:
    rep = CRITERIA[k]()
    return Report(f"criterion{k}", rep.cases)


def run_suite(name: str) -> Report:
    if name == "all":
        return merge("all", (run_criterion(k) for k in sorted(CRITERIA)))
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return merge(name, (run_criterion(k) for k in SUITES[name]))
