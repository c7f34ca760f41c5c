import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from qsphere import connection as cn
from qsphere.algebra import A, AS, C, CS, ONE, ZERO
from qsphere.errors import PreconditionError, RankMismatch
from qsphere.hopf import INDICES, LEFT_ACTION, RIGHT_ACTION, TangentVector
from qsphere.scalar import QScalar
from qsphere.verify import random_form, random_free, random_params, random_vec

q = QScalar.q_power(1)


def test_hermitian_form_preconditions():
    with pytest.raises(PreconditionError):
        cn.HermitianForm([[ONE, A], [ZERO, ONE]], [[ONE, -A], [ZERO, ONE]])
    with pytest.raises(PreconditionError):
        cn.HermitianForm([[ONE.scale(2)]], [[ONE]])
    with pytest.raises(RankMismatch):
        cn.HermitianForm([[ONE]], [[ONE, ZERO], [ZERO, ONE]])


def test_h_eval():
    h = cn.HermitianForm.diagonal_scalar([q, 2])
    m1, m2 = cn.ModuleVec([A, C]), cn.ModuleVec([C, ONE])
    assert h(m1, m2) == (AS * C).scale(q) + CS.scale(2)


def test_module_vec_rank_checks():
    with pytest.raises(RankMismatch):
        cn.ModuleVec([A]) + cn.ModuleVec([A, C])


def test_nabla_leibniz():
    conn = cn.Connection(2, {"+": [[A, ZERO], [C, CS]], "z": [[ONE, AS], [ZERO, A]]})
    m = cn.ModuleVec([A * C, CS])
    for a in INDICES:
        for f in (A, C * CS, AS + 2):
            r = cn.leibniz_residual(lambda b, v: cn.nablaApply(conn, b, v), LEFT_ACTION, a, m, f)
            assert r.is_zero()


def test_nabla_on_tangent_vectors_is_linear():
    conn = cn.Connection(1, {"+": [[A]], "-": [[C]]})
    m = cn.ModuleVec([CS])
    v = TangentVector({"+": 2, "-": q})
    assert cn.nablaApply(conn, v, m) == cn.nablaApply(conn, "+", m).scale(2) + cn.nablaApply(conn, "-", m).scale(q)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("action", [LEFT_ACTION, RIGHT_ACTION], ids=["left", "right"])
def test_christoffel_from_form_is_compatible(seed, action):
    rng = random.Random(seed)
    rank = 1 + seed % 3
    h = random_form(rng, rank)
    p = random_params(rng, rank)
    conn = cn.christoffelFromForm(h, p, action)
    assert cn.checkCompatBasis(conn, h)[0]
    for _ in range(3):
        assert cn.checkCompat(conn, h, random_vec(rng, rank), random_vec(rng, rank))[0]
    back = cn.paramsFromConnection(conn, h)
    assert back.gamma == p.gamma and back.rho == p.rho


def test_rho_must_be_hermitian():
    h = cn.HermitianForm.delta(2)
    with pytest.raises(PreconditionError):
        cn.christoffelFromForm(h, cn.ConnParams(cn.zeros(2), [[A, ZERO], [ZERO, ZERO]]))


def test_perturbed_connection_is_not_compatible():
    h = cn.HermitianForm.delta(1)
    conn = cn.christoffelFromForm(h, cn.ConnParams([[A]], [[ZERO]]))
    bad = cn.Connection(1, {"+": conn.gamma["+"], "-": [[C]], "z": conn.gamma["z"]})
    ok, res = cn.checkCompat(bad, h, cn.ModuleVec([ONE]), cn.ModuleVec([ONE]))
    assert not ok and not res["-"].is_zero()


def test_zero_connection_torsion():
    ok, res = cn.checkTorsionFree(cn.Connection.zero(3))
    assert not ok
    assert res[0] == -cn.ModuleVec.basis(3, 2)
    assert res[1] == -cn.ModuleVec.basis(3, 1).scale(1 + q * q)
    assert res[2] == -cn.ModuleVec.basis(3, 0).scale(1 + q * q)


@pytest.mark.parametrize("hh,hz", [(1, 1), (q ** 3, q), (2, q + 1)])
def test_diagonal_levi_civita(hh, hz):
    h = cn.diagonalMetric(hh, hz)
    conn = cn.diagonalLC(hh, hz)
    assert cn.checkTorsionFree(conn)[0]
    assert cn.checkCompatBasis(conn, h)[0]
    assert conn == cn.lcSolve(h)


@pytest.mark.parametrize("seed", range(4))
def test_lc_solve_with_free_parameters(seed):
    rng = random.Random(100 + seed)
    h = cn.diagonalMetric(q ** seed, 1 + q ** 2)
    conn = cn.lcSolve(h, random_free(rng))
    assert cn.checkTorsionFree(conn)[0]
    assert cn.checkCompatBasis(conn, h)[0]


def test_free_parameters_are_checked():
    h = cn.diagonalMetric(1, 1)
    with pytest.raises(PreconditionError):
        cn.lcSolve(h, {"r--": A})
    with pytest.raises(PreconditionError):
        cn.lcSolve(h, {"nope": A})


def test_lc_condition_examples():
    f = ONE + C * CS
    assert cn.lcCondition(cn.diag([f.scale(q * q), f, ONE + A + AS]))[0]
    assert not cn.lcCondition([[ONE, ZERO, A], [ZERO, ONE, ZERO], [AS, ZERO, ONE]])[0]
    # off-diagonal h_{+z} = c* with h_{z+} = c passes the condition
    assert cn.lcCondition([[ONE, ZERO, CS], [ZERO, ONE, ZERO], [C, ZERO, ONE]])[0]


def test_lc_refuses_when_condition_fails():
    m = [[ONE, ZERO, A], [ZERO, ONE, ZERO], [AS, ZERO, ONE]]
    form = cn.HermitianForm(m, cn.identity(3), check=False)
    with pytest.raises(PreconditionError):
        cn.lcSolve(form)


def test_rotated_block_metrics_satisfy_the_condition():
    u = [[A, CS.scale(-q)], [C, AS]]
    ud = cn.dagger_matrix(u)
    blk = cn.matmul(cn.matmul(ud, cn.diag([q, QScalar.coerce(1)])), u)
    h = [[blk[0][0], ZERO, blk[0][1]], [ZERO, ONE, ZERO], [blk[1][0], ZERO, blk[1][1]]]
    assert cn.lcCondition(h)[0]


def test_connection_difference_is_a_module_map():
    h = cn.diagonalMetric(1, 1)
    c1 = cn.lcSolve(h)
    c2 = cn.lcSolve(h, {"g+-": A})
    diff = cn.connDifference(c1, c2)
    m = cn.ModuleVec([A, C, ONE])
    for a in INDICES:
        lhs = diff(a, m * C)
        rhs = diff(a, m) * LEFT_ACTION.sigma(a, C)
        assert lhs == rhs


def test_json_round_trip(tmp_path):
    h = cn.diagonalMetric(q ** 3, q)
    conn = cn.lcSolve(h, {"g+-": A * C, "rzz": A + AS})
    data = json.loads(json.dumps(cn.connection_to_json(conn)))
    assert data["schema"] == 1
    assert cn.connection_from_json(data) == conn
    hdata = json.loads(json.dumps(cn.form_to_json(h)))
    back = cn.form_from_json(hdata)
    assert back.h == h.h and back.hinv == h.hinv


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        cn.Connection(2, {"+": [[A]]})
    with pytest.raises(RankMismatch):
        cn.checkTorsionFree(cn.Connection.zero(2))


@given(elements(), elements())
def test_compatibility_is_checked_on_arbitrary_vectors(f, g):
    h = cn.HermitianForm.diagonal_scalar([q, 1])
    conn = cn.christoffelFromForm(h, cn.ConnParams([[A, ZERO], [C, ONE]], [[ONE, CS], [C, ZERO]]))
    assert cn.checkCompat(conn, h, cn.ModuleVec([f, g]), cn.ModuleVec([g, ONE]))[0]
