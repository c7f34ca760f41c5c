from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from oracle import WordAlgebra, evaluate
from qsphere import hopf
from qsphere.algebra import A, AS, C, CS, ONE, ZERO, AlgebraElement
from qsphere.hopf import INDICES, LEFT, LEFT_ACTION, RIGHT, RIGHT_ACTION
from qsphere.scalar import QScalar
from qsphere.verify import action_table, commutation_residuals, leibniz_residual, star_residual

q = QScalar.q_power(1)
S0 = Fraction(5, 3)
sides = st.sampled_from([LEFT, RIGHT])
indices = st.sampled_from(INDICES)


def _oracle_side(side):
    return "left" if side == LEFT else "right"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_action_table_rows(n):
    for rid, lhs, rhs in action_table(n):
        assert lhs == rhs, rid


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("side", [LEFT, RIGHT])
@pytest.mark.parametrize("h", ["K", "Kinv", "E", "F"])
def test_generator_powers_match_representation_oracle(n, side, h):
    W = WordAlgebra(S0)
    for letter, gen in (("a", A), ("as", AS), ("c", C), ("cs", CS)):
        f = gen ** n
        got = hopf.act_left(h, f) if side == LEFT else hopf.act_right(f, h)
        assert evaluate(got, S0) == W.normalize(W.act(_oracle_side(side), h, {(letter,) * n: Fraction(1)}))


@given(elements(), sides, indices)
def test_derivations_match_oracle(f, side, a):
    W = WordAlgebra(S0)
    x = W.from_normal(evaluate(f, S0))
    assert evaluate(hopf.X(a, f, side), S0) == W.normalize(W.X(a, x, _oracle_side(side)))


def test_documented_values():
    assert hopf.X("+", C) == AS
    assert hopf.X("z", ONE) == ZERO
    assert hopf.act_left("K", AS) == AS.scale(QScalar.s_power(1))
    # <K, a*> = q^{1/2}: K acts on a*a + c*c = 1 trivially
    assert hopf.act_left("K", AS * A + CS * C) == ONE


def test_pairing():
    assert hopf.pairing("K", "a") * hopf.pairing("K", "as") == QScalar.coerce(1)
    assert hopf.pairing("E", "a") == QScalar.coerce(0)


@given(elements(), elements(), sides, indices)
def test_twisted_leibniz(f, g, side, a):
    assert leibniz_residual(a, f, g, side).is_zero()


@given(elements(max_degree=4), indices)
def test_star_law_left(f, a):
    assert star_residual(a, f, LEFT_ACTION).is_zero()


@given(elements(max_degree=4), indices)
def test_star_law_right(f, a):
    assert star_residual(a, f, RIGHT_ACTION).is_zero()


def test_right_star_twist_is_needed():
    f = A * C
    plain = hopf.TangentAction(RIGHT, {a: QScalar.coerce(1) for a in INDICES})
    assert not star_residual("+", f, plain).is_zero()


@given(elements(max_degree=4), sides)
def test_commutation_relations(f, side):
    for name, r in commutation_residuals(f, side).items():
        assert r.is_zero(), name


@given(elements(), indices, indices)
def test_left_and_right_actions_commute(f, a, b):
    assert hopf.X(a, hopf.X(b, f, RIGHT)) == hopf.X(b, hopf.X(a, f), RIGHT)


@given(elements(), st.integers(-3, 3), sides)
def test_k_power_is_an_automorphism(f, j, side):
    g = A * C + CS
    assert hopf.k_power(f * g, j, side) == hopf.k_power(f, j, side) * hopf.k_power(g, j, side)
    assert hopf.k_power(hopf.k_power(f, j, side), -j, side) == f


def test_xz_formula():
    # X_z = (1 - K^4)/(1 - q^-2)
    for f in (A, C * CS, AS ** 2 * C):
        k4 = hopf.k_power(f, 4)
        assert hopf.X("z", f) == (f - k4).scale((1 - q ** -2).inv())


def test_tangent_vector():
    v = hopf.TangentVector({"+": 2, "z": q})
    f = A * C
    assert v.apply(f) == hopf.X("+", f).scale(2) + hopf.X("z", f).scale(q)
    assert (v + hopf.TangentVector.basis("-")).coeffs.keys() == {"+", "-", "z"}
    with pytest.raises(ValueError):
        hopf.TangentVector({"x": 1})


def test_operator_lookup():
    assert hopf.operator("X+", LEFT)(C) == AS
    assert hopf.operator("E", RIGHT)(C) == A
    with pytest.raises(ValueError):
        hopf.operator("G")


def test_unknown_index():
    with pytest.raises(ValueError):
        hopf.X("w", A)
    assert isinstance(hopf.X("-", AlgebraElement.monomial(0)), AlgebraElement)
