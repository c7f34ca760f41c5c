import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsphere import hopf, podles
from qsphere.algebra import A, AS, C, CS, ONE, ZERO, classical_limit
from qsphere.calculus import d
from qsphere.connection import HermitianForm, checkInducedLeibniz, checkOrthogonalCompat
from qsphere.errors import PreconditionError
from qsphere.hopf import INDICES, RIGHT
from qsphere.scalar import QScalar

q = QScalar.q_power(1)
B0, BP, BM = podles.B0, podles.BP, podles.BM
words = st.tuples(st.integers(-3, 3), st.integers(0, 3))


@pytest.mark.parametrize("name", sorted(podles.sphere_relations()))
def test_sphere_relations(name):
    assert podles.sphere_relations()[name].is_zero()


def test_generators_are_invariant():
    for g in podles.sphereGens():
        assert podles.isInvariant(g)
    assert not podles.isInvariant(A)


def test_generators_are_star_related():
    assert B0.star() == B0
    assert BP.star() == BM


@given(words)
def test_basis_words_are_invariant(mn):
    assert podles.isInvariant(podles.basis_word(*mn))


@given(words, words)
def test_invariants_form_a_subalgebra(x, y):
    assert podles.isInvariant(podles.basis_word(*x) * podles.basis_word(*y))


def test_left_table():
    for (a, name), v in podles.left_table().items():
        assert hopf.X(a, podles.GEN_BY_NAME[name]) == v, (a, name)


def test_left_table_sign_of_x_plus_on_b_minus():
    assert hopf.X("+", BM) == (CS * CS).scale(-q * q)


def test_right_table():
    for (a, name), v in podles.right_table().items():
        assert hopf.Y(a, podles.GEN_BY_NAME[name]) == v, (a, name)


@given(words)
def test_right_vector_fields_preserve_the_sphere(mn):
    f = podles.basis_word(*mn)
    for a in INDICES:
        assert podles.isInvariant(hopf.Y(a, f))


@pytest.mark.parametrize("mn", podles.sweep(3, 3))
def test_two_expressions_for_the_differential(mn):
    f = podles.basis_word(*mn)
    assert podles.bis_differential(f) == podles.dSphere(f) == d(f)


@pytest.mark.parametrize("mn", podles.sweep(3, 3))
def test_classical_relation(mn):
    assert podles.classicalRelation(*mn)[0]


def test_rel_rvf_constant_function():
    # both Y-sides vanish on f = 1 while the K^4 term does not
    lhs, rhs = podles.rel_rvf_sides(ONE)
    assert lhs.is_zero()
    assert rhs == (B0.scale(q ** 4 - 1) + (B0 * B0).scale(1 - q ** 6)).scale((1 + q ** 2) / q ** 2)


def test_rel_rvf_sides_vanish_classically():
    # at q = 1 both sides reduce to the classical relation, which holds
    for mn in podles.sweep(2, 2):
        lhs, rhs = podles.rel_rvf_sides(podles.basis_word(*mn))
        assert classical_limit(lhs) == {}
        assert classical_limit(rhs) == {}


def test_vops_on_the_lowest_words():
    for f in (ONE, B0):
        assert podles.vops_differential(f) == podles.dSphere(f)


def test_dsphere_requires_invariant_input():
    with pytest.raises(PreconditionError):
        podles.dSphere(A)


def test_closed_form_differentials():
    for name, shown in podles.dB().items():
        assert podles.dSphere(podles.GEN_BY_NAME[name]) == shown


@pytest.mark.parametrize("n", range(-3, 4))
def test_projectors(n):
    p = podles.projector(n)
    assert p.size == abs(n) + 1
    assert p.is_idempotent()
    assert p.is_self_adjoint()
    assert p.is_invariant()
    assert p.weight_rule()


def test_p1_entries():
    assert podles.projector(1).matrix() == [[ONE - B0, BP], [BM, B0.scale(q * q)]]


def test_irrational_entries_are_reported():
    p = podles.projector(2)
    assert not p.is_rational()
    with pytest.raises(ValueError):
        p.matrix()
    assert "sqrt(q^2 + 1)" in p.entry_str(0, 1)


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("kind", ["Phi", "Psi"])
def test_frames_partition_unity(n, kind):
    assert podles.frame(n, kind).partition_of_unity() == ONE


def test_frame_components_have_line_bundle_degree():
    assert podles.line_bundle_degree(C ** 2) == 2
    assert podles.line_bundle_degree(AS * CS) == -2
    assert podles.line_bundle_degree(A + AS) is None
    assert podles.line_bundle_degree(ZERO) is None


def test_alpha_beta_are_q_binomials():
    assert podles.alpha(2, 1) == 1 + q * q
    assert podles.beta(2, 1) == 1 + q * q
    assert podles.alpha(3, 3) == QScalar.coerce(1)


def test_induced_connection_on_m1():
    ind = podles.inducedSphereConnection(1)
    fs = [ONE, B0, BP, BM, BP * B0]
    assert checkInducedLeibniz(ind, fs)[0]
    assert checkOrthogonalCompat(ind.p, ind.base, HermitianForm.delta(2), fs)[0]
    for a in INDICES:
        for mu in range(2):
            assert podles.closed_form_induced(ind, a, mu) == ind.apply(a, ind.generators()[mu])


def test_induced_connection_stays_in_the_image():
    ind = podles.inducedSphereConnection(-1)
    for g in ind.generators():
        for a in INDICES:
            v = ind.apply(a, g)
            assert ind.project(v) == v


def test_sphere_connection_needs_invariant_data():
    h = HermitianForm([[ONE, A], [AS, ONE]], [[ONE, ZERO], [ZERO, ONE]], check=False)
    with pytest.raises(PreconditionError):
        podles.sphere_connection(h)


def test_right_action_k_on_words():
    f = podles.basis_word(2, 1)
    assert hopf.k_power(f, 1, RIGHT) == f.scale(q ** 2)
