import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from qsphere.algebra import AlgebraElement  # noqa: E402
from qsphere.scalar import QScalar  # noqa: E402

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

q = QScalar.q_power(1)

laurent_scalars = st.builds(
    lambda e, c: QScalar.s_power(e, c),
    st.integers(-6, 6),
    st.integers(-5, 5).filter(bool),
)


@st.composite
def scalars(draw):
    """Sums and quotients of small Laurent monomials in s."""
    num = sum((draw(laurent_scalars) for _ in range(draw(st.integers(1, 3)))), QScalar.coerce(0))
    if draw(st.booleans()):
        den = draw(laurent_scalars) + draw(laurent_scalars)
        if not den.is_zero():
            num = num / den
    return num


@st.composite
def monomials(draw, max_degree=3):
    deg = draw(st.integers(0, max_degree))
    k = draw(st.integers(-deg, deg))
    m = draw(st.integers(0, deg - abs(k)))
    return (k, m, deg - abs(k) - m)


@st.composite
def elements(draw, max_degree=3, max_terms=3):
    out = AlgebraElement.monomial(0)
    out = out - out
    for _ in range(draw(st.integers(1, max_terms))):
        k, m, n = draw(monomials(max_degree))
        out = out + AlgebraElement.monomial(k, m, n, draw(laurent_scalars))
    return out
