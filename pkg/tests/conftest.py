from fractions import Fraction

from hypothesis import strategies as st

from bpotts.coefficients import QfScalar

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonsquare_f = st.sampled_from([2, 3, 5, 6, 7])


@st.composite
def qf_pair(draw, f_strategy=nonsquare_f):
    """Two or three elements of the same Q(sqrt f)."""
    f = draw(f_strategy)
    return f, [QfScalar(draw(rationals), draw(rationals), f) for _ in range(3)]


def F(x) -> Fraction:
    return Fraction(x)
