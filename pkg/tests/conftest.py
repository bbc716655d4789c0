from fractions import Fraction

from hypothesis import settings, strategies as st

from hooklength.exact import BiPoly, RatFunc

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def bipolys(draw, max_deg=2):
    terms = draw(st.dictionaries(
        st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)), small, max_size=4))
    return BiPoly(terms)


@st.composite
def ratfuncs(draw, max_deg=2):
    num = draw(bipolys(max_deg))
    den = draw(bipolys(max_deg).filter(lambda p: not p.is_zero()))
    return RatFunc(num, den)


def rat_points():
    return st.tuples(small, small)


def frac(x):
    return Fraction(x)
