from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
unit_rationals = st.fractions(min_value=Fraction(1, 50), max_value=1, max_denominator=50)
