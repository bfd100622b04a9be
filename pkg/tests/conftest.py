from fractions import Fraction

from hypothesis import strategies as st

small_rationals = st.builds(
    Fraction,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=12),
)
