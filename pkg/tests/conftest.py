import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def simplex_coords(draw, min_n=2, max_n=7, max_den=120):
    """Rational points of the open simplex D, as (N, coords)."""
    n = draw(st.integers(min_n, max_n))
    b = draw(st.integers(n, max_den))
    cuts = sorted(draw(st.sets(st.integers(1, b - 1), min_size=n - 1, max_size=n - 1)))
    prev = 0
    coords = []
    for c in cuts:
        coords.append(Fraction(c - prev, b))
        prev = c
    return n, tuple(coords)
