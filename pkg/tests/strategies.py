from hypothesis import strategies as st

from polyiamonds.lattice import neighbors
from polyiamonds.polyiamond import make_polyiamond


@st.composite
def polyiamonds(draw, min_size=1, max_size=30):
    """Random connected shapes grown one neighbor at a time."""
    n = draw(st.integers(min_size, max_size))
    start = (draw(st.integers(-5, 5)), draw(st.integers(-5, 5)))
    cells = [start]
    seen = {start}
    while len(cells) < n:
        base = cells[draw(st.integers(0, len(cells) - 1))]
        nb = neighbors(base)[draw(st.integers(0, 2))]
        if nb not in seen:
            seen.add(nb)
            cells.append(nb)
    return make_polyiamond(cells)
