from hypothesis import strategies as st

from thetadim import new_graph


@st.composite
def small_graphs(draw, max_n: int = 12):
    """Random simple graphs on 1..n, n <= max_n, any edge subset."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return new_graph(n, edges)
