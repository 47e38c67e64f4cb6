import sys
from itertools import combinations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from hypothesis import strategies as st

from rck.graphs import from_edges


@st.composite
def small_graphs(draw, min_n=1, max_n=7, max_edges=None):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return from_edges(n, [])
    cap = len(pairs) if max_edges is None else min(max_edges, len(pairs))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=cap))
    return from_edges(n, edges)


@pytest.fixture(scope="session")
def corpus():
    """Non-isomorphic graphs by vertex count, 1..8 (generated once)."""
    from rck.enumerate_graphs import graphs_up_to

    return graphs_up_to(8)
