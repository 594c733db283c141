import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from offalliance.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, chosen) if keep]
    if connected:
        # hang a random spanning tree under the drawn edges
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            if (u, v) not in edges:
                edges.append((u, v))
    return Graph(n, edges)


@st.composite
def graph_and_subset(draw, min_n=1, max_n=8, connected=False, nonempty=True):
    g = draw(graphs(min_n, max_n, connected))
    s = draw(st.sets(st.integers(0, g.n - 1), min_size=1 if nonempty else 0))
    return g, frozenset(s)


@pytest.fixture
def write_graph(tmp_path):
    from offalliance.io import format_edge_list

    def _write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_edge_list(g))
        return path
    return _write
