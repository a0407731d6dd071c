import numpy as np
import pytest

from zsramsey.graph import Graph, gen_degenerate_graph, min_vertices_for


def random_graph(d, m, seed, extra=4):
    rng = np.random.default_rng(seed)
    n = min_vertices_for(m, d) + int(rng.integers(0, extra + 1))
    return gen_degenerate_graph(n, d, m, seed)


def star_forest(sizes):
    """Disjoint stars, ``sizes[i]`` leaves each."""
    edges, n = [], 0
    for k in sizes:
        edges += [(n, n + 1 + j) for j in range(k)]
        n += k + 1
    return Graph(n, edges)


@pytest.fixture
def forest24():
    return random_graph(1, 24, 0)
