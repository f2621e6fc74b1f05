import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from atomkit.graph import Graph, build_graph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=9, weighted=False, max_weight=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    present = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, present) if keep]
    weights = None
    if weighted:
        weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    return build_graph(n, edges, weights)


@st.composite
def connected_graphs(draw, min_n=1, max_n=9, weighted=False):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**31))
    p = draw(st.sampled_from([0.1, 0.3, 0.5, 0.8]))
    return connected_gnp(n, p, seed, weighted)


def connected_gnp(n: int, p: float, seed: int, weighted: bool = False) -> Graph:
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    weights = [rng.randint(1, 10) for _ in range(n)] if weighted else None
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges], weights)


def edge_set(g: Graph) -> set:
    return set(g.edges())
