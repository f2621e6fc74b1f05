"""Immutable simple undirected graphs on dense integer ids.

Adjacency is stored as one Python int bitmask per vertex, so set algebra on
neighbourhoods is a handful of machine-word operations.  All functions here
are pure; "modifying" a graph always returns a new one, together with an id
remap where vertex ids change.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidEdge, InvalidVertex


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def mask_to_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with integer vertex weights.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Use :func:`build_graph`
    rather than the constructor; it validates and normalises the input.
    """

    n: int
    adj: tuple[int, ...]
    weights: tuple[int, ...]

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @property
    def unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> list[int]:
        return mask_to_list(self.adj[v])

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs ``(u, v)`` with ``u < v``, lexicographic order."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def weight_of(self, vertices: Iterable[int]) -> int:
        return sum(self.weights[v] for v in vertices)

    def with_weights(self, weights: Sequence[int] | Mapping[int, int]) -> "Graph":
        return Graph(self.n, self.adj, _normalise_weights(self.n, weights))

    def __repr__(self) -> str:
        w = "" if self.unit_weights else f", weights={list(self.weights)}"
        return f"Graph(n={self.n}, edges={self.edges()}{w})"


@dataclass(frozen=True)
class Certificate:
    """Witness for a forbidden induced subgraph or a clique separator.

    For cycles (``hole``/``antihole``) the vertices are in cyclic order; for
    fixed-size patterns they follow the labelling of the canonical pattern in
    :mod:`atomkit.detect`, so re-checking is an exact labelled comparison.
    """

    kind: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}

    def remap(self, ids: Sequence[int]) -> "Certificate":
        return Certificate(self.kind, tuple(ids[v] for v in self.vertices))


def _normalise_weights(n: int, weights) -> tuple[int, ...]:
    if weights is None:
        return (1,) * n
    if isinstance(weights, Mapping):
        missing = [v for v in range(n) if v not in weights]
        if missing:
            raise InvalidVertex(f"weights missing for vertices {missing}")
        extra = [v for v in weights if not 0 <= v < n]
        if extra:
            raise InvalidVertex(f"weights given for unknown vertices {extra}")
        return tuple(int(weights[v]) for v in range(n))
    weights = tuple(int(w) for w in weights)
    if len(weights) != n:
        raise InvalidVertex(f"expected {n} weights, got {len(weights)}")
    return weights


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]] = (),
    weights: Sequence[int] | Mapping[int, int] | None = None,
) -> Graph:
    """Build a graph on vertices ``0..n-1``; duplicate edges collapse."""
    if n < 0:
        raise InvalidVertex(f"negative vertex count {n}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), _normalise_weights(n, weights))


def from_adjacency(adj: Sequence[int], weights=None) -> Graph:
    """Wrap trusted bitmask rows (symmetric, irreflexive) as a graph."""
    return Graph(len(adj), tuple(adj), _normalise_weights(len(adj), weights))


def complement(g: Graph) -> Graph:
    full = g.all_mask
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)), g.weights)


def _check_vertices(g: Graph, vertices: Iterable[int]) -> list[int]:
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} not in graph with n={g.n}")
    return vs


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[S], remap)`` where ``remap[new_id] = old_id``.

    New ids follow the increasing order of the old ids.
    """
    vs = sorted(set(_check_vertices(g, vertices)))
    index = {old: new for new, old in enumerate(vs)}
    sel = to_mask(vs)
    adj = []
    for old in vs:
        row = 0
        for u in iter_bits(g.adj[old] & sel):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(vs), tuple(adj), tuple(g.weights[v] for v in vs)), vs


def induced_on_ordered(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph with vertex ``i`` of the result being ``vertices[i]``."""
    vs = _check_vertices(g, vertices)
    adj = []
    for old in vs:
        row = 0
        for i, u in enumerate(vs):
            if g.adj[old] >> u & 1:
                row |= 1 << i
        adj.append(row)
    return Graph(len(vs), tuple(adj), tuple(g.weights[v] for v in vs))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = to_mask(_check_vertices(g, vertices))
    return induced_subgraph(g, iter_bits(g.all_mask & ~gone))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    return is_clique_mask(g.adj, to_mask(_check_vertices(g, vertices)))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(_check_vertices(g, vertices))
    return all(not (g.adj[v] & mask) for v in iter_bits(mask))


def is_clique_mask(adj: Sequence[int], mask: int) -> bool:
    for v in iter_bits(mask):
        if (adj[v] | (1 << v)) & mask != mask:
            return False
    return True


def component_of(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of the component of ``start`` inside the vertex set ``allowed``."""
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        frontier = grow & allowed & ~comp
        comp |= frontier
    return comp


def components_mask(adj: Sequence[int], allowed: int) -> list[int]:
    """Components of the subgraph induced by ``allowed``, ordered by smallest vertex."""
    comps = []
    rest = allowed
    while rest:
        comp = component_of(adj, lowest_bit(rest), allowed)
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[list[int]]:
    return [mask_to_list(c) for c in components_mask(g.adj, g.all_mask)]


def is_connected(g: Graph) -> bool:
    return g.n == 0 or component_of(g.adj, 0, g.all_mask) == g.all_mask


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    adj = list(g1.adj) + [a << shift for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj), g1.weights + g2.weights)


def join_compose(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    ``g1`` keeps ids ``0..n1-1``; ``g2``'s vertices follow.
    """
    shift = g1.n
    left_all = g1.all_mask
    right_all = g2.all_mask << shift
    adj = [a | right_all for a in g1.adj] + [(a << shift) | left_all for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj), g1.weights + g2.weights)


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    return build_graph(g.n, list(g.edges()) + [tuple(e) for e in edges], g.weights)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise InvalidVertex("relabelling must be a permutation of 0..n-1")
    adj = [0] * g.n
    weights = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = to_mask(perm[u] for u in iter_bits(g.adj[v]))
        weights[perm[v]] = g.weights[v]
    return Graph(g.n, tuple(adj), tuple(weights))
