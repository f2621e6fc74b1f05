"""Clique separator decomposition.

``decompose`` follows Tarjan's scheme: compute a minimal elimination ordering
(MCS-M), then scan the vertices in elimination order.  When the later fill
neighbours ``C`` of a vertex ``v`` form a clique of the current graph ``G'``,
the component of ``v`` in ``G' - C`` plus ``C`` is peeled off as an atom.
The remainder after the scan is the last atom.

Peeling is restricted to ``C`` that are minimal separators of ``G'`` with
``v``'s component full; plain Tarjan also peels non-minimal cliques and then
emits atoms nested inside other atoms (the bowtie already shows this).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundExceeded, DisconnectedInput
from .graph import (
    Certificate,
    Graph,
    component_of,
    components_mask,
    induced_subgraph,
    is_clique_mask,
    iter_bits,
    mask_to_list,
    to_mask,
)

SEPARATOR_SEARCH_BOUND = 15


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    fill_edges: frozenset[tuple[int, int]]


@dataclass
class DecompositionTree:
    """Peel sequence: ``separators[i]`` attaches ``atoms[i]`` to the atoms after it."""

    atoms: list[list[int]] = field(default_factory=list)
    separators: list[list[int]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"atoms": self.atoms, "separators": self.separators}


def minimal_elimination_ordering(g: Graph) -> EliminationOrdering:
    """MCS-M: a minimal triangulation together with its elimination order.

    Vertices are numbered from n down to 1; the chosen vertex raises the
    weight of every unnumbered ``u`` reachable through unnumbered vertices of
    weight strictly below ``w(u)``.  Ties pick the smallest id.
    """
    n, adj = g.n, g.adj
    weight = [0] * n
    buckets: dict[int, int] = {0: g.all_mask}  # weight -> mask of unnumbered vertices
    unnumbered = g.all_mask
    picked = []
    fill = set()
    for _ in range(n):
        top = max(w for w, b in buckets.items() if b)
        b = buckets[top]
        v = (b & -b).bit_length() - 1
        buckets[top] = b & ~(1 << v)
        unnumbered &= ~(1 << v)
        picked.append(v)
        reached = _mcsm_reach(adj, v, unnumbered, buckets)
        for u in iter_bits(reached):
            w = weight[u]
            buckets[w] &= ~(1 << u)
            buckets[w + 1] = buckets.get(w + 1, 0) | (1 << u)
            weight[u] = w + 1
            if not adj[v] >> u & 1:
                fill.add((min(u, v), max(u, v)))
    return EliminationOrdering(tuple(reversed(picked)), frozenset(fill))


def _mcsm_reach(adj, v: int, unnumbered: int, buckets: dict[int, int]) -> int:
    """Unnumbered ``u`` joined to ``v`` by a path whose inner weights are all < w(u)."""
    levels = sorted(w for w, b in buckets.items() if b & unnumbered)
    region = 0          # inner vertices usable so far
    border = adj[v]     # neighbours of {v} | region
    low = 0             # unnumbered vertices of weight < current level
    result = 0
    for w in levels:
        here = buckets[w] & unnumbered
        result |= border & here
        low |= here
        # grow the region through vertices of weight <= w before the next level
        frontier = border & low & ~region
        while frontier:
            region |= frontier
            grow = 0
            for x in iter_bits(frontier):
                grow |= adj[x]
            border |= grow
            frontier = grow & low & ~region
    return result


def _fill_graph_adj(g: Graph, fill) -> list[int]:
    adj = list(g.adj)
    for u, v in fill:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def decompose(g: Graph, ordering: EliminationOrdering | None = None) -> DecompositionTree:
    """Decompose a connected graph into atoms along clique separators."""
    if g.n == 0:
        return DecompositionTree()
    if component_of(g.adj, 0, g.all_mask) != g.all_mask:
        raise DisconnectedInput("decompose needs a connected graph; split components first")
    ordering = ordering or minimal_elimination_ordering(g)
    order = ordering.order
    filled = _fill_graph_adj(g, ordering.fill_edges)
    later = [0] * g.n
    done = 0
    for v in order:
        done |= 1 << v
        later[v] = filled[v] & ~done

    tree = DecompositionTree()
    current = g.all_mask
    before = 0  # vertices eliminated before v
    for v in order:
        bit = 1 << v
        prefix, before = before, before | bit
        if not current & bit:
            continue
        sep = later[v]
        if not is_clique_mask(g.adj, sep):
            continue
        # a path from v to a later vertex outside sep would have produced a fill
        # edge into sep, so v's component only uses earlier vertices
        comp = component_of(g.adj, v, (current & prefix & ~sep) | bit)
        if not current & ~(comp | sep):
            continue
        if not _is_full(g.adj, comp, sep) or not _has_other_full(g.adj, current & ~(comp | sep), sep):
            continue
        tree.atoms.append(mask_to_list(comp | sep))
        tree.separators.append(mask_to_list(sep))
        current &= ~comp
    tree.atoms.append(mask_to_list(current))
    return tree


def _is_full(adj, comp: int, sep: int) -> bool:
    return all(adj[s] & comp for s in iter_bits(sep))


def _has_other_full(adj, rest: int, sep: int) -> bool:
    """Some component of ``rest`` sees every vertex of ``sep``.

    Each search stops as soon as the separator is covered, so the large
    remainder is rarely walked in full.
    """
    seeds = 0
    for s in iter_bits(sep):
        seeds |= adj[s]
    seeds &= rest
    while seeds:
        start = seeds & -seeds
        seen = frontier = start
        touched = 0
        while frontier:
            grow = 0
            for x in iter_bits(frontier):
                grow |= adj[x]
            touched |= grow & sep
            if touched == sep:
                return True
            frontier = grow & rest & ~seen
            seen |= frontier
        seeds &= ~seen
    return False


def decompose_components(g: Graph) -> list[DecompositionTree]:
    """One decomposition tree per connected component, in original ids."""
    trees = []
    for comp in components_mask(g.adj, g.all_mask):
        sub, ids = induced_subgraph(g, iter_bits(comp))
        t = decompose(sub)
        trees.append(DecompositionTree(
            [[ids[v] for v in a] for a in t.atoms],
            [[ids[v] for v in s] for s in t.separators],
        ))
    return trees


def is_clique_separator(g: Graph, vertices) -> bool:
    mask = to_mask(vertices)
    if not is_clique_mask(g.adj, mask):
        return False
    before = len(components_mask(g.adj, g.all_mask))
    after = len(components_mask(g.adj, g.all_mask & ~mask))
    return after > before


def find_any_clique_separator(g: Graph, bound: int = SEPARATOR_SEARCH_BOUND) -> Certificate | None:
    """Exhaustive search over all cliques, smallest first, then lexicographic."""
    if g.n > bound:
        raise BoundExceeded(f"exhaustive separator search limited to n <= {bound}, got {g.n}")
    before = len(components_mask(g.adj, g.all_mask))
    for clique in _cliques_by_size(g):
        mask = to_mask(clique)
        if len(components_mask(g.adj, g.all_mask & ~mask)) > before:
            return Certificate("clique-separator", tuple(clique))
    return None


def _cliques_by_size(g: Graph):
    layer = [(v,) for v in range(g.n)]
    while layer:
        yield from layer
        nxt = []
        for c in layer:
            common = g.all_mask
            for v in c:
                common &= g.adj[v]
            for u in iter_bits(common >> (c[-1] + 1)):
                nxt.append(c + (u + c[-1] + 1,))
        layer = nxt


def verify_decomposition(
    g: Graph, tree: DecompositionTree, bound: int = SEPARATOR_SEARCH_BOUND
) -> tuple[bool, str]:
    """Check every tree invariant; returns ``(ok, reason)`` with reason ``"ok"`` on success."""
    atoms = [to_mask(a) for a in tree.atoms]
    seps = [to_mask(s) for s in tree.separators]
    if g.n == 0:
        return (not atoms and not seps), ("ok" if not atoms else "atoms-on-empty-graph")
    if len(seps) != len(atoms) - 1:
        return False, "separator-count"
    if any(a & ~g.all_mask for a in atoms) or any(s & ~g.all_mask for s in seps):
        return False, "vertex-out-of-range"
    union = 0
    for a in atoms:
        union |= a
    if union != g.all_mask:
        return False, "vertex-cover"
    for s in seps:
        if not is_clique_mask(g.adj, s):
            return False, "separator-not-clique"
    covered = set()
    for a in atoms:
        for u in iter_bits(a):
            for v in iter_bits(g.adj[u] & a):
                if u < v:
                    covered.add((u, v))
    if covered != set(g.edges()):
        return False, "edge-cover"
    remaining = g.all_mask
    for a, s in zip(atoms, seps):
        if a & ~remaining:
            return False, "atom-outside-remainder"
        if s & ~a:
            return False, "separator-outside-atom"
        private = a & ~s
        remaining &= ~private
        if a & remaining != s:
            return False, "attachment-mismatch"
        for u in iter_bits(private):
            if g.adj[u] & remaining & ~s:
                return False, "not-separated"
        if not remaining & ~s:
            return False, "empty-remainder"
    if atoms[-1] != remaining:
        return False, "last-atom-mismatch"
    for a in atoms:
        if component_of(g.adj, (a & -a).bit_length() - 1, a) != a:
            return False, "atom-disconnected"
        if a.bit_count() <= bound:
            sub, _ = induced_subgraph(g, iter_bits(a))
            if find_any_clique_separator(sub, bound) is not None:
                return False, "atom-has-clique-separator"
    return True, "ok"

