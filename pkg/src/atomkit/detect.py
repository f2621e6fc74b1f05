"""Forbidden induced subgraphs and base-class recognition, always with witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedPattern
from .graph import (
    Certificate,
    Graph,
    build_graph,
    complement,
    components_mask,
    induced_on_ordered,
    induced_subgraph,
    is_clique_mask,
    iter_bits,
    lowest_bit,
    to_mask,
)

_DIAMOND_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]

# Labelled pattern graphs; certificates list host vertices in this labelling.
#   diamond:    0,1 the degree-3 pair, 2,3 the degree-2 pair
#   paraglider: diamond + 4 seeing exactly 2 and 3
#   dart:       diamond + pendant 4 on vertex 0
#   gem:        path 0-1-2-3 + 4 seeing all of it
#   coC6:       left triangle 0,1,2; right triangle 3,4,5; matching i ~ i+3
PATTERN_EDGES: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "diamond": (4, _DIAMOND_EDGES),
    "paraglider": (5, _DIAMOND_EDGES + [(2, 4), (3, 4)]),
    "dart": (5, _DIAMOND_EDGES + [(0, 4)]),
    "gem": (5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
    "coC6": (6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)]),
}
PATTERN_KINDS = ("hole", "antihole", *PATTERN_EDGES)


def pattern_graph(kind: str) -> Graph:
    if kind not in PATTERN_EDGES:
        raise UnsupportedPattern(f"no fixed-size pattern named {kind!r}")
    n, edges = PATTERN_EDGES[kind]
    return build_graph(n, edges)


@dataclass(frozen=True)
class MCBWitness:
    """Two equal cliques joined by a perfect matching; ``matching[i] = (left[i], right[i])``."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.left)

    @property
    def matching(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.left, self.right))

    def remap(self, ids) -> "MCBWitness":
        return MCBWitness(tuple(ids[v] for v in self.left), tuple(ids[v] for v in self.right))

    def to_json(self) -> dict:
        return {"left": list(self.left), "right": list(self.right),
                "matching": [list(p) for p in self.matching]}


# holes ----------------------------------------------------------------------


def _shortest_path(adj, src: int, dst: int, allowed: int) -> list[int]:
    """BFS path from src to dst whose internal vertices lie in ``allowed``."""
    parent = {src: None}
    frontier = [src]
    passable = allowed | (1 << dst)
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(adj[v] & passable):
                if u in parent:
                    continue
                parent[u] = v
                if u == dst:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(u)
        frontier = nxt
    raise AssertionError("no path although the endpoints share a component")


def _find_hole_adj(n: int, adj) -> list[int] | None:
    full = (1 << n) - 1
    for b in range(n):
        for c in iter_bits(adj[b]):
            nb, nc = adj[b] | (1 << b), adj[c] | (1 << c)
            ends_a = adj[b] & ~nc
            ends_d = adj[c] & ~nb
            if not ends_a or not ends_d:
                continue
            allowed = full & ~(nb | nc)
            for comp in components_mask(adj, allowed):
                touch = 0
                for x in iter_bits(comp):
                    touch |= adj[x]
                for a in iter_bits(ends_a & touch):
                    ds = ends_d & touch & ~adj[a]
                    if ds:
                        d = lowest_bit(ds)
                        path = _shortest_path(adj, d, a, comp)
                        return [a, b, c] + path[:-1]
    return None


def find_hole(g: Graph) -> Certificate | None:
    """Chordless cycle of length >= 5, in cyclic order, or ``None``.

    Every induced P4 a-b-c-d is tried: a hole through it exists iff a and d
    are joined outside N[b] | N[c], and a shortest such path closes one.
    """
    cyc = _find_hole_adj(g.n, g.adj)
    return None if cyc is None else Certificate("hole", tuple(cyc))


def find_antihole(g: Graph) -> Certificate | None:
    cyc = _find_hole_adj(g.n, complement(g).adj)
    return None if cyc is None else Certificate("antihole", tuple(cyc))


# fixed-size patterns ----------------------------------------------------------


def _iter_diamonds(adj, n):
    for u in range(n):
        for v in iter_bits(adj[u] >> (u + 1)):
            v += u + 1
            common = adj[u] & adj[v]
            for x in iter_bits(common):
                for y in iter_bits(common & ~adj[x] & ~((1 << (x + 1)) - 1)):
                    yield u, v, x, y


def _find_diamond(adj, n):
    return next(_iter_diamonds(adj, n), None)


def _find_paraglider(adj, n):
    for u, v, x, y in _iter_diamonds(adj, n):
        z = adj[x] & adj[y] & ~adj[u] & ~adj[v] & ~(1 << u) & ~(1 << v)
        if z:
            return u, v, x, y, lowest_bit(z)
    return None


def _find_dart(adj, n):
    for u, v, x, y in _iter_diamonds(adj, n):
        for hub, other in ((u, v), (v, u)):
            z = adj[hub] & ~(adj[other] | adj[x] | adj[y] | (1 << other) | (1 << x) | (1 << y))
            if z:
                return hub, other, x, y, lowest_bit(z)
    return None


def _find_gem(adj, n):
    for w in range(n):
        nw = adj[w]
        for b in iter_bits(nw):
            for c in iter_bits(adj[b] & nw):
                nb, nc = adj[b] | (1 << b), adj[c] | (1 << c)
                for a in iter_bits(adj[b] & nw & ~nc):
                    ds = adj[c] & nw & ~nb & ~adj[a] & ~(1 << a)
                    if ds:
                        return a, b, c, lowest_bit(ds), w
    return None


def _find_coc6(adj, n):
    for a in range(n):
        for b in iter_bits(adj[a] >> (a + 1)):
            b += a + 1
            for c in iter_bits(adj[a] & adj[b] & ~((1 << (b + 1)) - 1)):
                na, nb, nc = (adj[t] | (1 << t) for t in (a, b, c))
                for a2 in iter_bits(adj[a] & ~nb & ~nc):
                    for b2 in iter_bits(adj[b] & adj[a2] & ~na & ~nc):
                        c2 = adj[c] & adj[a2] & adj[b2] & ~na & ~nb
                        if c2:
                            return a, b, c, a2, b2, lowest_bit(c2)
    return None


_FINDERS = {
    "diamond": _find_diamond,
    "paraglider": _find_paraglider,
    "dart": _find_dart,
    "gem": _find_gem,
    "coC6": _find_coc6,
}


def find_pattern(g: Graph, kind: str) -> Certificate | None:
    """Labelled induced copy of a fixed-size pattern (see ``PATTERN_EDGES``)."""
    try:
        finder = _FINDERS[kind]
    except KeyError:
        raise UnsupportedPattern(f"find_pattern supports {sorted(_FINDERS)}, not {kind!r}") from None
    hit = finder(g.adj, g.n)
    return None if hit is None else Certificate(kind, tuple(hit))


def _is_induced_cycle(adj, cyc) -> bool:
    k = len(cyc)
    if len(set(cyc)) != k:
        return False
    for i, v in enumerate(cyc):
        want = (1 << cyc[i - 1]) | (1 << cyc[(i + 1) % k])
        if adj[v] & to_mask(cyc) != want:
            return False
    return True


def is_pattern(g: Graph, cert: Certificate) -> bool:
    """Re-check that a certificate really is what it claims to be in ``g``."""
    vs = list(cert.vertices)
    if any(not 0 <= v < g.n for v in vs):
        return False
    if cert.kind == "hole":
        return len(vs) >= 5 and _is_induced_cycle(g.adj, vs)
    if cert.kind == "antihole":
        return len(vs) >= 5 and _is_induced_cycle(complement(g).adj, vs)
    if cert.kind == "clique-separator":
        from .decompose import is_clique_separator

        return is_clique_separator(g, vs)
    if cert.kind in PATTERN_EDGES:
        if len(set(vs)) != len(vs):
            return False
        return induced_on_ordered(g, vs).adj == pattern_graph(cert.kind).adj
    return False


# recognition ------------------------------------------------------------------


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order; ties go to the smallest id."""
    count = [0] * g.n
    unvisited = g.all_mask
    order = []
    for _ in range(g.n):
        v = max(iter_bits(unvisited), key=lambda u: (count[u], -u))
        order.append(v)
        unvisited &= ~(1 << v)
        for u in iter_bits(g.adj[v] & unvisited):
            count[u] += 1
    return order


def is_perfect_elimination(g: Graph, order) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in iter_bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        rest = to_mask(later) & ~(1 << parent)
        if rest & ~g.adj[parent]:
            return False
    return True


def is_chordal(g: Graph) -> tuple[bool, list[int] | None]:
    """Return ``(True, peo)`` with a perfect elimination ordering, else ``(False, None)``."""
    peo = mcs_order(g)[::-1]
    if is_perfect_elimination(g, peo):
        return True, peo
    return False, None


def is_weakly_chordal(g: Graph) -> tuple[bool, Certificate | None]:
    cert = find_hole(g) or find_antihole(g)
    return cert is None, cert


def is_matched_co_bipartite(g: Graph) -> MCBWitness | None:
    """Witness that ``g`` is two k-cliques plus a perfect matching, or ``None``.

    The clique containing vertex 0 is reported as ``left``; when several
    splits exist (k <= 2) the lexicographically smallest left side wins.
    """
    n = g.n
    if n < 2 or n % 2:
        return None
    k = n // 2
    if any(a.bit_count() != k for a in g.adj):
        return None
    co = complement(g).adj
    comps = components_mask(co, g.all_mask)
    if len(comps) > 2:
        return None
    sides = []
    for comp in comps:
        root = lowest_bit(comp)
        colour = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(co[v]):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
        sides.append((to_mask(v for v, c in colour.items() if c == 0),
                      to_mask(v for v, c in colour.items() if c == 1)))
    options = [0]
    for first, second in sides:
        options = [o | s for o in options for s in (first, second)]
    best = None
    for left in options:
        right = g.all_mask & ~left
        if left.bit_count() != k or not left & 1:
            continue
        if not (is_clique_mask(g.adj, left) and is_clique_mask(g.adj, right)):
            continue
        lefts = list(iter_bits(left))
        partners = [g.adj[v] & right for v in lefts]
        if any(p.bit_count() != 1 for p in partners):
            continue
        rights = [lowest_bit(p) for p in partners]
        if len(set(rights)) != k:
            continue
        cand = MCBWitness(tuple(lefts), tuple(rights))
        if best is None or cand.left < best.left:
            best = cand
    return best


def split_universal_clique(g: Graph) -> tuple[list[int], Graph, list[int]]:
    """Universal vertices ``U`` and ``G - U`` (with its id remap)."""
    universal = [v for v in range(g.n) if g.adj[v].bit_count() == g.n - 1]
    rest, remap = induced_subgraph(g, (v for v in range(g.n) if v not in set(universal)))
    return universal, rest, remap
