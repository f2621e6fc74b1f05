"""Named graphs and seeded random generators.

All randomness goes through ``random.Random(seed)`` (Mersenne Twister), so a
``GenSpec`` always rebuilds the same labelled graph.

The HP-free synthesizer glues blocks along cliques.  A hole or a paraglider
has no clique separator, so any copy of one in a clique-sum sits inside a
single block; gluing HP-free blocks therefore stays HP-free.  A diamond does
have a clique separator (its middle edge), which is why the HD-free variant
only glues on single vertices.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from .detect import find_pattern, pattern_graph
from .errors import NotClique, SizeMismatch, UnknownName
from .graph import Graph, build_graph, complement, from_adjacency, is_clique, join_compose, relabel

FAMILIES = ("named", "random-gnp", "random-chordal", "mcb", "mcb-join-clique",
            "hp-glued", "hd-glued", "hp-grown")


# named graphs ---------------------------------------------------------------------


def path(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise UnknownName(f"C_{k}: cycles need at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def clique(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def mcb(k: int) -> Graph:
    """Matched co-bipartite graph: cliques 0..k-1 and k..2k-1, matching i -- k+i."""
    if k < 1:
        raise UnknownName("mcb(k) needs k >= 1")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    return build_graph(2 * k, edges)


def co_matched_bipartite(k: int) -> Graph:
    return complement(mcb(k))


_SIZED = {
    "P": path, "C": cycle, "K": clique,
    "mcb": mcb, "co-matched-bipartite": co_matched_bipartite,
}


def named(name: str) -> Graph:
    """P_k / C_k / K_k (``P4`` also accepted), ``mcb(k)``, ``co-matched-bipartite(k)``,
    the fixed patterns (diamond, paraglider, dart, gem, coC6) and ``bowtie``."""
    key = name.strip()
    if key in ("diamond", "paraglider", "dart", "gem", "coC6"):
        return pattern_graph(key)
    if key == "bowtie":
        return build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    m = re.fullmatch(r"([PCK])_?(\d+)", key) or re.fullmatch(r"(mcb|co-matched-bipartite)\((\d+)\)", key)
    if m is None:
        raise UnknownName(f"unknown graph name {name!r}")
    return _SIZED[m.group(1)](int(m.group(2)))


# random graphs ----------------------------------------------------------------------


def random_gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _random_clique(rng: random.Random, adj: list[int], n: int, keep: float) -> list[int]:
    """A random clique through a random vertex; each candidate is kept with prob ``keep``."""
    v = rng.randrange(n)
    chosen = [v]
    cand = [u for u in range(n) if adj[v] >> u & 1]
    rng.shuffle(cand)
    for u in cand:
        if all(adj[u] >> x & 1 for x in chosen) and rng.random() < keep:
            chosen.append(u)
    return chosen


def random_chordal(n: int, density: float = 0.5, seed: int = 0) -> Graph:
    """Each new vertex attaches to a random clique of the graph so far.

    The reverse insertion order is a perfect elimination ordering.
    """
    if n < 1:
        raise ValueError("random_chordal needs n >= 1")
    rng = random.Random(seed)
    adj = [0] * n
    for v in range(1, n):
        for u in _random_clique(rng, adj, v, density):
            adj[v] |= 1 << u
            adj[u] |= 1 << v
    return from_adjacency(adj)


def mcb_join_clique(k: int, c: int, seed: int = 0) -> Graph:
    """``mcb(k)`` joined to ``K_c``, randomly relabelled (identity for seed=None)."""
    g = join_compose(mcb(k), clique(c)) if c else mcb(k)
    if seed is None:
        return g
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return relabel(g, perm)


def glue_on_clique(g1: Graph, c1, g2: Graph, c2) -> Graph:
    """Identify clique ``c1`` of ``g1`` with clique ``c2`` of ``g2`` position by position.

    ``g1`` keeps its ids; the other vertices of ``g2`` follow in increasing order.
    """
    c1, c2 = list(c1), list(c2)
    if len(c1) != len(c2):
        raise SizeMismatch(f"cliques of sizes {len(c1)} and {len(c2)}")
    if not is_clique(g1, c1) or not is_clique(g2, c2):
        raise NotClique("glue sets must be cliques")
    ids = {b: a for a, b in zip(c1, c2)}
    nxt = g1.n
    for v in range(g2.n):
        if v not in ids:
            ids[v] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(ids[u], ids[v]) for u, v in g2.edges()]
    weights = list(g1.weights) + [0] * (nxt - g1.n)
    for v in range(g2.n):
        if ids[v] >= g1.n:
            weights[ids[v]] = g2.weights[v]
    return build_graph(nxt, edges, weights)


class _Builder:
    """Mutable adjacency used while gluing many blocks (glue_on_clique copies)."""

    def __init__(self):
        self.adj: list[int] = []

    @property
    def n(self) -> int:
        return len(self.adj)

    def glue(self, block: Graph, host_clique: list[int], block_clique: list[int]) -> None:
        ids = dict(zip(block_clique, host_clique))
        for v in range(block.n):
            if v not in ids:
                ids[v] = len(self.adj)
                self.adj.append(0)
        for u, v in block.edges():
            a, b = ids[u], ids[v]
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a

    def graph(self) -> Graph:
        return from_adjacency(self.adj)


def _block_clique(rng: random.Random, block: Graph, size: int) -> list[int] | None:
    for _ in range(8):
        c = _random_clique(rng, list(block.adj), block.n, 1.0)
        if len(c) >= size:
            return rng.sample(c, size)
    return None


def _hp_block(rng: random.Random, max_block: int) -> Graph:
    kind = rng.random()
    if kind < 0.45:
        b = random_chordal(rng.randint(1, max_block), rng.uniform(0.3, 0.9), rng.randrange(1 << 30))
        # chordal pieces are paraglider-free (a paraglider contains a C4); keep the filter anyway
        return b if find_pattern(b, "paraglider") is None else clique(2)
    if kind < 0.6:
        return cycle(4)
    k = rng.randint(2, 4)
    c = rng.randint(0, max(0, min(3, max_block - 2 * k)))
    return mcb_join_clique(k, c, rng.randrange(1 << 30))


def _hd_block(rng: random.Random, max_block: int) -> Graph:
    kind = rng.random()
    if kind < 0.4:
        # chordal diamond-free blocks: trees of cliques glued on vertices
        return clique(rng.randint(1, min(4, max_block)))
    if kind < 0.6:
        return cycle(4)
    return mcb(rng.randint(2, min(4, max(2, max_block // 2))))


def _glued(n_target: int, seed: int, make_block, glue_sizes, first: Graph | None,
           max_block: int) -> Graph:
    rng = random.Random(seed)
    b = _Builder()
    b.glue(first if first is not None else make_block(rng, max_block), [], [])
    while b.n < n_target:
        block = make_block(rng, max_block)
        size = rng.choice(glue_sizes)
        host = _random_clique(rng, b.adj, b.n, 1.0)
        size = min(size, len(host))
        bc = _block_clique(rng, block, size)
        if bc is None:
            continue
        b.glue(block, rng.sample(host, size), bc)
    return b.graph()


def random_hp_free(n_target: int, seed: int = 0, with_coc6: bool = False,
                   max_block: int = 10) -> Graph:
    """Clique-sum of HP-free blocks (chordal pieces, C4s, cliques joined to MCBs).

    The result has at least ``n_target`` vertices and is connected.  With
    ``with_coc6`` the first block is a clique joined to an MCB with k >= 3.
    """
    if n_target < 1:
        raise ValueError("n_target must be >= 1")
    if n_target == 1 and not with_coc6:
        return clique(1)
    rng = random.Random(seed)
    first = None
    if with_coc6:
        first = mcb_join_clique(3, rng.randint(0, 2), rng.randrange(1 << 30))
    return _glued(n_target, rng.randrange(1 << 30), _hp_block, (1, 1, 2, 2, 3), first, max_block)


def random_hd_free(n_target: int, seed: int = 0, with_coc6: bool = False,
                   max_block: int = 8) -> Graph:
    """Blocks glued on single vertices: cliques, C4s and MCBs (no universal part)."""
    if n_target < 1:
        raise ValueError("n_target must be >= 1")
    if n_target == 1 and not with_coc6:
        return clique(1)
    rng = random.Random(seed)
    first = mcb(3) if with_coc6 else None
    return _glued(n_target, rng.randrange(1 << 30), _hd_block, (1,), first, max_block)


def random_hp_grown(n_target: int, seed: int = 0, p: float = 0.5, tries: int = 20) -> Graph:
    """Grow co-C6 one vertex at a time with random neighbourhoods that keep it HP-free.

    When no random neighbourhood works, the new vertex is made simplicial on a
    random clique, which is a clique sum with a complete graph and keeps the
    class.  Gives the mixed neighbourhood layers that clique sums never create.
    """
    from .classify import recognize_hp_free

    rng = random.Random(seed)
    adj = list(pattern_graph("coC6").adj)
    while len(adj) < n_target:
        n = len(adj)
        for _ in range(tries):
            nb = 0
            for u in range(n):
                if rng.random() < p:
                    nb |= 1 << u
            if not nb:
                continue
            trial = adj + [nb]
            for u in range(n):
                if nb >> u & 1:
                    trial[u] |= 1 << n
            if recognize_hp_free(from_adjacency(trial)).member:
                adj = trial
                break
        else:
            c = _random_clique(rng, adj, n, 1.0)
            adj.append(0)
            for u in c:
                adj[n] |= 1 << u
                adj[u] |= 1 << n
    return from_adjacency(adj)


def with_random_weights(g: Graph, lo: int, hi: int, seed: int) -> Graph:
    rng = random.Random(seed)
    return g.with_weights([rng.randint(lo, hi) for _ in range(g.n)])


# specs ------------------------------------------------------------------------------


def _flag(value) -> bool:
    """Booleans from the CLI arrive as strings."""
    if isinstance(value, str):
        v = value.strip().lower()
        if v in ("1", "true", "yes", "on"):
            return True
        if v in ("0", "false", "no", "off", ""):
            return False
        raise ValueError(f"expected a boolean, got {value!r}")
    return bool(value)


@dataclass(frozen=True)
class GenSpec:
    """Family name plus its parameters; ``build()`` is deterministic in (family, params, seed)."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def build(self) -> Graph:
        p = self.params
        f = self.family
        if f == "named":
            return named(p["name"])
        if f == "random-gnp":
            return random_gnp(int(p.get("n", 10)), float(p.get("p", 0.5)), self.seed)
        if f == "random-chordal":
            return random_chordal(int(p.get("n", 10)), float(p.get("density", 0.5)), self.seed)
        if f == "mcb":
            return mcb(int(p.get("k", 3)))
        if f == "mcb-join-clique":
            return mcb_join_clique(int(p.get("k", 3)), int(p.get("c", 1)), self.seed)
        if f == "hp-glued":
            return random_hp_free(int(p.get("n", 20)), self.seed, _flag(p.get("with_coc6", False)))
        if f == "hd-glued":
            return random_hd_free(int(p.get("n", 20)), self.seed, _flag(p.get("with_coc6", False)))
        if f == "hp-grown":
            return random_hp_grown(int(p.get("n", 10)), self.seed, float(p.get("p", 0.5)))
        raise UnknownName(f"unknown family {f!r}; expected one of {FAMILIES}")
