"""Exact optimisation through the clique separator decomposition.

Each problem is solved on the atoms and the atom solutions are combined
along the peel sequence.  Atoms shaped as a clique joined to a matched
co-bipartite graph get closed-form solvers; every other atom is handled by
an exact search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .classify import clique_join_mcb
from .config import DEFAULT
from .decompose import DecompositionTree, decompose_components
from .detect import find_pattern, is_chordal
from .errors import AtomTooLarge
from .graph import (
    Graph,
    add_edges,
    component_of,
    components_mask,
    induced_subgraph,
    is_clique_mask,
    iter_bits,
    lowest_bit,
    mask_to_list,
    to_mask,
)

PROBLEMS = ("mwis", "clique", "color", "fillin")


@dataclass(frozen=True)
class Solution:
    kind: str
    objective: int
    payload: Any

    def to_json(self) -> dict:
        if self.kind == "coloring":
            witness = {str(v): c for v, c in sorted(self.payload.items())}
        elif self.kind in ("fill-in", "induced-matching"):
            witness = [list(e) for e in self.payload]
        else:
            witness = list(self.payload)
        return {"kind": self.kind, "objective": self.objective, "witness": witness}


# atom shapes --------------------------------------------------------------------


@dataclass
class _Shape:
    """Closed-form structure of a clique-joined MCB atom, in host ids."""

    universal: list[int]
    left: list[int]
    right: list[int]

    @property
    def partner(self) -> dict[int, int]:
        p = dict(zip(self.left, self.right))
        p.update(zip(self.right, self.left))
        return p


def _atom_shape(g: Graph, atom: list[int]) -> _Shape | None:
    sub, ids = induced_subgraph(g, atom)
    found = clique_join_mcb(sub, "HP")
    if found is None:
        return None
    universal, wit = found
    return _Shape([ids[v] for v in universal], [ids[v] for v in wit.left],
                  [ids[v] for v in wit.right])


# MWIS -------------------------------------------------------------------------


def _clique_cover_bound(adj, w, mask: int) -> int:
    """Greedy clique partition; an independent set takes at most one vertex per clique."""
    bound = 0
    rest = mask
    while rest:
        v = lowest_bit(rest)
        clique = 1 << v
        cand = rest & adj[v]
        heaviest = w[v]
        while cand:
            u = lowest_bit(cand)
            clique |= 1 << u
            cand &= adj[u]
            heaviest = max(heaviest, w[u])
        bound += heaviest
        rest &= ~clique
    return bound


def _mwis_search(adj, w, mask: int) -> tuple[int, int]:
    """Exact MWIS of the subgraph induced by ``mask``; returns ``(value, set_mask)``.

    Non-positive vertices are never taken.  Branches on the vertex of largest
    degree (smallest id on ties), splits components, memoises on the mask and
    skips the exclusion branch when the clique-cover bound cannot beat the
    inclusion branch.
    """
    positive = 0
    for v in iter_bits(mask):
        if w[v] > 0:
            positive |= 1 << v
    memo: dict[int, tuple[int, int]] = {}

    def solve(m: int) -> tuple[int, int]:
        if not m:
            return 0, 0
        hit = memo.get(m)
        if hit is not None:
            return hit
        comp = component_of(adj, lowest_bit(m), m)
        if comp != m:
            a = solve(comp)
            b = solve(m & ~comp)
            res = (a[0] + b[0], a[1] | b[1])
        elif is_clique_mask(adj, m):
            best = max(iter_bits(m), key=lambda x: (w[x], -x))
            res = (w[best], 1 << best)
        else:
            v, deg = -1, -1
            for x in iter_bits(m):
                d = (adj[x] & m).bit_count()
                if d > deg:
                    v, deg = x, d
            sub_val, sub_set = solve(m & ~adj[v] & ~(1 << v))
            res = (sub_val + w[v], sub_set | (1 << v))
            rest = m & ~(1 << v)
            if _clique_cover_bound(adj, w, rest) > res[0]:
                exc = solve(rest)
                if exc[0] > res[0]:
                    res = exc
        memo[m] = res
        return res

    return solve(mask & positive)


def _mwis_shape(shape: _Shape, w, mask: int) -> tuple[int, int]:
    """MWIS inside an induced subgraph of a clique-joined MCB: one vertex, or a
    non-matched left/right pair."""
    best = (0, 0)
    for v in iter_bits(mask):
        if w[v] > best[0]:
            best = (w[v], 1 << v)
    partner = shape.partner
    lefts = [v for v in shape.left if mask >> v & 1 and w[v] > 0]
    rights = [v for v in shape.right if mask >> v & 1 and w[v] > 0]
    for a in lefts:
        for b in rights:
            if partner[a] != b and w[a] + w[b] > best[0]:
                best = (w[a] + w[b], (1 << a) | (1 << b))
    return best


def _atom_mwis_solver(g: Graph, atom: list[int]):
    shape = _atom_shape(g, atom)
    if shape is not None:
        return lambda w, mask: _mwis_shape(shape, w, mask)
    return lambda w, mask: _mwis_search(g.adj, w, mask)


def atom_mwis(atom: Graph) -> Solution:
    solver = _atom_mwis_solver(atom, list(range(atom.n)))
    value, s = solver(atom.weights, atom.all_mask)
    return Solution("independent-set", value, tuple(iter_bits(s)))


@dataclass
class MWISStep:
    """One peeled atom: the side values and the separator reweighting they caused."""

    atom: list[int]
    separator: list[int]
    alpha0: int
    alpha: dict[int, int]
    weights_before: dict[int, int]
    weights_after: dict[int, int]
    base_set: int = 0
    case_sets: dict[int, int] = field(default_factory=dict)


def _mwis_tree(g: Graph, tree: DecompositionTree, cur: list[int], steps: list) -> tuple[int, int]:
    offset = 0
    records = []
    for atom, sep in zip(tree.atoms, tree.separators):
        amask, smask = to_mask(atom), to_mask(sep)
        solver = _atom_mwis_solver(g, atom)
        private = amask & ~smask
        a0, a0_set = solver(cur, private)
        alpha, cases = {}, {}
        before = {v: cur[v] for v in sep}
        for v in sep:
            alpha[v], cases[v] = solver(cur, private & ~g.adj[v])
        for v in sep:
            cur[v] += alpha[v] - a0
        offset += a0
        steps.append(MWISStep(atom, sep, a0, alpha, before, {v: cur[v] for v in sep},
                              a0_set, cases))
        records.append((smask, a0_set, cases))
    last = tree.atoms[-1]
    value, chosen = _atom_mwis_solver(g, last)(cur, to_mask(last))
    for smask, a0_set, cases in reversed(records):
        hit = chosen & smask
        chosen |= cases[lowest_bit(hit)] if hit else a0_set
    return offset + value, chosen


def mwis_trace(g: Graph) -> tuple[Solution, list[MWISStep]]:
    """MWIS plus the per-atom reweighting record."""
    cur = list(g.weights)
    steps: list[MWISStep] = []
    total, chosen = 0, 0
    for tree in decompose_components(g):
        value, s = _mwis_tree(g, tree, cur, steps)
        total += value
        chosen |= s
    vs = tuple(iter_bits(chosen))
    if g.weight_of(vs) != total:
        raise AssertionError("witness weight disagrees with the combined value")
    return Solution("independent-set", total, vs), steps


def mwis(g: Graph) -> Solution:
    return mwis_trace(g)[0]


# maximum weight clique ----------------------------------------------------------


def _complement_rows(g: Graph, mask: int) -> list[int]:
    return [(mask & ~g.adj[v] & ~(1 << v)) if mask >> v & 1 else 0 for v in range(g.n)]


def _clique_search(g: Graph, mask: int) -> tuple[int, int]:
    return _mwis_search(_complement_rows(g, mask), g.weights, mask)


def _clique_diamond_free(g: Graph, mask: int) -> tuple[int, int]:
    """Every neighbourhood of a diamond-free graph is a disjoint union of cliques."""
    w = g.weights
    best = (0, 0)
    for v in iter_bits(mask):
        for comp in components_mask(g.adj, g.adj[v] & mask):
            val = w[v] + sum(w[u] for u in iter_bits(comp) if w[u] > 0)
            if val > best[0]:
                best = (val, comp | (1 << v))
        if w[v] > best[0]:
            best = (w[v], 1 << v)
    return best


def _clique_shape(shape: _Shape, w) -> tuple[int, int]:
    pos = lambda vs: [v for v in vs if w[v] > 0]  # noqa: E731
    base = pos(shape.universal)
    options = [pos(shape.left), pos(shape.right)]
    options += [pos([a, b]) for a, b in zip(shape.left, shape.right)]
    best = max(options, key=lambda vs: sum(w[v] for v in vs))
    chosen = base + best
    return sum(w[v] for v in chosen), to_mask(chosen)


def _atom_clique(g: Graph, atom: list[int]) -> tuple[int, int]:
    mask = to_mask(atom)
    if is_clique_mask(g.adj, mask):
        chosen = [v for v in atom if g.weights[v] > 0]
        return sum(g.weights[v] for v in chosen), to_mask(chosen)
    shape = _atom_shape(g, atom)
    if shape is not None:
        return _clique_shape(shape, g.weights)
    sub, _ = induced_subgraph(g, atom)
    if find_pattern(sub, "diamond") is None:
        return _clique_diamond_free(g, mask)
    return _clique_search(g, mask)


def max_weight_clique(g: Graph) -> Solution:
    """Every clique lies inside one atom, so the best atom clique is optimal."""
    best = (0, 0)
    for tree in decompose_components(g):
        for atom in tree.atoms:
            cand = _atom_clique(g, atom)
            if cand[0] > best[0]:
                best = cand
    return Solution("clique", best[0], tuple(iter_bits(best[1])))


# colouring ----------------------------------------------------------------------


def _dsatur_order_pick(adj, colour, uncoloured: int) -> int:
    best, key = -1, None
    for v in iter_bits(uncoloured):
        sat = len({colour[u] for u in iter_bits(adj[v]) if colour[u]})
        k = (sat, (adj[v] & uncoloured).bit_count(), -v)
        if key is None or k > key:
            best, key = v, k
    return best


def _dsatur_greedy(adj, n: int) -> list[int]:
    colour = [0] * n
    uncoloured = (1 << n) - 1
    while uncoloured:
        v = _dsatur_order_pick(adj, colour, uncoloured)
        used = {colour[u] for u in iter_bits(adj[v])}
        c = 1
        while c in used:
            c += 1
        colour[v] = c
        uncoloured &= ~(1 << v)
    return colour


def _colour_with(adj, n: int, k: int) -> list[int] | None:
    colour = [0] * n

    def rec(uncoloured: int, top: int) -> bool:
        if not uncoloured:
            return True
        v = _dsatur_order_pick(adj, colour, uncoloured)
        used = {colour[u] for u in iter_bits(adj[v])}
        for c in range(1, min(k, top + 1) + 1):
            if c in used:
                continue
            colour[v] = c
            if rec(uncoloured & ~(1 << v), max(top, c)):
                return True
        colour[v] = 0
        return False

    return colour if rec((1 << n) - 1, 0) else None


def _exact_colouring(sub: Graph) -> list[int]:
    """DSATUR upper bound, clique lower bound, then DSATUR backtracking in between."""
    n = sub.n
    if n == 0:
        return []
    greedy = _dsatur_greedy(sub.adj, n)
    upper = max(greedy)
    unit = sub.with_weights([1] * n)
    lower = _clique_search(unit, unit.all_mask)[0]
    for k in range(lower, upper):
        found = _colour_with(sub.adj, n, k)
        if found is not None:
            return found
    return greedy


def _atom_colouring(g: Graph, atom: list[int]) -> dict[int, int]:
    mask = to_mask(atom)
    if is_clique_mask(g.adj, mask):
        return {v: i + 1 for i, v in enumerate(atom)}
    shape = _atom_shape(g, atom)
    if shape is not None:
        out = {v: i + 1 for i, v in enumerate(shape.universal)}
        base = len(shape.universal)
        k = len(shape.left)
        for i, (a, b) in enumerate(zip(shape.left, shape.right)):
            out[a] = base + 1 + i
            out[b] = base + 1 + (i + 1) % k
        return out
    sub, ids = induced_subgraph(g, atom)
    return {ids[v]: c for v, c in enumerate(_exact_colouring(sub))}


def coloring(g: Graph) -> Solution:
    """Colour atoms exactly, then glue them in reverse peel order by permuting
    each atom's colours to agree on its separator clique."""
    colour: dict[int, int] = {}
    for tree in decompose_components(g):
        local = _atom_colouring(g, tree.atoms[-1])
        colour.update(local)
        for atom, sep in zip(reversed(tree.atoms[:-1]), reversed(tree.separators)):
            local = _atom_colouring(g, atom)
            perm = {local[s]: colour[s] for s in sep}
            taken = set(perm.values())
            spare = (c for c in range(1, len(atom) + len(taken) + 1) if c not in taken)
            for c in sorted(set(local.values()) - set(perm)):
                perm[c] = next(spare)
            sep_set = set(sep)
            for v in atom:
                if v not in sep_set:
                    colour[v] = perm[local[v]]
    used = max(colour.values(), default=0)
    return Solution("coloring", used, dict(sorted(colour.items())))


# minimum fill-in ------------------------------------------------------------------


def _exact_fill(sub: Graph) -> list[tuple[int, int]]:
    """Minimum triangulation by dynamic programming over eliminated sets.

    Eliminating ``v`` after the set ``S`` makes it adjacent to everything
    outside ``S`` reachable from ``v`` through ``S``; the triangulation's edge
    count is the sum of those sizes.
    """
    n, adj = sub.n, sub.adj
    full = sub.all_mask
    inf = n * n + 1
    cost = [inf] * (1 << n)
    pick = [-1] * (1 << n)
    cost[0] = 0
    for s in range(1 << n):
        base = cost[s]
        if base == inf:
            continue
        for v in iter_bits(full & ~s):
            comp = component_of(adj, v, s | (1 << v))
            reach = 0
            for x in iter_bits(comp):
                reach |= adj[x]
            t = s | (1 << v)
            val = base + (reach & ~t).bit_count()
            if val < cost[t]:
                cost[t] = val
                pick[t] = v
    order = []
    s = full
    while s:
        v = pick[s]
        order.append(v)
        s &= ~(1 << v)
    order.reverse()
    return _elimination_fill(adj, order)


def _elimination_fill(adj, order) -> list[tuple[int, int]]:
    cur = list(adj)
    alive = to_mask(order)
    fill = []
    for v in order:
        alive &= ~(1 << v)
        nb = list(iter_bits(cur[v] & alive))
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not cur[a] >> b & 1:
                    cur[a] |= 1 << b
                    cur[b] |= 1 << a
                    fill.append((min(a, b), max(a, b)))
    return fill


def min_fill_in(g: Graph, bound: int = DEFAULT.fill_exact) -> Solution:
    """Minimum fill-in as the union of exact atom fill-ins (separators are cliques)."""
    fill: list[tuple[int, int]] = []
    for tree in decompose_components(g):
        for atom in tree.atoms:
            if is_clique_mask(g.adj, to_mask(atom)):
                continue
            sub, ids = induced_subgraph(g, atom)
            if is_chordal(sub)[0]:
                continue
            if sub.n > bound:
                raise AtomTooLarge(f"atom with {sub.n} vertices exceeds exact fill-in bound {bound}")
            fill.extend(sorted((ids[a], ids[b]) for a, b in _exact_fill(sub)))
    fill = sorted(set(fill))
    return Solution("fill-in", len(fill), tuple(fill))


# induced matching on atoms ------------------------------------------------------------


def _edge_weight(g: Graph, e) -> int:
    return g.weights[e[0]] + g.weights[e[1]]


def _far_apart(g: Graph, e, f) -> bool:
    span = g.adj[e[0]] | g.adj[e[1]] | (1 << e[0]) | (1 << e[1])
    return not (span >> f[0] & 1 or span >> f[1] & 1)


def mwim_atom(atom: Graph, bound: int = DEFAULT.mwim_exact) -> Solution:
    """Maximum weight induced matching of an atom (edge weight = endpoint weight sum).

    Clique-joined MCB atoms contain no induced 3K2, so scanning single edges
    and pairs of edges is exhaustive; other atoms are searched outright.
    """
    edges = atom.edges()
    best: tuple[int, tuple] = (0, ())
    if clique_join_mcb(atom, "HP") is not None:
        for i, e in enumerate(edges):
            if _edge_weight(atom, e) > best[0]:
                best = (_edge_weight(atom, e), (e,))
            for f in edges[i + 1:]:
                val = _edge_weight(atom, e) + _edge_weight(atom, f)
                if val > best[0] and _far_apart(atom, e, f):
                    best = (val, (e, f))
        return Solution("induced-matching", best[0], best[1])
    if atom.n > bound:
        raise AtomTooLarge(f"atom with {atom.n} vertices exceeds induced matching bound {bound}")

    def rec(i: int, blocked: int, chosen: list, value: int):
        nonlocal best
        if value > best[0]:
            best = (value, tuple(chosen))
        for j in range(i, len(edges)):
            u, v = edges[j]
            if (blocked >> u | blocked >> v) & 1:
                continue
            chosen.append(edges[j])
            span = atom.adj[u] | atom.adj[v] | (1 << u) | (1 << v)
            rec(j + 1, blocked | span, chosen, value + _edge_weight(atom, edges[j]))
            chosen.pop()

    rec(0, 0, [], 0)
    return Solution("induced-matching", best[0], best[1])


# feasibility ---------------------------------------------------------------------


def is_feasible(g: Graph, sol: Solution) -> bool:
    """Payload is a valid object of its kind in ``g`` and ``objective`` is its value."""
    p = sol.payload
    if sol.kind == "independent-set":
        m = to_mask(p)
        return all(not g.adj[v] & m for v in p) and sol.objective == g.weight_of(p)
    if sol.kind == "clique":
        return is_clique_mask(g.adj, to_mask(p)) and sol.objective == g.weight_of(p)
    if sol.kind == "coloring":
        if set(p) != set(range(g.n)) or any(c < 1 for c in p.values()):
            return False
        if any(p[u] == p[v] for u, v in g.edges()):
            return False
        return sol.objective == max(p.values(), default=0)
    if sol.kind == "fill-in":
        if any(g.adjacent(u, v) or u == v for u, v in p):
            return False
        return is_chordal(add_edges(g, p))[0] and sol.objective == len(set(p))
    if sol.kind == "induced-matching":
        if any(not g.adjacent(u, v) for u, v in p):
            return False
        for i, e in enumerate(p):
            for f in p[i + 1:]:
                if not _far_apart(g, e, f):
                    return False
        return sol.objective == sum(_edge_weight(g, e) for e in p)
    return False


def solve(g: Graph, problem: str) -> Solution:
    if problem == "mwis":
        return mwis(g)
    if problem == "clique":
        return max_weight_clique(g)
    if problem == "color":
        return coloring(g)
    if problem == "fillin":
        return min_fill_in(g)
    raise ValueError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")


__all__ = [
    "Solution", "MWISStep", "atom_mwis", "mwis", "mwis_trace", "max_weight_clique",
    "coloring", "min_fill_in", "mwim_atom", "is_feasible", "solve", "mask_to_list",
]
