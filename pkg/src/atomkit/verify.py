"""Brute-force oracles and executable adjacency checks around an induced co-C6.

The oracles here deliberately share no search code with :mod:`atomkit.detect`
or :mod:`atomkit.solve`; they enumerate subsets, colourings and orderings
directly and are the ground truth for the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations

from .config import DEFAULT
from .decompose import find_any_clique_separator
from .detect import is_matched_co_bipartite, pattern_graph, split_universal_clique
from .errors import BoundExceeded, NotCoC6, PreconditionUnverified
from .graph import (
    Graph,
    complement,
    component_of,
    induced_on_ordered,
    is_clique_mask,
    iter_bits,
    mask_to_list,
    to_mask,
)

# isomorphism ------------------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _canonical(n: int, adj: tuple[int, ...]) -> tuple:
    degs = [a.bit_count() for a in adj]
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(degs[v], []).append(v)
    keys = sorted(classes)
    best = None

    def code(order):
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v]))
                            for u in order for v in iter_bits(adj[u]) if u < v))

    def rec(i, prefix):
        nonlocal best
        if i == len(keys):
            c = code(prefix)
            if best is None or c < best:
                best = c
            return
        for perm in permutations(classes[keys[i]]):
            rec(i + 1, prefix + list(perm))

    rec(0, [])
    return (n, tuple(sorted(degs)), best)


def canonical_form(g: Graph, bound: int = DEFAULT.pattern) -> tuple:
    """Isomorphism-invariant code: minimum edge list over degree-sorted labellings."""
    if g.n > bound:
        raise BoundExceeded(f"canonical form limited to n <= {bound}")
    return _canonical(g.n, g.adj)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g, max(g.n, 1)) == canonical_form(h, max(h.n, 1))


def oracle_contains_induced(g: Graph, h: Graph, bound: int = DEFAULT.induced,
                            pattern_bound: int = DEFAULT.pattern) -> bool:
    """Scan every |V(H)|-subset of ``g`` for an induced copy of ``h``."""
    if g.n > bound:
        raise BoundExceeded(f"induced-subgraph oracle limited to n <= {bound}")
    if h.n > pattern_bound:
        raise BoundExceeded(f"pattern size limited to {pattern_bound}")
    if h.n > g.n:
        return False
    target = canonical_form(h, pattern_bound)
    m, degs = h.m, target[1]
    for sub in combinations(range(g.n), h.n):
        mask = to_mask(sub)
        ds = sorted((g.adj[v] & mask).bit_count() for v in sub)
        if sum(ds) != 2 * m or tuple(ds) != degs:
            continue
        if canonical_form(induced_on_ordered(g, sub), pattern_bound) == target:
            return True
    return False


def _has_induced_long_cycle(n: int, adj, bound: int) -> bool:
    if n > bound:
        raise BoundExceeded(f"cycle oracle limited to n <= {bound}")
    for k in range(5, n + 1):
        for sub in combinations(range(n), k):
            mask = to_mask(sub)
            if all((adj[v] & mask).bit_count() == 2 for v in sub):
                if component_of(adj, sub[0], mask) == mask:
                    return True
    return False


def oracle_has_hole(g: Graph, bound: int = DEFAULT.induced) -> bool:
    return _has_induced_long_cycle(g.n, g.adj, bound)


def oracle_has_antihole(g: Graph, bound: int = DEFAULT.induced) -> bool:
    return _has_induced_long_cycle(g.n, complement(g).adj, bound)


def oracle_contains_pattern(g: Graph, kind: str, bound: int = DEFAULT.induced) -> bool:
    if kind == "hole":
        return oracle_has_hole(g, bound)
    if kind == "antihole":
        return oracle_has_antihole(g, bound)
    return oracle_contains_induced(g, pattern_graph(kind), bound)


def oracle_hp_free(g: Graph, bound: int = DEFAULT.induced) -> bool:
    return not oracle_has_hole(g, bound) and not oracle_contains_induced(
        g, pattern_graph("paraglider"), bound)


def oracle_hd_free(g: Graph, bound: int = DEFAULT.induced) -> bool:
    return not oracle_has_hole(g, bound) and not oracle_contains_induced(
        g, pattern_graph("diamond"), bound)


def oracle_member(g: Graph, mode: str, bound: int = DEFAULT.induced) -> bool:
    return oracle_hp_free(g, bound) if mode == "HP" else oracle_hd_free(g, bound)


# optimisation oracles -----------------------------------------------------------


def _require(n: int, bound: int, what: str) -> None:
    if n > bound:
        raise BoundExceeded(f"{what} oracle limited to n <= {bound}, got {n}")


def _subset_table(g: Graph, clique: bool) -> list[bool]:
    ok = [True] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if clique:
            ok[mask] = ok[rest] and (g.adj[v] & rest) == rest
        else:
            ok[mask] = ok[rest] and not g.adj[v] & rest
    return ok


def _best_subset(g: Graph, clique: bool) -> int:
    ok = _subset_table(g, clique)
    best = 0
    for mask, good in enumerate(ok):
        if good:
            best = max(best, sum(g.weights[v] for v in iter_bits(mask)))
    return best


def oracle_mwis(g: Graph, bound: int = DEFAULT.oracle) -> int:
    _require(g.n, bound, "MWIS")
    return _best_subset(g, clique=False)


def oracle_clique(g: Graph, bound: int = DEFAULT.oracle) -> int:
    _require(g.n, bound, "clique")
    return _best_subset(g, clique=True)


def _colourable(g: Graph, k: int) -> bool:
    colour = [0] * g.n

    def place(v):
        if v == g.n:
            return True
        used = {colour[u] for u in iter_bits(g.adj[v]) if u < v}
        for c in range(1, k + 1):
            if c not in used:
                colour[v] = c
                if place(v + 1):
                    return True
                # colours above the largest used so far are interchangeable
                if c > max(colour[:v], default=0):
                    break
        return False

    return place(0)


def oracle_chromatic(g: Graph, bound: int = DEFAULT.oracle) -> int:
    _require(g.n, bound, "chromatic")
    for k in range(g.n + 1):
        if _colourable(g, k):
            return k
    raise AssertionError("unreachable")


def oracle_fill_in(g: Graph, bound: int = DEFAULT.oracle_fill) -> int:
    """Minimum fill over all elimination orderings (DFS with best-so-far pruning)."""
    _require(g.n, bound, "fill-in")
    best = [g.n * g.n]

    def rec(adj, alive, cost):
        if cost >= best[0]:
            return
        if not alive:
            best[0] = cost
            return
        for v in iter_bits(alive):
            nb = adj[v] & alive
            added = 0
            new = list(adj)
            for u in iter_bits(nb):
                missing = nb & ~new[u] & ~(1 << u)
                added += missing.bit_count()
                new[u] |= missing
            rec(new, alive & ~(1 << v), cost + added // 2)

    rec(list(g.adj), g.all_mask, 0)
    return best[0]


def oracle_mwim(g: Graph, bound: int = DEFAULT.oracle) -> int:
    """Maximum induced matching weight; an edge weighs the sum of its endpoint weights."""
    _require(g.n, bound, "induced matching")
    edges = g.edges()
    best = 0

    def rec(i, blocked, value):
        nonlocal best
        best = max(best, value)
        for j in range(i, len(edges)):
            u, v = edges[j]
            if blocked >> u & 1 or blocked >> v & 1:
                continue
            closed = g.adj[u] | g.adj[v] | (1 << u) | (1 << v)
            rec(j + 1, blocked | closed, value + g.weights[u] + g.weights[v])

    rec(0, 0, 0)
    return best


# co-C6 neighbourhood context ----------------------------------------------------


@dataclass
class CoC6Context:
    """Distance structure of a host graph around an induced co-C6.

    ``coc6`` is ``[l0, l1, l2, r0, r1, r2]`` with ``li ~ ri`` the matching edges.
    ``layers[i]`` holds the outside vertices with exactly ``i`` neighbours in
    the co-C6; ``rings[0]`` is the co-C6 itself and ``rings[i]`` is distance ``i``.
    """

    coc6: list[int]
    trace: dict[int, int]
    rings: list[list[int]]
    layers: dict[int, list[int]]
    a2_on_edge: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    a1_on_edge: dict[tuple[int, int], list[tuple[int, int]]] = field(default_factory=dict)

    @property
    def left(self) -> list[int]:
        return self.coc6[:3]

    @property
    def right(self) -> list[int]:
        return self.coc6[3:]

    @property
    def matching(self) -> list[tuple[int, int]]:
        return list(zip(self.left, self.right))

    @property
    def mask(self) -> int:
        return to_mask(self.coc6)

    @property
    def d1(self) -> list[int]:
        return self.rings[1] if len(self.rings) > 1 else []


def _canonical_coc6(g: Graph, vs) -> list[int] | None:
    vs = list(vs)
    if len(vs) != 6 or len(set(vs)) != 6:
        return None
    sub = induced_on_ordered(g, vs)
    if sub.adj == pattern_graph("coC6").adj:
        return vs
    wit = is_matched_co_bipartite(sub)
    if wit is None or wit.k != 3:
        return None
    return [vs[i] for i in wit.left] + [vs[i] for i in wit.right]


def build_coc6_context(g: Graph, coc6) -> CoC6Context:
    order = _canonical_coc6(g, coc6)
    if order is None:
        raise NotCoC6(f"vertices {list(coc6)} do not induce a co-C6")
    a_mask = to_mask(order)
    rings = [list(order)]
    seen = a_mask
    frontier = a_mask
    while True:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        if not frontier:
            break
        rings.append(mask_to_list(frontier))
        seen |= frontier
    trace = {}
    layers = {i: [] for i in range(1, 7)}
    for v in (rings[1] if len(rings) > 1 else []):
        t = g.adj[v] & a_mask
        trace[v] = t
        layers[t.bit_count()].append(v)
    ctx = CoC6Context(order, trace, rings, layers)
    a1 = set(layers[1])
    for x, y in ctx.matching:
        ctx.a2_on_edge[(x, y)] = [u for u in layers[2] if trace[u] == (1 << x) | (1 << y)]
        ctx.a1_on_edge[(x, y)] = [
            (u, v) for u in sorted(a1) for v in sorted(a1)
            if trace[u] == 1 << x and trace[v] == 1 << y and g.adjacent(u, v)
        ]
    return ctx


@dataclass
class CheckResult:
    status: str  # "pass" | "fail" | "skipped"
    checked: int = 0
    witness: list | None = None

    def to_json(self) -> dict:
        return {"status": self.status, "checked": self.checked, "witness": self.witness}


@dataclass
class PropertyReport:
    results: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results.values())

    @property
    def failures(self) -> dict[str, CheckResult]:
        return {k: r for k, r in self.results.items() if r.status == "fail"}

    def to_json(self) -> dict:
        return {"ok": self.ok, "results": {k: r.to_json() for k, r in self.results.items()}}


class _Checker:
    """Accumulates one named predicate; the first counterexample is kept."""

    def __init__(self, report: PropertyReport, name: str):
        self.result = CheckResult("pass")
        report.results[name] = self.result

    def check(self, cond: bool, witness) -> None:
        self.result.checked += 1
        if not cond and self.result.status == "pass":
            self.result.status = "fail"
            self.result.witness = list(witness)


def _induced_path(g: Graph, vs) -> bool:
    """``vs`` is an induced path in the given order."""
    mask = to_mask(vs)
    for i, v in enumerate(vs):
        want = 0
        if i:
            want |= 1 << vs[i - 1]
        if i + 1 < len(vs):
            want |= 1 << vs[i + 1]
        if g.adj[v] & mask != want:
            return False
    return True


def _comparable(a: int, b: int) -> bool:
    return a & b == a or a & b == b


def check_coc6_properties(g: Graph, ctx: CoC6Context, is_atom: bool = False,
                          mode: str = "HP", verified: bool = False,
                          bound: int = DEFAULT.induced) -> PropertyReport:
    """Evaluate the adjacency rules that hold around a co-C6 in an HP-free
    (or HD-free) graph.  Rules that only hold in atoms run when ``is_atom``.

    Unless ``verified`` is set, class membership is established here by the
    brute-force oracle; ``is_atom`` is always confirmed by separator search.
    """
    if not verified and not oracle_member(g, mode, bound):
        raise PreconditionUnverified(f"graph is not {mode}-free")
    if is_atom and find_any_clique_separator(g, DEFAULT.separator) is not None:
        raise PreconditionUnverified("is_atom set but the graph has a clique separator")

    report = PropertyReport()
    adj = g.adj
    A = ctx.mask
    tr = ctx.trace
    layer_of = {v: t.bit_count() for v, t in tr.items()}

    c = _Checker(report, "nonadjacent_pairs_have_p4_and_p3s")
    for x, y in combinations(ctx.coc6, 2):
        if g.adjacent(x, y):
            continue
        found = False
        others = [v for v in ctx.coc6 if v not in (x, y)]
        for a, b, cc, d in permutations(others, 4):
            if (_induced_path(g, [x, a, b, y]) and _induced_path(g, [x, cc, y])
                    and _induced_path(g, [x, d, y]) and _induced_path(g, [cc, a, b, d])):
                found = True
                break
        c.check(found, [x, y])

    c = _Checker(report, "adjacent_a1_traces_adjacent")
    for u, v in combinations(ctx.layers[1], 2):
        if g.adjacent(u, v) and tr[u] != tr[v]:
            t, z = (tr[u] & -tr[u]).bit_length() - 1, (tr[v] & -tr[v]).bit_length() - 1
            c.check(g.adjacent(t, z), [u, v])

    c = _Checker(report, "a2_trace_is_edge")
    for v in ctx.layers[2]:
        c.check(is_clique_mask(adj, tr[v]), [v])

    c = _Checker(report, "a3_trace_is_triangle")
    for v in ctx.layers[3]:
        c.check(is_clique_mask(adj, tr[v]), [v])

    c = _Checker(report, "no_a4_a5")
    for v in ctx.layers[4] + ctx.layers[5]:
        c.check(False, [v])

    c = _Checker(report, "a6_is_clique")
    for u, v in combinations(ctx.layers[6], 2):
        c.check(g.adjacent(u, v), [u, v])

    if mode == "HD":
        c = _Checker(report, "a6_empty")
        for v in ctx.layers[6]:
            c.check(False, [v])

    c = _Checker(report, "non_clique_trace_implies_a6")
    for v, t in tr.items():
        if not is_clique_mask(adj, t):
            c.check(layer_of[v] == 6, [v])

    c = _Checker(report, "adjacent_traces_nested")
    for x, y in combinations(tr, 2):
        if not g.adjacent(x, y):
            continue
        lx, ly = layer_of[x], layer_of[y]
        if lx > ly:
            x, y, lx, ly = y, x, ly, lx
        if (lx == 1 and ly in (2, 3)) or (lx == 2 and ly == 3):
            c.check(_comparable(tr[x], tr[y]), [x, y])

    c = _Checker(report, "adjacent_a2_union_clique")
    for x, y in combinations(ctx.layers[2], 2):
        if g.adjacent(x, y):
            c.check(is_clique_mask(adj, tr[x] | tr[y]), [x, y])

    # restricted to A1 | A2 | A3: two adjacent universal vertices already
    # violate the rule in any clique joined to a co-C6
    c = _Checker(report, "adjacent_low_layers_union_clique")
    low = [v for v in tr if layer_of[v] <= 3]
    for x, y in combinations(low, 2):
        if g.adjacent(x, y) and not (layer_of[x] == 3 and layer_of[y] == 3):
            c.check(is_clique_mask(adj, tr[x] | tr[y]), [x, y])

    c = _Checker(report, "outer_paths_short_and_nested")
    d1_mask = to_mask(tr)
    outer = g.all_mask & ~A & ~d1_mask
    for x, y in combinations(sorted(tr), 2):
        if g.adjacent(x, y):
            continue
        for path in _chordless_paths(g, x, y, outer):
            c.check(len(path) == 3 and _comparable(tr[x], tr[y]), path)

    astar_left, astar_right = _maximal_mcb(g, ctx)
    c = _Checker(report, "a6_total_on_maximal_mcb")
    astar = to_mask(astar_left + astar_right)
    for v in ctx.layers[6]:
        c.check(adj[v] & astar == astar, [v] + astar_left + astar_right)

    c = _Checker(report, "opposite_a3_outside_mcb_nonadjacent")
    lmask, rmask = to_mask(ctx.left), to_mask(ctx.right)
    xs = [v for v in ctx.layers[3] if tr[v] == lmask and not astar >> v & 1]
    ys = [v for v in ctx.layers[3] if tr[v] == rmask and not astar >> v & 1]
    for x in xs:
        for y in ys:
            c.check(not g.adjacent(x, y), [x, y])

    if is_atom:
        c = _Checker(report, "matching_edge_private_sets_empty")
        for xy in ctx.matching:
            for u in ctx.a2_on_edge[xy]:
                c.check(False, [u, *xy])
            for u, v in ctx.a1_on_edge[xy]:
                c.check(False, [u, v, *xy])
    else:
        report.results["matching_edge_private_sets_empty"] = CheckResult("skipped")
    return report


def _chordless_paths(g: Graph, x: int, y: int, inner: int):
    """Induced x-y paths with at least one inner vertex, all inner vertices in ``inner``."""
    adj = g.adj

    def rec(path, used):
        last = path[-1]
        for w in iter_bits(adj[last] & inner & ~used):
            if adj[w] & used & ~(1 << last):
                continue
            if adj[w] >> y & 1:
                if not adj[y] & used:
                    yield path + [w, y]
                continue
            yield from rec(path + [w], used | (1 << w))

    yield from rec([x], 1 << x)


def _maximal_mcb(g: Graph, ctx: CoC6Context) -> tuple[list[int], list[int]]:
    """Greedily extend the co-C6 by matched pairs to a maximal MCB subgraph."""
    left, right = list(ctx.left), list(ctx.right)
    grown = True
    while grown:
        grown = False
        lm, rm = to_mask(left), to_mask(right)
        for u in range(g.n):
            if (lm | rm) >> u & 1:
                continue
            if g.adj[u] & lm != lm or g.adj[u] & rm:
                continue
            for v in iter_bits(g.adj[u] & ~(lm | rm)):
                if g.adj[v] & rm == rm and not g.adj[v] & lm:
                    left.append(u)
                    right.append(v)
                    grown = True
                    break
            if grown:
                break
    return left, right


def check_structure_theorem(atom: Graph, mode: str = "HP", verified: bool = False,
                            bound: int = DEFAULT.induced) -> bool:
    """Universal vertices form a clique and the rest is a matched co-bipartite graph
    (with no universal vertices at all in HD mode)."""
    if not verified:
        if not oracle_member(atom, mode, bound):
            raise PreconditionUnverified(f"graph is not {mode}-free")
        if not oracle_contains_induced(atom, pattern_graph("coC6"), bound):
            raise PreconditionUnverified("graph contains no induced co-C6")
        if find_any_clique_separator(atom, DEFAULT.separator) is not None:
            raise PreconditionUnverified("graph is not an atom")
    universal, rest, _ = split_universal_clique(atom)
    if not is_clique_mask(atom.adj, to_mask(universal)):
        return False
    if mode == "HD" and universal:
        return False
    return is_matched_co_bipartite(rest) is not None


def find_coc6s(g: Graph) -> list[list[int]]:
    """Every induced co-C6 of ``g`` (as canonical vertex lists), by subset scan."""
    out = []
    for sub in combinations(range(g.n), 6):
        order = _canonical_coc6(g, sub)
        if order is not None:
            out.append(order)
    return out
