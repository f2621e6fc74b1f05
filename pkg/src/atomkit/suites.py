"""Batteries shared by ``atomkit verify``, ``atomkit bench`` and the scripts."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .classify import CLIQUE_JOIN_MCB, classify_atom, recognize
from .config import DEFAULT, Bounds
from .decompose import decompose_components, find_any_clique_separator
from .detect import find_pattern, is_pattern
from .generate import random_gnp, random_hp_free, random_hp_grown, random_hd_free, with_random_weights
from .graph import Graph, induced_subgraph, is_connected
from .solve import coloring, is_feasible, max_weight_clique, min_fill_in, mwis
from .verify import (
    build_coc6_context,
    check_coc6_properties,
    check_structure_theorem,
    oracle_chromatic,
    oracle_clique,
    oracle_fill_in,
    oracle_member,
    oracle_mwis,
)


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "checked": self.checked, "ok": self.ok,
                "failures": self.failures}


def coc6_corpus(count: int, seed: int, n_max: int = 14, mode: str = "HP"):
    """HP-free (or HD-free) graphs that contain a co-C6, alternating clique sums
    and grown graphs (grown ones only in HP mode)."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(7, n_max)
        s = rng.randrange(1 << 30)
        if mode == "HD":
            g = random_hd_free(n, s, with_coc6=True, max_block=6)
        elif i % 2:
            g = random_hp_grown(n, s)
        else:
            g = random_hp_free(n, s, with_coc6=True, max_block=6)
        yield cap_connected(g, n_max)


def cap_connected(g: Graph, n_max: int) -> Graph:
    """Largest connected prefix ``G[0..k-1]`` with ``k <= n_max``.

    Clique sums overshoot their target size; the prefix keeps the seed block
    and, being induced, stays in every hereditary class.
    """
    if g.n <= n_max:
        return g
    keep = list(range(n_max))
    sub, _ = induced_subgraph(g, keep)
    while not is_connected(sub):
        keep.pop()
        sub, _ = induced_subgraph(g, keep)
    return sub


def property_battery(count: int, seed: int, n_max: int = 14,
                     bounds: Bounds = DEFAULT) -> SuiteReport:
    """Neighbourhood rules around the first co-C6 of each corpus graph."""
    rep = SuiteReport("props")
    for g in coc6_corpus(count, seed, n_max):
        cert = find_pattern(g, "coC6")
        if cert is None or not oracle_member(g, "HP", bounds.induced):
            rep.failures.append({"graph": _edges(g), "reason": "corpus graph invalid"})
            continue
        is_atom = g.n <= bounds.separator and find_any_clique_separator(g, bounds.separator) is None
        res = check_coc6_properties(g, build_coc6_context(g, cert.vertices), is_atom=is_atom,
                                    verified=True)
        rep.checked += 1
        if not res.ok:
            rep.failures.append({"graph": _edges(g),
                                 "failed": {k: r.to_json() for k, r in res.failures.items()}})
    return rep


def structure_battery(count: int, seed: int, n_max: int = 14,
                      bounds: Bounds = DEFAULT) -> SuiteReport:
    """Atoms containing a co-C6 must be a clique joined to an MCB."""
    rep = SuiteReport("structure")
    for mode in ("HP", "HD"):
        for g in coc6_corpus(count, seed, n_max, mode):
            for tree in decompose_components(g):
                for atom_vs in tree.atoms:
                    atom, _ = induced_subgraph(g, atom_vs)
                    if atom.n < 6 or find_pattern(atom, "coC6") is None:
                        continue
                    rep.checked += 1
                    cls = classify_atom(atom, mode)
                    if cls.tag != CLIQUE_JOIN_MCB or not check_structure_theorem(atom, mode, verified=True):
                        rep.failures.append({"mode": mode, "atom": _edges(atom), "tag": cls.tag})
    return rep


def oracle_battery(count: int, seed: int, n_max: int = 10, bounds: Bounds = DEFAULT) -> SuiteReport:
    """Recognisers and solvers against brute force on random weighted graphs."""
    rep = SuiteReport("oracles")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        g = random_gnp(n, rng.choice((0.2, 0.5, 0.8)), rng.randrange(1 << 30))
        g = with_random_weights(g, 1, 10, rng.randrange(1 << 30))
        rep.checked += 1
        for mode in ("HP", "HD"):
            r = recognize(g, mode)
            if r.member != oracle_member(g, mode, bounds.induced) or (
                    not r.member and not is_pattern(g, r.certificate)):
                rep.failures.append({"graph": _edges(g), "check": f"recognize-{mode}"})
        pairs = [(mwis(g), oracle_mwis(g, bounds.oracle)),
                 (max_weight_clique(g), oracle_clique(g, bounds.oracle)),
                 (coloring(g), oracle_chromatic(g, bounds.oracle))]
        if n <= min(8, bounds.oracle_fill):
            pairs.append((min_fill_in(g, bounds.fill_exact), oracle_fill_in(g, bounds.oracle_fill)))
        for sol, ref in pairs:
            if sol.objective != ref or not is_feasible(g, sol):
                rep.failures.append({"graph": _edges(g), "check": sol.kind,
                                     "got": sol.objective, "expected": ref})
    return rep


SUITES = {"props": property_battery, "structure": structure_battery, "oracles": oracle_battery}


def _edges(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "weights": list(g.weights)}


# benchmarking -------------------------------------------------------------------------

BENCH_COLUMNS = ("n", "m", "atoms", "max_atom", "t_decompose", "t_mwis", "t_bruteforce",
                 "objective", "objective_bruteforce")


def bench_row(g: Graph, bounds: Bounds = DEFAULT) -> dict:
    t0 = time.perf_counter()
    trees = decompose_components(g)
    t1 = time.perf_counter()
    sol = mwis(g)
    t2 = time.perf_counter()
    atoms = [a for t in trees for a in t.atoms]
    row = {"n": g.n, "m": g.m, "atoms": len(atoms), "max_atom": max(map(len, atoms), default=0),
           "t_decompose": round(t1 - t0, 4), "t_mwis": round(t2 - t1, 4),
           "t_bruteforce": "skipped", "objective": sol.objective, "objective_bruteforce": ""}
    if g.n <= bounds.oracle:
        t3 = time.perf_counter()
        row["objective_bruteforce"] = oracle_mwis(g, bounds.oracle)
        row["t_bruteforce"] = round(time.perf_counter() - t3, 4)
    return row


def bench_family(family: str, sizes, seed: int):
    """Graphs for ``bench``: one per size, weighted 1..10."""
    for i, n in enumerate(sizes):
        s = seed * 1000 + i
        if family == "hp-glued":
            g = random_hp_free(n, s)
        elif family == "hd-glued":
            g = random_hd_free(n, s)
        elif family == "hp-grown":
            g = random_hp_grown(n, s)
        elif family == "random-gnp":
            g = random_gnp(n, 0.3, s)
        else:
            raise ValueError(f"bench family must be hp-glued, hd-glued, hp-grown or random-gnp, got {family!r}")
        yield with_random_weights(g, 1, 10, s)
