from itertools import combinations

import pytest
from hypothesis import given

from atomkit.decompose import (
    DecompositionTree, decompose, decompose_components, find_any_clique_separator,
    is_clique_separator, minimal_elimination_ordering, verify_decomposition,
)
from atomkit.detect import is_chordal
from atomkit.errors import BoundExceeded, DisconnectedInput
from atomkit.generate import clique, cycle, named, random_chordal
from atomkit.graph import (
    add_edges, build_graph, components_mask, induced_subgraph, is_clique_mask, iter_bits, to_mask,
)

from conftest import connected_graphs, graphs


def brute_atoms(g, verts):
    """Split on clique minimal separators (two full components) until none is left."""
    sub, ids = induced_subgraph(g, verts)
    for k in range(sub.n):
        for c in combinations(range(sub.n), k):
            m = to_mask(c)
            if not is_clique_mask(sub.adj, m):
                continue
            comps = components_mask(sub.adj, sub.all_mask & ~m)
            full = [x for x in comps if all(sub.adj[s] & x for s in c)]
            if len(full) >= 2:
                out = []
                for x in comps:
                    out += brute_atoms(g, [ids[v] for v in iter_bits(x | m)])
                return out
    return [frozenset(verts)]


def maximal(sets):
    s = set(sets)
    return {a for a in s if not any(a < b for b in s)}


def test_ordering_examples():
    assert not minimal_elimination_ordering(random_chordal(10, 0.6, 1)).fill_edges
    assert len(minimal_elimination_ordering(cycle(4)).fill_edges) == 1
    assert len(minimal_elimination_ordering(cycle(5)).fill_edges) == 2


def test_decompose_p4():
    t = decompose(named("P4"))
    assert sorted(map(sorted, t.atoms)) == [[0, 1], [1, 2], [2, 3]]
    assert sorted(map(sorted, t.separators)) == [[1], [2]]


def test_decompose_bowtie_and_c4():
    t = decompose(named("bowtie"))
    assert sorted(t.atoms) == [[0, 1, 2], [2, 3, 4]] and t.separators == [[2]]
    assert decompose(cycle(4)).atoms == [[0, 1, 2, 3]]


def test_decompose_empty_and_disconnected():
    assert decompose(build_graph(0, [])).atoms == []
    with pytest.raises(DisconnectedInput):
        decompose(build_graph(4, [(0, 1), (2, 3)]))
    trees = decompose_components(build_graph(4, [(0, 1), (2, 3)]))
    assert [t.atoms for t in trees] == [[[0, 1]], [[2, 3]]]


def test_separator_search_examples():
    assert find_any_clique_separator(named("bowtie")).vertices == (2,)
    assert find_any_clique_separator(cycle(4)) is None
    assert find_any_clique_separator(clique(6)) is None
    with pytest.raises(BoundExceeded):
        find_any_clique_separator(cycle(16))
    assert is_clique_separator(named("bowtie"), [2])
    assert not is_clique_separator(cycle(4), [0, 2])


def test_verify_rejects_broken_trees():
    g = named("bowtie")
    assert verify_decomposition(g, decompose(g)) == (True, "ok")
    bad = DecompositionTree([[0, 1, 2, 3], [2, 3, 4]], [[0, 3]])
    assert verify_decomposition(g, bad) == (False, "separator-not-clique")
    p4 = named("P4")
    missing = DecompositionTree([[0, 1], [1, 2], [2, 3]], [[1], [2]])
    missing.atoms[2] = [2]
    assert verify_decomposition(p4, missing)[0] is False
    assert verify_decomposition(p4, DecompositionTree([[0, 1], [1, 2], [3]], [[1], []]))[1] == "edge-cover"
    assert verify_decomposition(p4, DecompositionTree([[0, 1, 2, 3]], []))[1] == "atom-has-clique-separator"


@given(connected_graphs(max_n=9))
def test_atoms_match_brute_force(g):
    t = decompose(g)
    assert verify_decomposition(g, t) == (True, "ok")
    got = [frozenset(a) for a in t.atoms]
    assert len(got) == len(set(got))
    assert set(got) == maximal(brute_atoms(g, list(range(g.n))))
    assert len(t.atoms) <= max(1, g.n - 1)


@given(connected_graphs(max_n=10))
def test_chordal_iff_clique_atoms(g):
    t = decompose(g)
    assert is_chordal(g)[0] == all(is_clique_mask(g.adj, to_mask(a)) for a in t.atoms)


@given(connected_graphs(max_n=10))
def test_atoms_are_stable(g):
    for a in decompose(g).atoms:
        sub, _ = induced_subgraph(g, a)
        assert decompose(sub).atoms == [list(range(sub.n))]


@given(graphs(max_n=9))
def test_ordering_is_minimal(g):
    eo = minimal_elimination_ordering(g)
    assert sorted(eo.order) == list(range(g.n))
    h = add_edges(g, eo.fill_edges)
    assert is_chordal(h)[0]
    assert (not eo.fill_edges) == is_chordal(g)[0]
    for e in eo.fill_edges:
        assert not is_chordal(add_edges(g, eo.fill_edges - {e}))[0]


@given(graphs(max_n=9))
def test_ordering_eliminates_without_extra_fill(g):
    eo = minimal_elimination_ordering(g)
    h = add_edges(g, eo.fill_edges)
    pos = {v: i for i, v in enumerate(eo.order)}
    for v in range(g.n):
        later = [u for u in h.neighbors(v) if pos[u] > pos[v]]
        assert is_clique_mask(h.adj, to_mask(later))
