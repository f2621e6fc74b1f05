import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atomkit.classify import recognize_hp_free
from atomkit.detect import find_hole, find_pattern, is_chordal
from atomkit.errors import NotClique, SizeMismatch, UnknownName
from atomkit.formats import to_graph6
from atomkit.generate import (
    GenSpec, clique, glue_on_clique, mcb_join_clique, named, random_chordal, random_hd_free,
    random_hp_free, random_hp_grown,
)
from atomkit.graph import build_graph, is_connected
from atomkit.verify import oracle_hd_free, oracle_hp_free

from conftest import graphs


def test_named_examples():
    assert named("mcb(3)") == named("coC6")
    assert named("mcb(3)").m == 9
    assert named("paraglider").m == 7
    assert named("P_2") == clique(2) == named("K2")
    assert named("co-matched-bipartite(3)").m == 6
    with pytest.raises(UnknownName):
        named("petersen")


def test_random_chordal_examples():
    assert random_chordal(1, 0.5, 0) == clique(1)
    for seed in range(20):
        g = random_chordal(12, 0.6, seed)
        assert is_chordal(g)[0] and find_hole(g) is None and is_connected(g)


def test_mcb_join_clique_examples():
    assert mcb_join_clique(3, 0, seed=None) == named("coC6")
    g = mcb_join_clique(3, 2, seed=4)
    assert g.n == 8 and oracle_hp_free(g)
    assert mcb_join_clique(1, 0, seed=None) == clique(2)


def test_glue_examples():
    k3 = clique(3)
    d = glue_on_clique(k3, [0, 1], k3, [0, 1])
    assert d == named("diamond") or (d.n == 4 and d.m == 5)
    assert glue_on_clique(k3, [2], k3, [0]) == named("bowtie")
    g = glue_on_clique(named("C4"), [], k3, [])
    assert g.n == 7 and g.m == 7
    with pytest.raises(SizeMismatch):
        glue_on_clique(k3, [0], k3, [0, 1])
    with pytest.raises(NotClique):
        glue_on_clique(named("C4"), [0, 2], k3, [0, 1])


def test_glue_coc6_and_triangle():
    g = glue_on_clique(named("coC6"), [0], clique(3), [0])
    assert g.n == 8 and oracle_hp_free(g)


def test_random_hp_free_small():
    assert random_hp_free(1, 5) == clique(1)


@settings(max_examples=60)
@given(st.integers(1, 14), st.integers(0, 10**6), st.booleans())
def test_hp_corpus_valid(n, seed, with_coc6):
    g = random_hp_free(n, seed, with_coc6=with_coc6, max_block=6)
    assert g.n >= n and is_connected(g)
    if g.n <= 14:
        assert oracle_hp_free(g)
    if with_coc6:
        assert find_pattern(g, "coC6") is not None


@settings(max_examples=40)
@given(st.integers(1, 14), st.integers(0, 10**6))
def test_hd_corpus_valid(n, seed):
    g = random_hd_free(n, seed, max_block=6)
    if g.n <= 14:
        assert oracle_hd_free(g)


@settings(max_examples=20)
@given(st.integers(6, 11), st.integers(0, 10**6))
def test_grown_corpus_valid(n, seed):
    g = random_hp_grown(n, seed)
    assert g.n == n and oracle_hp_free(g)


def _random_clique(g, rng, size):
    for _ in range(30):
        v = rng.randrange(g.n)
        c = [v]
        for u in g.neighbors(v):
            if all(g.adjacent(u, x) for x in c):
                c.append(u)
        if len(c) >= size:
            return rng.sample(c, size)
    return None


@settings(max_examples=500)
@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6), st.integers(0, 3), st.integers(0, 99))
def test_glue_preserves_hp_freeness(g1, g2, size, seed):
    if not (oracle_hp_free(g1) and oracle_hp_free(g2)):
        return
    rng = random.Random(seed)
    c1, c2 = _random_clique(g1, rng, size), _random_clique(g2, rng, size)
    if c1 is None or c2 is None:
        return
    assert oracle_hp_free(glue_on_clique(g1, c1, g2, c2))


def test_genspec_deterministic():
    for fam, params in (("hp-glued", {"n": 30}), ("random-gnp", {"n": 12}),
                        ("random-chordal", {"n": 15}), ("hp-grown", {"n": 9}),
                        ("mcb-join-clique", {"k": 4, "c": 2}), ("named", {"name": "gem"})):
        a = to_graph6(GenSpec(fam, params, 7).build())
        b = to_graph6(GenSpec(fam, params, 7).build())
        assert a == b
    with pytest.raises(UnknownName):
        GenSpec("nope").build()


def test_grown_graphs_recognised():
    g = random_hp_grown(10, 3)
    assert recognize_hp_free(g)
    assert build_graph(0, []).n == 0


def test_genspec_string_flags():
    on = GenSpec("hp-glued", {"n": "8", "with_coc6": "true"}, 1).build()
    off = GenSpec("hp-glued", {"n": "8", "with_coc6": "false"}, 1).build()
    assert to_graph6(on) == to_graph6(random_hp_free(8, 1, with_coc6=True))
    assert to_graph6(off) == to_graph6(random_hp_free(8, 1))
    with pytest.raises(ValueError):
        GenSpec("hp-glued", {"with_coc6": "maybe"}).build()
