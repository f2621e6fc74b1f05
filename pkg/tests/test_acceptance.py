"""Release criteria.  Each test prints one PASS/FAIL line and asserts.

Run alone with ``pytest tests/test_acceptance.py -v -s`` (or ``python tests/test_acceptance.py``).
"""

import random
import time

import pytest

from atomkit.classify import CLIQUE_JOIN_MCB, classify_atom, recognize
from atomkit.decompose import decompose_components, find_any_clique_separator, verify_decomposition
from atomkit.detect import find_pattern, is_chordal, is_pattern
from atomkit.generate import (
    named, random_chordal, random_gnp, random_hp_free, random_hp_grown, with_random_weights,
)
from atomkit.graph import (
    build_graph, induced_subgraph, is_clique_mask, is_connected, to_mask,
)
from atomkit.solve import coloring, is_feasible, max_weight_clique, min_fill_in, mwis, mwis_trace
from atomkit.suites import cap_connected, coc6_corpus
from atomkit.verify import (
    build_coc6_context, check_coc6_properties, check_structure_theorem, find_coc6s,
    oracle_chromatic, oracle_clique, oracle_fill_in, oracle_hd_free, oracle_hp_free, oracle_mwis,
)

from conftest import connected_gnp

ALLOWED = {"HP": {"hole", "paraglider"}, "HD": {"hole", "diamond"}}
ORACLE = {"HP": oracle_hp_free, "HD": oracle_hd_free}


def report(capsys, number, title, ok, elapsed, limit, detail):
    status = "PASS" if ok else "FAIL"
    with capsys.disabled():
        bound = f"limit {limit}s" if limit else "no time limit"
        print(f"\n[{status}] criterion {number} ({title}): {detail}; {elapsed:.1f}s ({bound})")
    assert ok, detail


def test_c1_recognition_vs_oracle(capsys):
    t0 = time.perf_counter()
    rng = random.Random(101)
    bad, negatives = [], 0
    for i in range(1000):
        n = rng.randint(1, 10)
        g = random_gnp(n, (0.2, 0.5, 0.8)[i % 3], rng.randrange(1 << 30))
        for mode in ("HP", "HD"):
            r = recognize(g, mode)
            if r.member != ORACLE[mode](g):
                bad.append((mode, g))
            elif not r.member:
                negatives += 1
                if r.certificate.kind not in ALLOWED[mode] or not is_pattern(g, r.certificate):
                    bad.append((mode, g, r.certificate))
    elapsed = time.perf_counter() - t0
    report(capsys, 1, "recognition vs oracle", not bad and elapsed < 60, elapsed, 60,
           f"2000 verdicts, {negatives} certificates re-validated, {len(bad)} mismatches")


def test_c2_decomposition_soundness(capsys):
    t0 = time.perf_counter()
    rng = random.Random(202)
    bad, chordal_inputs = [], 0
    for i in range(500):
        n = rng.randint(1, 12)
        if i % 4 == 0:
            g = random_chordal(n, rng.uniform(0.2, 0.9), rng.randrange(1 << 30))
        else:
            g = connected_gnp(n, rng.choice((0.1, 0.2, 0.35, 0.5, 0.8)), rng.randrange(1 << 30))
        assert is_connected(g)
        (tree,) = decompose_components(g)
        ok, why = verify_decomposition(g, tree)
        if not ok:
            bad.append((why, g))
        for a in tree.atoms:
            sub, _ = induced_subgraph(g, a)
            if find_any_clique_separator(sub) is not None:
                bad.append(("atom-separator", g))
        all_cliques = all(is_clique_mask(g.adj, to_mask(a)) for a in tree.atoms)
        chordal = is_chordal(g)[0]
        chordal_inputs += chordal
        if chordal != all_cliques:
            bad.append(("chordal-iff-clique-atoms", g))
    elapsed = time.perf_counter() - t0
    report(capsys, 2, "decomposition soundness", not bad and elapsed < 120, elapsed, 120,
           f"500 graphs ({chordal_inputs} chordal), {len(bad)} violations")


def test_c3_solver_exactness(capsys):
    t0 = time.perf_counter()
    rng = random.Random(303)
    bad, fills = [], 0
    for _ in range(500):
        n = rng.randint(1, 10)
        g = random_gnp(n, rng.choice((0.2, 0.5, 0.8)), rng.randrange(1 << 30))
        g = with_random_weights(g, 1, 10, rng.randrange(1 << 30))
        checks = [(mwis(g), oracle_mwis(g)), (max_weight_clique(g), oracle_clique(g)),
                  (coloring(g), oracle_chromatic(g))]
        if n <= 8:
            fills += 1
            checks.append((min_fill_in(g), oracle_fill_in(g)))
        for sol, ref in checks:
            if sol.objective != ref or not is_feasible(g, sol):
                bad.append((sol.kind, sol.objective, ref, g))
    elapsed = time.perf_counter() - t0
    report(capsys, 3, "solver exactness", not bad and elapsed < 600, elapsed, 600,
           f"500 graphs x 3 problems + {fills} fill-in instances, {len(bad)} mismatches")


def _coc6_extensions():
    """co-C6 itself, then every graph on 7 or 8 vertices whose first six vertices
    induce co-C6.  Up to isomorphism this covers every graph on at most 8
    vertices with an induced co-C6.
    """
    base = list(named("coC6").edges())
    yield named("coC6")
    for nb in range(1 << 6):
        yield build_graph(7, base + [(u, 6) for u in range(6) if nb >> u & 1])
    for nb6 in range(1 << 6):
        for nb7 in range(1 << 7):
            edges = base + [(u, 6) for u in range(6) if nb6 >> u & 1]
            edges += [(u, 7) for u in range(7) if nb7 >> u & 1]
            yield build_graph(8, edges)


def test_c4_structure_theorem(capsys):
    t0 = time.perf_counter()
    bad = []
    atoms = {"HP": 0, "HD": 0}
    total = 0
    for g in _coc6_extensions():
        total += 1
        if not is_connected(g) or find_any_clique_separator(g) is not None:
            continue
        for mode in ("HP", "HD"):
            if not ORACLE[mode](g):
                continue
            atoms[mode] += 1
            cls = classify_atom(g, mode)
            universal = {v for v in range(g.n) if g.degree(v) == g.n - 1}
            if cls.tag != CLIQUE_JOIN_MCB or set(cls.universal) != universal:
                bad.append((mode, g, cls.tag))
            elif mode == "HD" and cls.universal:
                bad.append((mode, g, "universal"))
            elif not check_structure_theorem(g, mode, verified=True):
                bad.append((mode, g, "structure"))
    elapsed = time.perf_counter() - t0
    ok = not bad and atoms["HP"] > 0 and atoms["HD"] > 0 and elapsed < 1800
    report(capsys, 4, "structure theorem, exhaustive n<=8", ok, elapsed, 1800,
           f"{total} graphs scanned, {atoms['HP']} HP-free atoms, {atoms['HD']} HD-free atoms, "
           f"{len(bad)} exceptions")


def test_c5_property_battery(capsys):
    t0 = time.perf_counter()
    bad = []
    graphs = contexts = atoms = private_checked = 0
    for g in coc6_corpus(200, seed=505, n_max=14):
        graphs += 1
        if not oracle_hp_free(g) or find_pattern(g, "coC6") is None:
            bad.append(("corpus", g))
            continue
        is_atom = find_any_clique_separator(g) is None
        atoms += is_atom
        for coc6 in find_coc6s(g):
            contexts += 1
            rep = check_coc6_properties(g, build_coc6_context(g, coc6), is_atom=is_atom,
                                        verified=True)
            if not rep.ok:
                bad.append((g, coc6, {k: r.witness for k, r in rep.failures.items()}))
            if rep.results["matching_edge_private_sets_empty"].status == "pass":
                private_checked += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and atoms > 0 and graphs == 200
    report(capsys, 5, "co-C6 property battery", ok, elapsed, None,
           f"{graphs} graphs, {contexts} co-C6 contexts, {atoms} atoms "
           f"({private_checked} atom contexts checked for empty private sets), {len(bad)} failures")


def _hp_free_small(rng):
    n = rng.randint(1, 10)
    s = rng.randrange(1 << 30)
    kind = rng.randrange(3)
    if kind == 0:
        g = random_hp_free(n, s, max_block=6)
    elif kind == 1:
        g = random_hp_free(max(n, 7), s, with_coc6=True, max_block=6)
    else:
        g = random_hp_grown(max(n, 6), s)
    return cap_connected(g, 10)


def test_c6_sampled_perfection(capsys):
    t0 = time.perf_counter()
    rng = random.Random(606)
    bad, checked = [], 0
    for _ in range(200):
        g = _hp_free_small(rng)
        if not oracle_hp_free(g):
            bad.append(("corpus", g))
            continue
        samples = [g]
        for _ in range(5):
            keep = rng.sample(range(g.n), rng.randint(1, g.n))
            samples.append(induced_subgraph(g, keep)[0])
        for h in samples:
            checked += 1
            chi = oracle_chromatic(h)
            omega = oracle_clique(h.with_weights([1] * h.n))
            if chi != omega or coloring(h).objective != chi:
                bad.append((h, chi, omega))
    elapsed = time.perf_counter() - t0
    report(capsys, 6, "sampled perfection", not bad, elapsed, None,
           f"{checked} graphs (200 + 5 induced subgraphs each), {len(bad)} with chi != omega")


def _recompute_locally(g, sol, steps, trees):
    """Replay the peel sequence with brute force on each atom; returns the total."""
    cur = list(g.weights)

    def best(vs):
        sub, _ = induced_subgraph(g, vs)
        return oracle_mwis(sub.with_weights([cur[v] for v in sorted(vs)]))

    total = 0
    for step in steps:
        private = [v for v in step.atom if v not in step.separator]
        a0 = best(private)
        assert a0 == step.alpha0
        for v in step.separator:
            av = best([u for u in private if not g.adjacent(u, v)])
            assert av == step.alpha[v] and av <= a0
            assert cur[v] == step.weights_before[v]
        for v in step.separator:
            cur[v] += step.alpha[v] - a0
            assert cur[v] == step.weights_after[v]
        total += a0
    for tree in trees:
        total += best(tree.atoms[-1])
    return total


def test_c7_scale_smoke(capsys):
    details, ok = [], True
    worst = 0.0
    for seed in (7, 8, 9):
        g = with_random_weights(random_hp_free(2000, seed), 1, 10, seed)
        t0 = time.perf_counter()
        trees = decompose_components(g)
        sol, steps = mwis_trace(g)
        elapsed = time.perf_counter() - t0
        worst = max(worst, elapsed)
        largest = max(len(a) for t in trees for a in t.atoms)
        local = _recompute_locally(g, sol, steps, trees)
        good = (elapsed < 10 and largest <= 50 and is_feasible(g, sol) and local == sol.objective)
        ok &= good
        details.append(f"n={g.n} atoms={sum(len(t.atoms) for t in trees)} max_atom={largest} "
                       f"t={elapsed:.2f}s objective={sol.objective} local={local}")
    report(capsys, 7, "scale smoke n=2000", ok, worst, 10, " | ".join(details))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
