"""Run the co-C6 neighbourhood battery on generated HP-free graphs and tally results."""

import argparse
import json
from collections import Counter

from atomkit.decompose import find_any_clique_separator
from atomkit.suites import coc6_corpus
from atomkit.verify import build_coc6_context, check_coc6_properties, find_coc6s, oracle_hp_free


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--n-max", type=int, default=14)
    args = ap.parse_args()

    status = Counter()
    layers = Counter()
    failures = []
    for g in coc6_corpus(args.count, args.seed, args.n_max):
        assert oracle_hp_free(g)
        is_atom = find_any_clique_separator(g) is None
        for coc6 in find_coc6s(g):
            ctx = build_coc6_context(g, coc6)
            for i, vs in ctx.layers.items():
                layers[f"A{i}"] += len(vs)
            rep = check_coc6_properties(g, ctx, is_atom=is_atom, verified=True)
            for name, res in rep.results.items():
                status[(name, res.status)] += 1
            if not rep.ok:
                failures.append({"edges": list(g.edges()), "coc6": coc6,
                                 "failed": sorted(rep.failures)})
    table = {}
    for (name, st), c in sorted(status.items()):
        table.setdefault(name, {})[st] = c
    print(json.dumps({"layers": layers, "predicates": table, "failures": failures}, indent=1))


if __name__ == "__main__":
    main()
