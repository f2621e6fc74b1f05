"""Exhaustive sweep: classify every atom on 7 or 8 vertices that contains co-C6.

Fixes co-C6 on vertices 0..5 and tries all neighbourhoods for the extra
vertices, keeping connected HP-free (resp. HD-free) atoms per the brute-force
oracles.  Prints one JSON summary per mode.
"""

import argparse
import json
import time
from collections import Counter

from atomkit.classify import classify_atom
from atomkit.decompose import find_any_clique_separator
from atomkit.generate import named
from atomkit.graph import build_graph, is_connected
from atomkit.verify import oracle_hd_free, oracle_hp_free


def extensions(n):
    base = list(named("coC6").edges())
    extra = list(range(6, n))

    def rec(i, edges):
        if i == len(extra):
            yield build_graph(n, edges)
            return
        v = extra[i]
        for nb in range(1 << v):
            yield from rec(i + 1, edges + [(u, v) for u in range(v) if nb >> u & 1])

    yield from rec(0, base)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8, choices=(6, 7, 8))
    args = ap.parse_args()
    oracle = {"HP": oracle_hp_free, "HD": oracle_hd_free}
    for mode in ("HP", "HD"):
        t0 = time.perf_counter()
        tags, shapes, scanned = Counter(), Counter(), 0
        for n in range(6, args.max_n + 1):
            for g in extensions(n):
                scanned += 1
                if not is_connected(g) or not oracle[mode](g):
                    continue
                if find_any_clique_separator(g) is not None:
                    continue
                cls = classify_atom(g, mode)
                tags[cls.tag] += 1
                if cls.witness is not None:
                    shapes[f"k={cls.witness.k},|U|={len(cls.universal)}"] += 1
        print(json.dumps({"mode": mode, "scanned": scanned, "atoms_by_tag": tags,
                          "shapes": shapes, "seconds": round(time.perf_counter() - t0, 2)}))


if __name__ == "__main__":
    main()
