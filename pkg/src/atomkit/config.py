"""Size limits for every exhaustive routine.

Defaults can be overridden through ``ATOMKIT_BOUNDS``, e.g.
``ATOMKIT_BOUNDS="separator=12,fill_exact=12"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Bounds:
    separator: int = 15       # exhaustive clique-separator search
    induced: int = 16         # exhaustive induced-subgraph oracle (host size)
    pattern: int = 8          # pattern size for canonical-form isomorphism
    oracle: int = 14          # brute-force MWIS / clique / colouring / MWIM
    oracle_fill: int = 10     # brute-force fill-in
    fill_exact: int = 14      # exact fill-in search per atom
    mwim_exact: int = 16      # exhaustive induced matching per atom

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"bound {f.name} must be positive")


def parse_bounds(text: str, base: Bounds | None = None) -> Bounds:
    base = base or Bounds()
    if not text.strip():
        return base
    names = {f.name for f in fields(Bounds)}
    updates = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in names:
            raise ValueError(f"bad bound {item!r}; known bounds: {sorted(names)}")
        updates[key] = int(value)
    return replace(base, **updates)


def bounds_from_env() -> Bounds:
    return parse_bounds(os.environ.get("ATOMKIT_BOUNDS", ""))


DEFAULT = Bounds()
