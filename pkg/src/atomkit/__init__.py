"""Clique separator decomposition, atom classification for hole-free graph
classes, and exact solvers built on the decomposition."""

from .classify import AtomClass, Recognition, classify_atom, recognize, recognize_hd_free, recognize_hp_free
from .config import Bounds
from .decompose import (
    DecompositionTree,
    decompose,
    decompose_components,
    find_any_clique_separator,
    minimal_elimination_ordering,
    verify_decomposition,
)
from .detect import (
    MCBWitness,
    find_antihole,
    find_hole,
    find_pattern,
    is_chordal,
    is_matched_co_bipartite,
    is_pattern,
    is_weakly_chordal,
    split_universal_clique,
)
from .graph import Certificate, Graph, build_graph, complement, induced_subgraph, join_compose
from .solve import Solution, atom_mwis, coloring, max_weight_clique, min_fill_in, mwim_atom, mwis

__version__ = "0.1.0"
