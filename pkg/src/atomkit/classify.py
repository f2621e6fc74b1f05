"""Atom classification and recognition of (hole, paraglider)-free and
(hole, diamond)-free graphs via clique separator decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .decompose import decompose_components
from .detect import (
    MCBWitness,
    find_antihole,
    find_hole,
    find_pattern,
    is_matched_co_bipartite,
    split_universal_clique,
)
from .errors import DisconnectedInput
from .graph import Certificate, Graph, induced_subgraph, is_clique, is_connected

MODES = ("HP", "HD")
_MODE_PATTERN = {"HP": "paraglider", "HD": "diamond"}

WEAKLY_CHORDAL = "WeaklyChordal"
CLIQUE_JOIN_MCB = "CliqueJoinMCB"
OTHER = "Other"


@dataclass(frozen=True)
class AtomClass:
    tag: str
    universal: tuple[int, ...] = ()
    witness: MCBWitness | None = None
    certificate: Certificate | None = None

    def to_json(self) -> dict:
        doc: dict = {"tag": self.tag}
        if self.tag == CLIQUE_JOIN_MCB:
            doc["universal"] = list(self.universal)
            doc["mcb"] = self.witness.to_json()
        if self.certificate is not None:
            doc["certificate"] = self.certificate.to_json()
        return doc


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def clique_join_mcb(atom: Graph, mode: str = "HP") -> tuple[list[int], MCBWitness] | None:
    """``(U, witness)`` when ``atom`` is a clique ``U`` joined to an MCB with k >= 3.

    In HD mode ``U`` must be empty.  Witness ids refer to ``atom``.
    """
    _check_mode(mode)
    universal, rest, remap = split_universal_clique(atom)
    if mode == "HD" and universal:
        return None
    if not is_clique(atom, universal):
        return None
    wit = is_matched_co_bipartite(rest)
    if wit is None or wit.k < 3:
        return None
    return universal, wit.remap(remap)


def classify_atom(atom: Graph, mode: str = "HP") -> AtomClass:
    _check_mode(mode)
    if not is_connected(atom):
        raise DisconnectedInput("classify_atom expects a connected graph")
    shaped = clique_join_mcb(atom, mode)
    if shaped is not None:
        universal, wit = shaped
        return AtomClass(CLIQUE_JOIN_MCB, tuple(universal), wit)
    hole = find_hole(atom)
    if hole is not None:
        return AtomClass(OTHER, certificate=hole)
    antihole = find_antihole(atom)
    if antihole is None:
        return AtomClass(WEAKLY_CHORDAL)
    # an antihole here is either long (contains both patterns) or a co-C6 in a
    # graph of the wrong shape; report the mode's pattern when there is one
    refined = find_pattern(atom, _MODE_PATTERN[mode])
    return AtomClass(OTHER, certificate=refined or antihole)


@dataclass(frozen=True)
class Recognition:
    member: bool
    certificate: Certificate | None = None
    atoms: tuple[tuple[tuple[int, ...], AtomClass], ...] = ()

    def __bool__(self) -> bool:
        return self.member

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "atoms": [{"vertices": list(vs), **cls.to_json()} for vs, cls in self.atoms],
        }


def _remap_class(cls: AtomClass, ids) -> AtomClass:
    return AtomClass(
        cls.tag,
        tuple(ids[v] for v in cls.universal),
        None if cls.witness is None else cls.witness.remap(ids),
        None if cls.certificate is None else cls.certificate.remap(ids),
    )


def _recognize(g: Graph, mode: str) -> Recognition:
    pattern = _MODE_PATTERN[mode]
    if mode == "HD":
        # a diamond has a clique separator, so it can straddle atoms: check globally
        diamond = find_pattern(g, "diamond")
        if diamond is not None:
            return Recognition(False, diamond)
    classified = []
    for tree in decompose_components(g):
        for atom_vs in tree.atoms:
            atom, ids = induced_subgraph(g, atom_vs)
            cls = _remap_class(classify_atom(atom, mode), ids)
            classified.append((tuple(atom_vs), cls))
            if cls.tag == OTHER:
                return Recognition(False, cls.certificate, tuple(classified))
            if cls.tag == WEAKLY_CHORDAL and mode == "HP":
                hit = find_pattern(atom, pattern)
                if hit is not None:
                    return Recognition(False, hit.remap(ids), tuple(classified))
    return Recognition(True, None, tuple(classified))


def recognize_hp_free(g: Graph) -> Recognition:
    """Decide (hole, paraglider)-freeness; a negative verdict carries a hole or paraglider."""
    return _recognize(g, "HP")


def recognize_hd_free(g: Graph) -> Recognition:
    """Decide (hole, diamond)-freeness; a negative verdict carries a hole or diamond."""
    return _recognize(g, "HD")


def recognize(g: Graph, mode: str) -> Recognition:
    _check_mode(mode)
    return _recognize(g, mode)


def weakly_chordal_diamond_free_atom_shape(atom: Graph) -> str | None:
    """Experimental: ``"clique"`` / ``"chordal-bipartite"`` for weakly chordal
    diamond-free atoms, ``None`` when neither shape applies.
    """
    n = atom.n
    if all(a.bit_count() == n - 1 for a in atom.adj):
        return "clique"
    from .detect import is_weakly_chordal

    if find_pattern(atom, "diamond") is None and is_weakly_chordal(atom)[0]:
        if _is_bipartite(atom):
            return "chordal-bipartite"
    return None


def _is_bipartite(g: Graph) -> bool:
    colour: dict[int, int] = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True
