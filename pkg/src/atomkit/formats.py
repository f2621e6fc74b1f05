"""graph6, DIMACS ``.col`` and JSON readers/writers."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import FormatError, InvalidEdge, InvalidVertex
from .graph import Graph, build_graph

G6_HEADER = ">>graph6<<"


# graph6 ---------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline).  Weights are dropped."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)
    )
    out = _encode_n(g.n) + body
    return (G6_HEADER if header else "") + out.decode("ascii")


def from_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        try:
            line = line.decode("ascii")
        except UnicodeDecodeError as exc:
            raise FormatError("graph6 data is not ASCII") from exc
    line = line.strip()
    if line.startswith(G6_HEADER):
        line = line[len(G6_HEADER):]
    if not line:
        raise FormatError("empty graph6 string")
    data = [ord(c) - 63 for c in line]
    if any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"graph6 character out of range in {line!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field")
        n, pos = _decode_digits(data[2:8]), 8
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size field")
        n, pos = _decode_digits(data[1:4]), 4
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {expected} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("graph6 padding bits are not zero")
    return build_graph(n, edges)


def _decode_digits(ds: list[int]) -> int:
    n = 0
    for d in ds:
        n = (n << 6) | d
    return n


def read_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(line) for line in text.splitlines() if line.strip()]


# DIMACS ---------------------------------------------------------------------


def to_dimacs(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    if not g.unit_weights:
        lines.extend(f"n {v + 1} {w}" for v, w in enumerate(g.weights))
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col``: ``p edge n m``, ``e u v`` (1-indexed), optional ``n v w``."""
    n = None
    edges = []
    weights: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        try:
            if tok[0] == "p":
                if len(tok) != 4 or tok[1] not in ("edge", "col"):
                    raise FormatError(f"line {lineno}: bad problem line {raw!r}")
                if n is not None:
                    raise FormatError(f"line {lineno}: duplicate problem line")
                n = int(tok[2])
            elif tok[0] == "e" and len(tok) == 3:
                edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
            elif tok[0] == "n" and len(tok) == 3:
                weights[int(tok[1]) - 1] = int(tok[2])
            else:
                raise FormatError(f"line {lineno}: unrecognised line {raw!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: non-integer field in {raw!r}") from exc
        if tok[0] in ("e", "n") and n is None:
            raise FormatError(f"line {lineno}: data before problem line")
    if n is None:
        raise FormatError("missing 'p edge n m' line")
    w = None
    if weights:
        _check_nonnegative(weights.values())
        w = [weights.get(v, 1) for v in range(n)]
    try:
        return build_graph(n, edges, w)
    except (InvalidEdge, InvalidVertex) as exc:
        raise FormatError(str(exc)) from exc


# JSON -----------------------------------------------------------------------


def to_json_doc(g: Graph) -> dict:
    doc = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if not g.unit_weights:
        doc["weights"] = list(g.weights)
    return doc


def to_json(g: Graph) -> str:
    return json.dumps(to_json_doc(g))


def from_json_doc(doc) -> Graph:
    if not isinstance(doc, dict) or "n" not in doc:
        raise FormatError("JSON graph must be an object with an 'n' field")
    n = doc["n"]
    edges = doc.get("edges", [])
    weights = doc.get("weights")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e)
        for e in edges
    ):
        raise FormatError("'edges' must be a list of [u, v] integer pairs")
    if weights is not None:
        if not isinstance(weights, list) or not all(isinstance(w, int) for w in weights):
            raise FormatError("'weights' must be a list of integers")
        _check_nonnegative(weights)
    try:
        return build_graph(n, edges, weights)
    except (InvalidEdge, InvalidVertex) as exc:
        raise FormatError(str(exc)) from exc


def from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_json_doc(doc)


def _check_nonnegative(ws) -> None:
    if any(w < 0 for w in ws):
        raise FormatError("input weights must be non-negative")


# dispatch -------------------------------------------------------------------

FORMATS = ("graph6", "dimacs", "json")


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".col", ".dimacs", ".clq"):
        return "dimacs"
    if suffix == ".json":
        return "json"
    raise FormatError(f"cannot infer format from {path!r}; pass --format")


def parse_graphs(text: str, fmt: str) -> list[Graph]:
    """Parse one or more graphs.  graph6 allows one graph per line; JSON allows a list."""
    if fmt == "graph6":
        graphs = read_graph6_lines(text)
        if not graphs:
            raise FormatError("no graph6 lines in input")
        return graphs
    if fmt == "dimacs":
        return [from_dimacs(text)]
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        if isinstance(doc, list):
            return [from_json_doc(d) for d in doc]
        return [from_json_doc(doc)]
    raise FormatError(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        if not g.unit_weights:
            raise FormatError("graph6 cannot carry vertex weights")
        return to_graph6(g) + "\n"
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "json":
        return to_json(g) + "\n"
    raise FormatError(f"unknown format {fmt!r}")
