"""graph6 text format (n <= 62) and DOT export.

graph6 packs the upper triangle of the adjacency matrix, column by column,
six bits per printable byte (offset 63).  Only the single-byte size form is
supported here, which covers every graph this package produces.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs import Graph, graph_from_edges

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; byte_offset points at the first bad byte."""

    def __init__(self, message: str, byte_offset: int):
        super().__init__(f"{message} (byte {byte_offset})")
        self.byte_offset = byte_offset


def graph6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 line (without trailing newline)."""
    n = g.n
    if n > 62:
        raise ValueError(f"graph6 single-byte form supports n <= 62, got {n}")
    out = [chr(n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, n):
        row = g.adjacency[v]
        for u in range(v):
            bits = (bits << 1) | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 line; raises Graph6Error with a byte offset on any
    malformed input.  A leading '>>graph6<<' header is tolerated."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("multi-byte size form not supported (n > 62)", 0)
    if not (63 <= first <= 125):
        raise Graph6Error(f"invalid size byte {s[0]!r}", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(s) - 1 < expected:
        raise Graph6Error(f"truncated: need {expected} data bytes", len(s))
    if len(s) - 1 > expected:
        raise Graph6Error("trailing bytes after graph data", 1 + expected)
    edges = []
    bit_index = 0
    for pos, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6Error(f"invalid data byte {ch!r}", pos)
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if bit_index >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bit", pos)
            elif bit:
                u, v = _bit_to_pair(bit_index)
                edges.append((u, v))
            bit_index += 1
    return graph_from_edges(n, edges)


def _bit_to_pair(index: int) -> tuple[int, int]:
    # Upper-triangle bits run x(0,1), x(0,2), x(1,2), x(0,3), ...
    v = 1
    while v * (v - 1) // 2 + v <= index:
        v += 1
    return index - v * (v - 1) // 2, v


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)


def read_graph6_lines(text: str) -> list[Graph]:
    return [graph6_decode(line) for line in text.splitlines() if line.strip()]


def dot_export(g: Graph, highlight: Sequence[int] | None = None) -> str:
    """Render the graph in DOT, optionally coloring a witness cycle.

    highlight is a cyclic vertex list; its consecutive edges come out red
    and thick so the cycle is visible in any DOT viewer.
    """
    marked: set[frozenset[int]] = set()
    if highlight:
        k = len(highlight)
        for i in range(k):
            marked.add(frozenset((highlight[i], highlight[(i + 1) % k])))
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.edges():
        if frozenset((u, v)) in marked:
            lines.append(f"  {u} -- {v} [color=red, penwidth=2.0];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
