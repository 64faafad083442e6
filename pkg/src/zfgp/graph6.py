"""graph6 encoding (short form only, ``n <= 62``).

The line starts with ``chr(n + 63)``; the upper triangle of the adjacency
matrix follows column by column (``(0,1), (0,2), (1,2), (0,3), ...``), packed
six bits per character, most significant first, each sextet offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, build_graph

HEADER = ">>graph6<<"
MAX_SHORT_N = 62


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def encode_graph6(G: Graph) -> str:
    n = G.n
    if n > MAX_SHORT_N:
        raise GraphError(f"graph6 short form holds at most {MAX_SHORT_N} vertices, got {n}")
    bitstream = [G.adj[i] >> j & 1 for j in range(1, n) for i in range(j)]
    bitstream += [0] * (-len(bitstream) % 6)
    chars = [chr(n + 63)]
    for k in range(0, len(bitstream), 6):
        value = 0
        for b in bitstream[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def decode_graph6(line: str) -> Graph:
    text = line.strip()
    start = 0
    if text.startswith(HEADER):
        start = len(HEADER)
    if start >= len(text):
        raise Graph6Error("empty graph6 line", start)
    first = ord(text[start])
    if first == 126:
        raise Graph6Error("unsupported form: long-form graph6 (n > 62)", start)
    if not 63 <= first <= 125:
        raise Graph6Error(f"malformed header byte {text[start]!r}", start)
    n = first - 63
    nbits = n * (n - 1) // 2
    needed = (nbits + 5) // 6
    payload = text[start + 1:]
    if len(payload) < needed:
        raise Graph6Error(f"truncated payload: need {needed} data bytes, found {len(payload)}", start + 1 + len(payload))
    if len(payload) > needed:
        raise Graph6Error(f"trailing data after {needed} data bytes", start + 1 + needed)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    edges = []
    k = 0
    for pos, ch in enumerate(payload):
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range", start + 1 + pos)
        for shift in range(5, -1, -1):
            if value >> shift & 1:
                if k >= nbits:
                    raise Graph6Error("nonzero padding bits", start + 1 + pos)
                edges.append(pairs[k])
            k += 1
    return build_graph(n, edges)


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        if line.strip():
            yield decode_graph6(line)


def write_graph6(stream: TextIO, graphs: Iterable[Graph]) -> int:
    count = 0
    for g in graphs:
        stream.write(encode_graph6(g) + "\n")
        count += 1
    return count
