"""Exact canonical labelling for small graphs.

Colour refinement produces an equitable ordered partition; the search then
individualises vertices of the first non-singleton cell until the partition
is discrete, and keeps the lexicographically largest relabelled adjacency.
Children of a search node that lie in the same orbit of the automorphisms
found so far (restricted to those fixing the node's individualised vertices)
are skipped, which keeps vertex-transitive and twin-heavy graphs cheap.
"""

from __future__ import annotations

import os

from .graph import CapExceeded, Graph, bits

DEFAULT_CANON_CAP = int(os.environ.get("ZFGP_CANON_CAP", 12))


def _refine(adj, cells):
    while True:
        out = []
        changed = False
        for cell in cells:
            if not cell & (cell - 1):
                out.append(cell)
                continue
            groups: dict[tuple, int] = {}
            for v in bits(cell):
                row = adj[v]
                sig = tuple((row & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not changed:
            return cells


def _relabelled(adj, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _orbit_roots(n, auts, prefix):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for sigma in auts:
        if any(sigma[p] != p for p in prefix):
            continue
        for v in range(n):
            a, b = find(v), find(sigma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


def canonical_order(G: Graph) -> list[int]:
    """A vertex ordering whose relabelled adjacency is the canonical form."""
    n, adj = G.n, G.adj
    if n == 0:
        return []
    degree_cells: dict[int, int] = {}
    for v in range(n):
        d = adj[v].bit_count()
        degree_cells[d] = degree_cells.get(d, 0) | 1 << v
    start = [degree_cells[d] for d in sorted(degree_cells)]

    best_code = None
    best_order: list[int] = []
    auts: list[list[int]] = []

    def visit(cells, prefix):
        nonlocal best_code, best_order
        cells = _refine(adj, cells)
        idx = next((i for i, c in enumerate(cells) if c & (c - 1)), -1)
        if idx < 0:
            order = [c.bit_length() - 1 for c in cells]
            code = _relabelled(adj, order)
            if best_code is None or code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                pos = [0] * n
                for i, v in enumerate(order):
                    pos[v] = i
                sigma = [best_order[pos[v]] for v in range(n)]
                if any(sigma[v] != v for v in range(n)):
                    auts.append(sigma)
            return
        target = cells[idx]
        explored: list[int] = []
        for v in bits(target):
            if explored:
                find = _orbit_roots(n, auts, prefix)
                root = find(v)
                if any(find(w) == root for w in explored):
                    continue
            explored.append(v)
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            visit(child, prefix + [v])

    visit(start, [])
    return best_order


def canonical_key(G: Graph, cap: int | None = None) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    cap = DEFAULT_CANON_CAP if cap is None else cap
    if G.n > cap:
        raise CapExceeded(f"canonical labelling refused for n={G.n} > cap {cap}")
    rows = _relabelled(G.adj, canonical_order(G))
    width = (G.n + 7) // 8 or 1
    return bytes([G.n]) + b"".join(r.to_bytes(width, "little") for r in rows)


def canonical_graph(G: Graph, cap: int | None = None) -> Graph:
    """Canonically relabelled copy of ``G``; labels record the source vertices."""
    cap = DEFAULT_CANON_CAP if cap is None else cap
    if G.n > cap:
        raise CapExceeded(f"canonical labelling refused for n={G.n} > cap {cap}")
    order = canonical_order(G)
    return Graph(G.n, _relabelled(G.adj, order), [G.labels[v] for v in order])
