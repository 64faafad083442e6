"""Hop distances and geodesic intervals."""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError, VertexSet, bits


def bfs_layers(G: Graph, source: int) -> list[int]:
    """Distance layers from ``source`` as vertex masks (layer 0 is the source)."""
    seen = 1 << source
    layers = [seen]
    frontier = seen
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        nxt &= ~seen
        if not nxt:
            return layers
        layers.append(nxt)
        seen |= nxt
        frontier = nxt


def all_pairs_distances(G: Graph) -> np.ndarray:
    """``n x n`` integer matrix of hop distances.

    Pairs in different components hold the sentinel ``n``, which exceeds
    every finite distance.
    """
    n = G.n
    D = np.full((n, n), n, dtype=np.int64)
    for s in range(n):
        for d, layer in enumerate(bfs_layers(G, s)):
            for v in bits(layer):
                D[s, v] = d
    return D


def unreachable(D: np.ndarray) -> int:
    """The sentinel value used by ``D`` for disconnected pairs."""
    return D.shape[0]


def interval(G: Graph, u: int, v: int, D: np.ndarray | None = None) -> VertexSet:
    """All vertices on some shortest ``u,v``-path."""
    if D is None:
        D = all_pairs_distances(G)
    duv = D[u, v]
    if duv >= unreachable(D):
        raise GraphError(f"vertices {u} and {v} lie in different components")
    return frozenset(np.flatnonzero(D[u] + D[v] == duv).tolist())


def interval_mask(D: np.ndarray, u: int, v: int) -> int:
    mask = 0
    for x in np.flatnonzero(D[u] + D[v] == D[u, v]).tolist():
        mask |= 1 << x
    return mask
