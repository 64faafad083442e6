"""General position sets and the exact general position number.

A triple ``{a, b, c}`` conflicts when one of its vertices lies on a shortest
path between the other two.  A general position set is a vertex set with no
conflicting triple, i.e. an independent set of the 3-uniform conflict
hypergraph, and ``gp`` is found by branch and bound over that hypergraph.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from .forcing import DEFAULT_CAP
from .graph import (
    CapExceeded,
    Graph,
    GraphError,
    VertexSet,
    bits,
    classify,
    is_connected,
    leaves,
    simplicial_vertices,
    to_mask,
    to_set,
)
from .metric import all_pairs_distances, unreachable


class ConflictTriple(NamedTuple):
    """``middle`` lies on a shortest path between ``a`` and ``b`` (``a < b``)."""

    a: int
    b: int
    middle: int


def _require_connected(G: Graph) -> None:
    if not is_connected(G):
        raise GraphError("general position is only defined here for connected graphs")


def _triples(D: np.ndarray):
    n = D.shape[0]
    inf = unreachable(D)
    for a in range(n):
        for b in range(a + 1, n):
            dab = D[a, b]
            if dab < 2 or dab >= inf:
                continue
            for c in np.flatnonzero(D[a] + D[b] == dab).tolist():
                if c != a and c != b:
                    yield ConflictTriple(a, b, c)


def conflict_triples(G: Graph) -> list[ConflictTriple]:
    """Every conflicting triple exactly once, sorted."""
    _require_connected(G)
    return sorted(_triples(all_pairs_distances(G)))


def conflict_masks(G: Graph, D: np.ndarray | None = None) -> list[list[int]]:
    """``masks[u][v]``: the vertices completing ``{u, v}`` to a conflicting triple.

    Pairs in different components never conflict.
    """
    if D is None:
        D = all_pairs_distances(G)
    n = G.n
    masks = [[0] * n for _ in range(n)]
    for a, b, c in _triples(D):
        masks[a][b] |= 1 << c
        masks[b][a] |= 1 << c
        masks[a][c] |= 1 << b
        masks[c][a] |= 1 << b
        masks[b][c] |= 1 << a
        masks[c][b] |= 1 << a
    return masks


def general_position_violation(G: Graph, R: Iterable[int]) -> ConflictTriple | None:
    """A conflicting triple inside ``R``, or ``None`` if ``R`` is in general position."""
    _require_connected(G)
    members = sorted(set(R))
    mask = to_mask(members)
    D = all_pairs_distances(G)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            for c in np.flatnonzero(D[a] + D[b] == D[a, b]).tolist():
                if c != a and c != b and mask >> c & 1:
                    return ConflictTriple(a, b, c)
    return None


def is_general_position_set(G: Graph, R: Iterable[int]) -> bool:
    return general_position_violation(G, R) is None


class GPResult(NamedTuple):
    number: int
    witness: VertexSet


def gp_number(G: Graph, cap: int | None = None, allow_disconnected: bool = False) -> GPResult:
    """Exact general position number with the lexicographically smallest gp-set.

    Include-first branching over vertices in index order reaches maximum sets
    in lexicographic order, and only strict improvements replace the
    incumbent.  The bound is the incumbent size against chosen plus still
    admissible vertices.

    ``allow_disconnected`` treats vertices in different components as never
    sharing a geodesic; ``gp`` of a disconnected graph is then the sum over
    its components.
    """
    cap = DEFAULT_CAP if cap is None else cap
    n = G.n
    if n > cap:
        raise CapExceeded(f"gp search refused for n={n} > cap {cap}")
    if not allow_disconnected:
        _require_connected(G)
    if n == 0:
        return GPResult(0, frozenset())
    third = conflict_masks(G)
    best_size = 0
    best_set = 0

    def branch(chosen, size, cand):
        nonlocal best_size, best_set
        if size + cand.bit_count() <= best_size:
            return
        if not cand:
            best_size, best_set = size, chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        rest = cand ^ low
        forbidden = 0
        row = third[v]
        for r in bits(chosen):
            forbidden |= row[r]
        branch(chosen | low, size + 1, rest & ~forbidden)
        branch(chosen, size, rest)

    branch(0, 0, G.full)
    return GPResult(best_size, to_set(best_set))


def gp_tree_fast(T: Graph) -> int:
    """``gp`` of a tree on at least two vertices: its number of leaves."""
    if T.n < 2 or not classify(T).tree:
        raise GraphError("gp_tree_fast needs a tree on at least two vertices")
    return len(leaves(T))


def gp_block_fast(G: Graph) -> int:
    """``gp`` of a connected block graph: its number of simplicial vertices."""
    if not classify(G).block_graph:
        raise GraphError("gp_block_fast needs a connected block graph")
    return len(simplicial_vertices(G))
