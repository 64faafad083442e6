"""Simple undirected graphs on vertices ``0..n-1`` with bitmask adjacency.

Every solver in the package works on :class:`Graph`.  Adjacency rows are
Python ints used as bitsets, so neighbourhood unions and intersections are
single integer operations.  Vertex sets handed back to callers are
``frozenset`` objects of vertex indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Sequence

VertexSet = frozenset


class GraphError(ValueError):
    """Invalid graph input or a graph outside an operation's domain."""


class CapExceeded(GraphError):
    """An exact routine was asked to run above its configured size cap."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> VertexSet:
    return frozenset(bits(mask))


class Graph:
    """Immutable simple graph.

    ``labels`` maps each vertex index to the name it had in the graph it was
    derived from (by default the index itself).  Labels play no part in
    equality or hashing: two graphs are equal when they have the same order
    and the same labelled edge set.
    """

    __slots__ = ("n", "adj", "m", "labels")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[Hashable] | None = None):
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "m", sum(row.bit_count() for row in adj) // 2)
        if labels is None:
            labels = range(n)
        elif len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        object.__setattr__(self, "labels", tuple(labels))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj, self.labels))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def with_labels(self, labels: Sequence[Hashable]) -> "Graph":
        return Graph(self.n, self.adj, labels)

    def label_of(self, vertices: Iterable[int]) -> list:
        """Translate vertex indices to labels, sorted by index."""
        return [self.labels[v] for v in sorted(vertices)]


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[Hashable] | None = None) -> Graph:
    """Build a graph on ``n`` vertices from an edge list; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {pair!r} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {pair!r} is a loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


# ---------------------------------------------------------------------------
# subgraphs


def induced_subgraph(G: Graph, X: Iterable[int]) -> Graph:
    """Subgraph induced by ``X`` with indices compacted in increasing order.

    The result's ``labels`` carry the parent's labels, so ``H.labels[i]`` is
    the parent name of new vertex ``i``.
    """
    keep = sorted(set(X))
    for v in keep:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} outside 0..{G.n - 1}")
    new_index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        row = 0
        for u in bits(G.adj[old]):
            if u in new_index:
                row |= 1 << new_index[u]
        adj.append(row)
    return Graph(len(keep), adj, [G.labels[v] for v in keep])


def delete_vertices(G: Graph, X: Iterable[int]) -> Graph:
    X = set(X)
    for v in X:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} outside 0..{G.n - 1}")
    return induced_subgraph(G, (v for v in range(G.n) if v not in X))


def induced_mask(G: Graph, mask: int) -> Graph:
    return induced_subgraph(G, bits(mask))


# ---------------------------------------------------------------------------
# connectivity and structure


def component_mask(G: Graph, v: int, within: int | None = None) -> int:
    """Vertex mask of the component of ``v`` inside the vertex set ``within``."""
    if within is None:
        within = G.full
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(G: Graph, within: int | None = None) -> list[int]:
    """Component vertex masks of ``G[within]``, ordered by smallest vertex."""
    if within is None:
        within = G.full
    out = []
    rest = within
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = component_mask(G, v, within)
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(G: Graph) -> bool:
    return G.n == 0 or component_mask(G, 0) == G.full


def edges_within(G: Graph, mask: int) -> int:
    return sum((G.adj[v] & mask).bit_count() for v in bits(mask)) // 2


def is_tree_mask(G: Graph, mask: int) -> bool:
    """Whether ``G[mask]`` is a tree (nonempty, connected, acyclic)."""
    if not mask:
        return False
    k = mask.bit_count()
    if edges_within(G, mask) != k - 1:
        return False
    v = (mask & -mask).bit_length() - 1
    return component_mask(G, v, mask) == mask


def is_path_mask(G: Graph, mask: int) -> bool:
    """Whether ``G[mask]`` is a path (a single vertex counts)."""
    if not is_tree_mask(G, mask):
        return False
    return all((G.adj[v] & mask).bit_count() <= 2 for v in bits(mask))


def path_order(G: Graph, mask: int) -> list[int]:
    """Vertices of the induced path ``G[mask]`` from its smaller endpoint."""
    ends = [v for v in bits(mask) if (G.adj[v] & mask).bit_count() <= 1]
    prev, cur = -1, ends[0]
    order = [cur]
    while len(order) < mask.bit_count():
        nxt = G.adj[cur] & mask & ~(1 << cur)
        if prev >= 0:
            nxt &= ~(1 << prev)
        prev, cur = cur, nxt.bit_length() - 1
        order.append(cur)
    return order


def is_bipartite(G: Graph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def biconnected_components(G: Graph) -> list[int]:
    """Blocks of ``G`` as vertex masks (bridges give 2-vertex blocks).

    Isolated vertices form singleton blocks.  Iterative Hopcroft-Tarjan over
    an edge stack.
    """
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    clock = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if not G.adj[root]:
            disc[root] = clock
            clock += 1
            blocks.append(1 << root)
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack = []
        stack = [(root, -1, iter(G.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] < 0:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = clock
                    clock += 1
                    stack.append((u, v, iter(G.neighbors(u))))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = 0
                    while True:
                        a, b = edge_stack.pop()
                        block |= 1 << a | 1 << b
                        if (a, b) == (parent, v):
                            break
                    blocks.append(block)
    return blocks


def is_clique_mask(G: Graph, mask: int) -> bool:
    return all(G.adj[v] & mask == mask & ~(1 << v) for v in bits(mask))


@dataclass(frozen=True)
class ClassFlags:
    connected: bool
    forest: bool
    tree: bool
    unicyclic: bool
    bicyclic: bool
    cycle_graph: bool
    complete: bool
    block_graph: bool
    quasi_tree: bool
    bipartite: bool
    quasi_vertices: VertexSet

    def as_dict(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__ if k != "quasi_vertices"}
        out["quasi_vertices"] = sorted(self.quasi_vertices)
        return out


def quasi_vertices(G: Graph) -> VertexSet:
    """Vertices ``v`` of a connected graph ``G`` such that ``G - v`` is a tree.

    Disconnected graphs have none; ``K1`` has none because ``K1 - v`` is empty.
    """
    if G.n < 2 or not is_connected(G):
        return frozenset()
    full = G.full
    return frozenset(v for v in range(G.n) if is_tree_mask(G, full & ~(1 << v)))


def classify(G: Graph) -> ClassFlags:
    n, m = G.n, G.m
    comps = components(G)
    connected = len(comps) <= 1
    forest = m == n - len(comps)
    nonempty = n >= 1
    degs = G.degrees()
    qv = quasi_vertices(G)
    return ClassFlags(
        connected=connected,
        forest=forest,
        tree=nonempty and connected and forest,
        unicyclic=nonempty and connected and m == n,
        bicyclic=nonempty and connected and m == n + 1,
        cycle_graph=n >= 3 and connected and all(d == 2 for d in degs),
        complete=m == n * (n - 1) // 2,
        block_graph=nonempty and connected and all(is_clique_mask(G, b) for b in biconnected_components(G)),
        quasi_tree=bool(qv),
        bipartite=is_bipartite(G),
        quasi_vertices=qv,
    )


def leaves(G: Graph) -> VertexSet:
    """Pendent (degree-1) vertices."""
    return frozenset(v for v in range(G.n) if G.adj[v].bit_count() == 1)


def simplicial_vertices(G: Graph) -> VertexSet:
    return frozenset(v for v in range(G.n) if is_clique_mask(G, G.adj[v]))


def cycle_mask(G: Graph) -> int:
    """Vertices of the 2-core (for a unicyclic graph: its cycle)."""
    alive = G.full
    deg = G.degrees()
    queue = [v for v in range(G.n) if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in bits(G.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                queue.append(u)
    return alive


def _require_unicyclic(G: Graph) -> None:
    if not (G.n >= 3 and G.m == G.n and is_connected(G)):
        raise GraphError("graph is not connected unicyclic")


def unique_cycle(G: Graph) -> list[int]:
    """The cycle of a unicyclic graph in cyclic order, starting at its smallest vertex."""
    _require_unicyclic(G)
    core = cycle_mask(G)
    start = (core & -core).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = G.adj[cur] & core
        if prev >= 0:
            nxt &= ~(1 << prev)
        # the first step has two choices; take the smaller neighbour
        v = (nxt & -nxt).bit_length() - 1
        if v == start:
            break
        order.append(v)
        prev, cur = cur, v
    return order


def root_tree(G: Graph, v: int) -> Graph:
    """Tree hanging off cycle vertex ``v`` (containing ``v``) of a unicyclic graph.

    Vertex 0 of the result is not necessarily ``v``; use ``labels`` to map back.
    """
    cyc = unique_cycle(G)
    if v not in cyc:
        raise GraphError(f"vertex {v} is not on the cycle")
    i = cyc.index(v)
    u, w = cyc[i - 1], cyc[(i + 1) % len(cyc)]
    within = G.full & ~(1 << u) & ~(1 << w)
    return induced_mask(G, component_mask(G, v, within))


def branch_vertices(G: Graph) -> VertexSet:
    """Cycle vertices of degree at least 3 in a unicyclic graph."""
    return frozenset(v for v in unique_cycle(G) if G.degree(v) >= 3)
