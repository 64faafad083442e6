"""Graph families: named constructions, random generators, and exhaustive
enumeration of small graphs up to isomorphism.

Enumerators grow graphs one vertex at a time and deduplicate by canonical
key.  Every connected graph on ``n`` vertices has a non-cut vertex, so
adding a vertex adjacent to every nonempty subset of every connected
``(n-1)``-vertex graph reaches every connected ``n``-vertex graph; trees
and unicyclic graphs other than cycles always have a leaf, so adding leaves
suffices for them.  Emitted representatives are canonically relabelled and
sorted by key, so the streams are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Any, Callable, Iterator

from .canon import canonical_graph, canonical_key
from .graph import (
    CapExceeded,
    Graph,
    GraphError,
    bits,
    build_graph,
    classify,
    is_connected,
    leaves,
)

TREE_CAP = 12
UNICYCLIC_CAP = 10
CONNECTED_CAP = 9
BICYCLIC_CAP = 11


# ---------------------------------------------------------------------------
# deterministic constructions


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle length must be at least 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def spider(legs: list[int]) -> Graph:
    """Centre 0 with a pendant path of each given length."""
    if any(L < 1 for L in legs):
        raise GraphError("spider legs must have positive length")
    edges = []
    nxt = 1
    for L in legs:
        prev = 0
        for _ in range(L):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def double_star(a: int, b: int) -> Graph:
    """Adjacent centres 0 and 1 carrying ``a`` and ``b`` leaves."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return build_graph(2 + a + b, edges)


def partial_sun(length: int, U) -> Graph:
    """Cycle ``0..length-1`` with one leaf appended to each vertex of ``U``."""
    U = sorted(set(U))
    if length < 3 or any(not 0 <= u < length for u in U):
        raise GraphError("invalid partial sun parameters")
    edges = [(i, (i + 1) % length) for i in range(length)]
    edges += [(u, length + k) for k, u in enumerate(U)]
    return build_graph(length + len(U), edges)


def path_of_triangles(k: int) -> Graph:
    """``k`` triangles glued in a chain at cut vertices."""
    edges = []
    for i in range(k):
        a, b, c = 2 * i, 2 * i + 1, 2 * i + 2
        edges += [(a, b), (b, c), (a, c)]
    return build_graph(2 * k + 1, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return build_graph(offset, edges)


# ---------------------------------------------------------------------------
# random generators


def prufer_tree(seq: list[int], n: int) -> Graph:
    """Labelled tree with the given Prufer sequence (``len(seq) == n - 2``)."""
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return build_graph(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labelled tree on ``n`` vertices."""
    if n < 1:
        raise GraphError("tree needs at least one vertex")
    return prufer_tree([rng.randrange(n) for _ in range(n - 2)], n)


def _add_random_non_edges(G: Graph, k: int, rng: random.Random) -> Graph:
    non_edges = [(u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)]
    if k > len(non_edges):
        raise GraphError("not enough non-edges")
    return build_graph(G.n, G.edges() + rng.sample(non_edges, k))


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    if n < 3:
        raise GraphError("unicyclic graphs need at least 3 vertices")
    return _add_random_non_edges(random_tree(n, rng), 1, rng)


def random_connected(n: int, rng: random.Random, extra: int | None = None) -> Graph:
    """Random spanning tree plus ``extra`` random further edges."""
    T = random_tree(n, rng)
    room = n * (n - 1) // 2 - (n - 1)
    if extra is None:
        extra = rng.randint(0, room)
    return _add_random_non_edges(T, min(extra, room), rng)


def random_block_graph(n_blocks: int, max_block: int, rng: random.Random, max_n: int | None = None) -> Graph:
    """Glue random cliques of order ``2..max_block`` at random existing vertices.

    Each block after the first shares exactly one vertex with the graph built
    so far, which is what makes every block a clique and the result a block
    graph.  With ``max_n`` the block sizes are truncated to stay within it.
    """
    if n_blocks < 1 or max_block < 2:
        raise GraphError("need at least one block of order at least 2")
    size = rng.randint(2, max_block)
    if max_n is not None:
        size = min(size, max_n)
    edges = list(combinations(range(size), 2))
    n = size
    for _ in range(n_blocks - 1):
        room = max_block if max_n is None else min(max_block, max_n - n + 1)
        if room < 2:
            break
        size = rng.randint(2, room)
        cut = rng.randrange(n)
        members = [cut] + list(range(n, n + size - 1))
        edges += list(combinations(members, 2))
        n += size - 1
    G = build_graph(n, edges)
    if not classify(G).block_graph:
        raise AssertionError("glued cliques must form a block graph")
    return G


NO_PENDANTS = "no_pendants"
NO_DEG2_NEIGHBORS = "no_deg2_neighbors"


def quasi_vertex_without_deg2_neighbor(G: Graph) -> int | None:
    flags = classify(G)
    for x in sorted(flags.quasi_vertices):
        if all(G.degree(u) != 2 for u in bits(G.adj[x])):
            return x
    return None


def random_quasi_tree(n: int, mode: str, rng: random.Random, retries: int = 200) -> Graph:
    """Random tree on ``n - 1`` vertices plus a quasi-vertex joined to some of them.

    ``no_pendants``: the new vertex is joined to every leaf of the tree, plus
    a random selection of other vertices.  ``no_deg2_neighbors``: it is joined
    only to tree vertices of tree degree at least 2, so none of its neighbours
    ends up with degree 2.  The requested condition is re-checked on the
    finished graph and generation retried on failure.
    """
    if mode not in (NO_PENDANTS, NO_DEG2_NEIGHBORS):
        raise GraphError(f"unknown quasi-tree mode {mode!r}")
    if n < 3:
        raise GraphError("quasi-trees here need at least 3 vertices")
    for _ in range(retries):
        T = random_tree(n - 1, rng)
        x = n - 1
        tree_leaves = sorted(leaves(T))
        others = [v for v in range(n - 1) if v not in tree_leaves]
        if mode == NO_PENDANTS:
            nbrs = tree_leaves + [v for v in others if rng.random() < 0.3]
        else:
            nbrs = [v for v in others if rng.random() < 0.5]
        if not nbrs:
            continue
        G = build_graph(n, T.edges() + [(x, v) for v in nbrs])
        flags = classify(G)
        if not flags.quasi_tree:
            continue
        if mode == NO_PENDANTS and not leaves(G):
            return G
        if mode == NO_DEG2_NEIGHBORS and quasi_vertex_without_deg2_neighbor(G) is not None:
            return G
    raise GraphError(f"retry budget exhausted for random quasi-tree (n={n}, mode={mode})")


def random_forest(rng: random.Random, max_n: int = 14, max_components: int = 4) -> Graph:
    """Forest with 1..max_components non-trivial trees and possibly isolated vertices.

    Vertex labels are shuffled so components are interleaved.
    """
    k = rng.randint(1, max_components)
    sizes = [2] * k
    budget = max_n - 2 * k
    isolated = rng.randint(0, min(2, budget))
    budget -= isolated
    for _ in range(rng.randint(0, budget)):
        sizes[rng.randrange(k)] += 1
    parts = [random_tree(s, rng) for s in sizes] + [build_graph(1, [])] * isolated
    F = disjoint_union(*parts)
    perm = list(range(F.n))
    rng.shuffle(perm)
    return build_graph(F.n, [(perm[u], perm[v]) for u, v in F.edges()])


# ---------------------------------------------------------------------------
# figure families (reconstructions; see validate_figure_family)


def _leaf_names(prefix: str, k: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, k + 1)]


def _check_st(s: int, t: int):
    if s < 0 or t < 1:
        raise GraphError(f"need s >= 0 and t >= 1, got s={s}, t={t}")


def _named(names: list[str], edges: list[tuple[str, str]]) -> Graph:
    index = {name: i for i, name in enumerate(names)}
    return build_graph(len(names), [(index[a], index[b]) for a, b in edges], labels=names)


def h1(s: int, t: int) -> Graph:
    """Two 4-cycles ``c-x-a-z`` and ``c-y-b-w`` glued at ``c``, with leaves
    ``u1..us`` on ``a`` and ``v1..vt`` on ``b``.  Bipartite and bicyclic."""
    _check_st(s, t)
    us, vs = _leaf_names("u", s), _leaf_names("v", t)
    names = ["x", "y", "z", "w", "a", "b", "c"] + us + vs
    edges = [("c", "x"), ("x", "a"), ("a", "z"), ("z", "c"), ("c", "y"), ("y", "b"), ("b", "w"), ("w", "c")]
    edges += [("a", u) for u in us] + [("b", v) for v in vs]
    return _named(names, edges)


def h2() -> Graph:
    """The bowtie: triangles ``v1 v3 v4`` and ``v2 v3 v5`` sharing ``v3``."""
    names = ["v1", "v2", "v3", "v4", "v5"]
    edges = [("v1", "v3"), ("v1", "v4"), ("v3", "v4"), ("v2", "v3"), ("v2", "v5"), ("v3", "v5")]
    return _named(names, edges)


def h3(k: int = 8) -> Graph:
    """The fan: path ``v1..vk`` plus a vertex ``v`` adjacent to all of it."""
    if k < 2:
        raise GraphError(f"fan needs a path of at least 2 vertices, got {k}")
    path = _leaf_names("v", k)
    edges = list(zip(path, path[1:])) + [("v", p) for p in path]
    return _named(path + ["v"], edges)


def h4(s: int, t: int) -> Graph:
    """Best-effort quasi-tree: a path ``x-a-z-c-w-b-y`` with a vertex ``q``
    joined to ``x, z, w, y``, leaves ``u1..us`` on ``a`` and ``v1..vt`` on ``b``.

    Bipartite, and ``G - q`` is a tree.  The true figure is unavailable and
    this candidate does not reach ``Z = s+t+3``; see validate_figure_family.
    """
    _check_st(s, t)
    us, vs = _leaf_names("u", s), _leaf_names("v", t)
    names = ["x", "y", "z", "w", "a", "b", "c", "q"] + us + vs
    edges = [("x", "a"), ("a", "z"), ("z", "c"), ("c", "w"), ("w", "b"), ("b", "y")]
    edges += [("q", x) for x in ("x", "z", "w", "y")]
    edges += [("a", u) for u in us] + [("b", v) for v in vs]
    return _named(names, edges)


FIGURE_FAMILIES: dict[str, Callable[..., Graph]] = {"H1": h1, "H2": h2, "H3": h3, "H4": h4}


@dataclass(frozen=True)
class FigureVerdict:
    name: str
    params: dict
    verdict: str
    Z: int
    gp: int
    expected_Z: int
    expected_gp: int
    Z_witness_ok: bool
    gp_witness_ok: bool

    @property
    def confirmed(self) -> bool:
        return self.verdict == "confirmed"


def _published(name: str, params: dict) -> tuple[int, int, list[str], list[str]]:
    """Expected ``(Z, gp)`` and the named zero forcing set and gp-set."""
    if name == "H2":
        return 3, 4, ["v1", "v3", "v5"], ["v1", "v2", "v4", "v5"]
    if name == "H3":
        return 2, 6, ["v1", "v"], ["v1", "v2", "v4", "v5", "v7", "v8"]
    s, t = params["s"], params["t"]
    us, vs = _leaf_names("u", s), _leaf_names("v", t)
    if name == "H1":
        zf = us + ["x", "y"] + vs[:-1]
        if s + t >= 4:
            return s + t + 1, s + t, zf, us + vs
        return s + t + 1, 4, zf, ["x", "y", "z", "w"]
    if name == "H4":
        return s + t + 3, s + t, us + ["x", "y", "z", "w"] + vs[:-1], us + vs
    raise GraphError(f"unknown figure family {name!r}")


def validate_figure_family(name: str, candidate: Graph | None = None, params: dict | None = None, cap: int | None = None) -> FigureVerdict:
    """Compare exact ``Z`` and ``gp`` of a candidate against the published values.

    ``candidate`` defaults to this module's reconstruction.  The verdict is
    ``confirmed`` only if both numbers match and the named witness sets are a
    zero forcing set and a set in general position.
    """
    from .forcing import is_zero_forcing_set, zero_forcing_number
    from .genpos import gp_number, is_general_position_set

    params = dict(params or {})
    if candidate is None:
        candidate = FIGURE_FAMILIES[name](**params)
    if name == "H3" and candidate.n != 9:
        raise GraphError("the published H3 values refer to the fan on a path of 8 vertices")
    exp_z, exp_gp, zf_names, gp_names = _published(name, params)
    Z = zero_forcing_number(candidate, cap).number
    gp = gp_number(candidate, cap).number
    index = {label: v for v, label in enumerate(candidate.labels)}
    try:
        zf = [index[x] for x in zf_names]
        gs = [index[x] for x in gp_names]
        z_ok = len(zf) == Z and is_zero_forcing_set(candidate, zf)
        gp_ok = len(gs) == gp and is_general_position_set(candidate, gs)
    except KeyError:
        z_ok = gp_ok = False
    ok = Z == exp_z and gp == exp_gp and z_ok and gp_ok
    return FigureVerdict(name, params, "confirmed" if ok else "refuted", Z, gp, exp_z, exp_gp, z_ok, gp_ok)


# ---------------------------------------------------------------------------
# spec-driven generation


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int | None = None

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.params.items(), key=str)), self.seed))


def _rng(spec: FamilySpec) -> random.Random:
    if spec.seed is None:
        raise GraphError(f"{spec.kind} needs a seed")
    return random.Random(spec.seed)


_GENERATORS: dict[str, Callable[[FamilySpec], Graph]] = {
    "path": lambda s: path_graph(s.params["n"]),
    "cycle": lambda s: cycle_graph(s.params["n"]),
    "star": lambda s: star_graph(s.params["k"]),
    "complete": lambda s: complete_graph(s.params["n"]),
    "spider": lambda s: spider(list(s.params["legs"])),
    "partial_sun": lambda s: partial_sun(s.params["length"], s.params.get("U", ())),
    "random_tree": lambda s: random_tree(s.params["n"], _rng(s)),
    "random_unicyclic": lambda s: random_unicyclic(s.params["n"], _rng(s)),
    "random_connected": lambda s: random_connected(s.params["n"], _rng(s), s.params.get("extra")),
    "random_block": lambda s: random_block_graph(
        s.params["blocks"], s.params.get("max_block", 4), _rng(s), s.params.get("max_n")
    ),
    "random_quasi_tree": lambda s: random_quasi_tree(s.params["n"], s.params["mode"], _rng(s)),
    "random_forest": lambda s: random_forest(_rng(s), s.params.get("max_n", 14), s.params.get("max_components", 4)),
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``; figure families carry vertex names as labels."""
    if spec.kind in FIGURE_FAMILIES:
        return FIGURE_FAMILIES[spec.kind](**spec.params)
    try:
        make = _GENERATORS[spec.kind]
    except KeyError:
        raise GraphError(f"unknown family kind {spec.kind!r}") from None
    try:
        return make(spec)
    except KeyError as exc:
        raise GraphError(f"{spec.kind} is missing parameter {exc}") from None


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _dedup(graphs) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        key = canonical_key(g)
        if key not in seen:
            seen[key] = g
    # enumerated graphs carry plain integer labels
    return tuple(Graph(g.n, canonical_graph(g).adj) for g in (seen[k] for k in sorted(seen)))


def _add_leaf_everywhere(g: Graph):
    for v in range(g.n):
        yield build_graph(g.n + 1, g.edges() + [(v, g.n)])


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    return _dedup(h for g in _trees(n - 1) for h in _add_leaf_everywhere(g))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= TREE_CAP:
        raise CapExceeded(f"tree enumeration supports 1 <= n <= {TREE_CAP}")
    return iter(_trees(n))


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    if n == 3:
        return (cycle_graph(3),)
    grown = [h for g in _unicyclic(n - 1) for h in _add_leaf_everywhere(g)]
    return _dedup(grown + [cycle_graph(n)])


def enumerate_unicyclic(n: int) -> Iterator[Graph]:
    """One connected unicyclic graph per isomorphism class on ``n`` vertices."""
    if n > UNICYCLIC_CAP:
        raise CapExceeded(f"unicyclic enumeration supports n <= {UNICYCLIC_CAP}")
    if n < 3:
        return iter(())
    return iter(_unicyclic(n))


@lru_cache(maxsize=None)
def _connected(n: int, m: int) -> tuple[Graph, ...]:
    if m < n - 1 or m > n * (n - 1) // 2:
        return ()
    if n == 1:
        return (build_graph(1, []),)
    grown = []
    for d in range(1, n):
        for g in _connected(n - 1, m - d):
            base = g.edges()
            for S in combinations(range(n - 1), d):
                grown.append(build_graph(n, base + [(v, n - 1) for v in S]))
    return _dedup(grown)


def enumerate_connected(n: int, m: int | None = None) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices (with ``m`` edges if given), up to isomorphism."""
    if not 1 <= n <= CONNECTED_CAP:
        raise CapExceeded(f"connected enumeration supports 1 <= n <= {CONNECTED_CAP}")
    sizes = [m] if m is not None else range(n - 1, n * (n - 1) // 2 + 1)
    for k in sizes:
        yield from _connected(n, k)


def enumerate_bicyclic(n: int) -> Iterator[Graph]:
    """Connected graphs with ``m = n + 1``; sparse, so the cap is higher than for all connected graphs."""
    if not 1 <= n <= BICYCLIC_CAP:
        raise CapExceeded(f"bicyclic enumeration supports 1 <= n <= {BICYCLIC_CAP}")
    return iter(_connected(n, n + 1))


def enumerate_block_graphs(n: int) -> Iterator[Graph]:
    """Connected block graphs on ``n`` vertices, filtered from the connected enumeration."""
    return (g for g in enumerate_connected(n) if classify(g).block_graph)


def labelled_trees(n: int) -> Iterator[Graph]:
    """Every labelled tree on ``n`` vertices, one per Prufer sequence."""
    if n <= 2:
        yield prufer_tree([], n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_tree(list(seq), n)


def count_by_labelled_dedup(graphs) -> int:
    """Number of isomorphism classes among ``graphs``."""
    return len({canonical_key(g) for g in graphs})


def enumerate_all_graphs_bruteforce(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices (``2^(n choose 2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
