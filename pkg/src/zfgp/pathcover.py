"""Induced path covers, the trimming reduction, and partial suns.

Trimming repeatedly deletes

* an *appropriate* vertex ``x``: ``G - x`` has at least two path components
  each meeting ``N(x)`` in exactly one vertex, which is an endpoint;
* an *isolated path*: a whole component that is a path (``K1`` included);
* a *peripheral leaf*: a degree-1 vertex whose neighbour has degree at most 2.

For connected unicyclic graphs the fixpoint is empty or a partial sun, and
``P(G) = P(trim) + n2 - n1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import ceil
from typing import Iterable, NamedTuple, Sequence

from .forcing import DEFAULT_CAP
from .graph import (
    CapExceeded,
    Graph,
    GraphError,
    VertexSet,
    bits,
    components,
    induced_mask,
    is_connected,
    is_path_mask,
    to_mask,
    to_set,
    unique_cycle,
)

APPROPRIATE = "appropriate"
ISOLATED_PATH = "isolated_path"
PERIPHERAL_LEAF = "peripheral_leaf"


# ---------------------------------------------------------------------------
# exact path cover number


def induced_paths(G: Graph) -> list[tuple[int, tuple[int, ...]]]:
    """All induced paths as ``(mask, vertex sequence)``, each listed once."""
    adj = G.adj
    out = []

    def grow(seq, mask):
        if seq[0] <= seq[-1]:
            out.append((mask, tuple(seq)))
        last = seq[-1]
        inner = mask & ~(1 << last)
        for w in bits(adj[last] & ~mask):
            if adj[w] & inner:
                continue
            seq.append(w)
            grow(seq, mask | 1 << w)
            seq.pop()

    for s in range(G.n):
        grow([s], 1 << s)
    return out


class PathCoverResult(NamedTuple):
    number: int
    partition: list[tuple[int, ...]]


def path_cover_number(G: Graph, cap: int | None = None) -> PathCoverResult:
    """Minimum number of vertex-disjoint induced paths covering ``V(G)``.

    Memoised recursion over the uncovered vertex set; the lowest uncovered
    vertex is covered by some induced path of ``G`` inside the uncovered set.
    """
    cap = DEFAULT_CAP if cap is None else cap
    if G.n > cap:
        raise CapExceeded(f"path cover search refused for n={G.n} > cap {cap}")
    through: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(G.n)]
    for mask, seq in induced_paths(G):
        through[min(seq)].append((mask, seq))
    memo: dict[int, tuple[int, tuple[int, ...] | None]] = {0: (0, None)}

    def solve(rest):
        hit = memo.get(rest)
        if hit is not None:
            return hit[0]
        v = (rest & -rest).bit_length() - 1
        best, choice = G.n + 1, None
        # every path covering v inside rest has v as its smallest vertex
        for mask, seq in through[v]:
            if mask & ~rest:
                continue
            value = 1 + solve(rest & ~mask)
            if value < best:
                best, choice = value, seq
        memo[rest] = (best, choice)
        return best

    number = solve(G.full)
    partition = []
    rest = G.full
    while rest:
        seq = memo[rest][1]
        partition.append(seq)
        rest &= ~to_mask(seq)
    return PathCoverResult(number, partition)


def check_path_partition(G: Graph, partition: Iterable[Sequence[int]]) -> bool:
    """Parts are disjoint, cover ``V(G)``, and each induces a path in the given order."""
    seen = 0
    for seq in partition:
        mask = to_mask(seq)
        if mask & seen or mask.bit_count() != len(seq):
            return False
        seen |= mask
        if not is_path_mask(G, mask):
            return False
        if any(not G.has_edge(a, b) for a, b in zip(seq, seq[1:])):
            return False
    return seen == G.full


# ---------------------------------------------------------------------------
# trimming on an alive-vertex mask of a fixed graph


def _deg(G: Graph, alive: int, v: int) -> int:
    return (G.adj[v] & alive).bit_count()


def _is_appropriate(G: Graph, alive: int, x: int) -> bool:
    attached = 0
    nbrs = G.adj[x] & alive
    for comp in components(G, alive & ~(1 << x)):
        touch = nbrs & comp
        if not touch or touch & (touch - 1):
            continue
        if not is_path_mask(G, comp):
            continue
        t = touch.bit_length() - 1
        if (G.adj[t] & comp).bit_count() <= 1:
            attached += 1
            if attached >= 2:
                return True
    return False


def _appropriate(G: Graph, alive: int) -> list[int]:
    return [x for x in bits(alive) if _is_appropriate(G, alive, x)]


def _isolated_paths(G: Graph, alive: int) -> list[int]:
    return [c for c in components(G, alive) if is_path_mask(G, c)]


def _peripheral(G: Graph, alive: int) -> list[int]:
    out = []
    for v in bits(alive):
        nb = G.adj[v] & alive
        if nb and not nb & (nb - 1) and _deg(G, alive, nb.bit_length() - 1) <= 2:
            out.append(v)
    return out


def appropriate_vertices(G: Graph) -> VertexSet:
    return frozenset(_appropriate(G, G.full))


def isolated_paths(G: Graph) -> list[VertexSet]:
    return [to_set(c) for c in _isolated_paths(G, G.full)]


def peripheral_leaves(G: Graph) -> VertexSet:
    return frozenset(_peripheral(G, G.full))


class TrimStep(NamedTuple):
    kind: str
    vertices: VertexSet


@dataclass(frozen=True)
class TrimResult:
    graph: Graph
    n1: int
    n2: int
    n3: int
    log: tuple[TrimStep, ...] = field(default=())
    remaining: VertexSet = frozenset()

    @property
    def empty(self) -> bool:
        return self.graph.n == 0


def _legal_steps(G: Graph, alive: int) -> list[TrimStep]:
    steps = [TrimStep(APPROPRIATE, frozenset([x])) for x in _appropriate(G, alive)]
    steps += [TrimStep(ISOLATED_PATH, to_set(c)) for c in _isolated_paths(G, alive)]
    steps += [TrimStep(PERIPHERAL_LEAF, frozenset([v])) for v in _peripheral(G, alive)]
    return steps


def _next_step(G: Graph, alive: int) -> TrimStep | None:
    # deterministic policy: appropriate, then isolated path, then peripheral leaf,
    # lowest index first within each kind
    for x in bits(alive):
        if _is_appropriate(G, alive, x):
            return TrimStep(APPROPRIATE, frozenset([x]))
    paths = _isolated_paths(G, alive)
    if paths:
        return TrimStep(ISOLATED_PATH, to_set(paths[0]))
    leaves_ = _peripheral(G, alive)
    if leaves_:
        return TrimStep(PERIPHERAL_LEAF, frozenset([leaves_[0]]))
    return None


def trimmed_form(G: Graph, rng: random.Random | None = None) -> TrimResult:
    """Trim ``G`` to its fixpoint.

    Without ``rng`` the deterministic policy is used; with ``rng`` each step
    is drawn uniformly from every deletion legal at that moment.
    """
    alive = G.full
    counts = {APPROPRIATE: 0, ISOLATED_PATH: 0, PERIPHERAL_LEAF: 0}
    log = []
    while alive:
        if rng is None:
            step = _next_step(G, alive)
        else:
            legal = _legal_steps(G, alive)
            step = rng.choice(legal) if legal else None
        if step is None:
            break
        counts[step.kind] += 1
        log.append(step)
        alive &= ~to_mask(step.vertices)
    return TrimResult(
        graph=induced_mask(G, alive),
        n1=counts[APPROPRIATE],
        n2=counts[ISOLATED_PATH],
        n3=counts[PERIPHERAL_LEAF],
        log=tuple(log),
        remaining=to_set(alive),
    )


def replay_trim(G: Graph, log: Iterable[TrimStep]) -> Graph:
    """Apply a deletion log to ``G``, checking every step is legal when taken."""
    alive = G.full
    for step in log:
        if step not in _legal_steps(G, alive):
            raise ValueError(f"illegal trim step {step}")
        alive &= ~to_mask(step.vertices)
    return induced_mask(G, alive)


def is_trimmed(G: Graph) -> bool:
    return not _legal_steps(G, G.full)


# ---------------------------------------------------------------------------
# partial suns


@dataclass(frozen=True)
class PartialSun:
    cycle: tuple[int, ...]
    U: VertexSet
    segments: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def segment_sizes(self) -> list[int]:
        return [len(s) for s in self.segments]


def sun_segments(cycle: Sequence[int], U: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Maximal runs of ``U`` along the cyclic order ``cycle``, ordered by smallest member."""
    U = set(U)
    if not U:
        return ()
    if len(U) == len(cycle):
        return (tuple(cycle),)
    k = next(i for i, v in enumerate(cycle) if v not in U)
    rotated = list(cycle[k:]) + list(cycle[:k])
    out, run = [], []
    for v in rotated:
        if v in U:
            run.append(v)
        elif run:
            out.append(tuple(run))
            run = []
    if run:
        out.append(tuple(run))
    return tuple(sorted(out, key=min))


def is_partial_sun(G: Graph) -> PartialSun | None:
    """Recognise a cycle with at most one pendant leaf on each cycle vertex.

    A bare cycle is a partial sun with ``U`` empty.
    """
    if G.n < 3 or G.m != G.n or not is_connected(G):
        return None
    cycle = unique_cycle(G)
    on_cycle = to_mask(cycle)
    for v in bits(G.full & ~on_cycle):
        nb = G.adj[v]
        if nb & (nb - 1) or not nb & on_cycle:
            return None
    U = []
    for v in cycle:
        extra = (G.adj[v] & ~on_cycle).bit_count()
        if extra > 1:
            return None
        if extra == 1:
            U.append(v)
    return PartialSun(tuple(cycle), frozenset(U), sun_segments(cycle, U))


def partial_sun_path_cover(sun: PartialSun | Sequence[int]) -> int:
    """``max(2, sum(ceil(|U_i| / 2)))`` over the segments of a partial sun."""
    sizes = sun.segment_sizes if isinstance(sun, PartialSun) else list(sun)
    return max(2, sum(ceil(s / 2) for s in sizes))


def path_cover_via_trim(G: Graph) -> int:
    """Path cover number of a connected unicyclic graph from its trimmed form."""
    if not (G.n >= 3 and G.m == G.n and is_connected(G)):
        raise GraphError("path_cover_via_trim needs a connected unicyclic graph")
    tr = trimmed_form(G)
    if tr.empty:
        return tr.n2 - tr.n1
    sun = is_partial_sun(tr.graph)
    if sun is None:
        raise GraphError("trimmed form is neither empty nor a partial sun")
    return partial_sun_path_cover(sun) + tr.n2 - tr.n1
