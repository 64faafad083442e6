"""Colour-change rule simulation and the exact zero forcing number."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .graph import CapExceeded, Graph, VertexSet, bits, to_mask, to_set

DEFAULT_CAP = int(os.environ.get("ZFGP_CAP", 16))


@dataclass(frozen=True)
class ForcingChronicle:
    initial: VertexSet
    forces: tuple[tuple[int, int], ...]
    final: VertexSet

    def replay(self, G: Graph) -> VertexSet:
        """Re-run the recorded forces, checking each was legal when applied."""
        black = to_mask(self.initial)
        for x, y in self.forces:
            white = G.full & ~black
            if not black >> x & 1 or G.adj[x] & white != 1 << y:
                raise ValueError(f"illegal force {x}->{y}")
            black |= 1 << y
        return to_set(black)


def closure_mask(G: Graph, black: int) -> int:
    """Black set after applying the colour-change rule until it stalls."""
    adj = G.adj
    white = G.full & ~black
    active = black
    while active:
        newly = 0
        for x in bits(active):
            w = adj[x] & white
            if w and not w & (w - 1):
                newly |= w
                white &= ~w
        if not newly:
            break
        black |= newly
        # only vertices near a change can gain a force
        touched = newly
        for y in bits(newly):
            touched |= adj[y]
        active = touched & black
    return black


def forcing_closure(G: Graph, S: Iterable[int], rng: random.Random | None = None) -> ForcingChronicle:
    """Apply forces one at a time and record them.

    With ``rng`` the next force is drawn uniformly from all legal forces;
    otherwise the smallest forcer goes first.
    """
    initial = to_mask(S)
    if initial & ~G.full:
        raise ValueError("initial set contains vertices outside the graph")
    black = initial
    forces = []
    while True:
        white = G.full & ~black
        legal = []
        for x in bits(black):
            w = G.adj[x] & white
            if w and not w & (w - 1):
                legal.append((x, w.bit_length() - 1))
                if rng is None:
                    break
        if not legal:
            break
        x, y = rng.choice(legal) if rng is not None else legal[0]
        forces.append((x, y))
        black |= 1 << y
    return ForcingChronicle(to_set(initial), tuple(forces), to_set(black))


def is_zero_forcing_set(G: Graph, S: Iterable[int]) -> bool:
    return closure_mask(G, to_mask(S)) == G.full


class ZeroForcingResult(NamedTuple):
    number: int
    witness: VertexSet


def zero_forcing_number(G: Graph, cap: int | None = None) -> ZeroForcingResult:
    """Exact zero forcing number with the lexicographically smallest minimum set.

    Sizes are tried in increasing order starting from the minimum degree.
    That start is sound: the first force ``x -> y`` of any process needs ``x``
    and all of its neighbours except ``y`` black from the outset, so every
    zero forcing set of a graph with an edge has at least ``deg(x) >= delta``
    vertices.

    Within size ``k`` the sets are enumerated lexicographically, extending a
    prefix ``T`` only by vertices outside ``cl(T)``.  Adding a vertex already in
    ``cl(T)`` yields a set with the same closure as a set of size ``k - 1``,
    and all of those are known to fail by the time size ``k`` is searched, so
    the skipped sets are non-forcing and the first hit is still the
    lexicographically smallest.
    """
    cap = DEFAULT_CAP if cap is None else cap
    n = G.n
    if n > cap:
        raise CapExceeded(f"zero forcing search refused for n={n} > cap {cap}")
    if n == 0:
        return ZeroForcingResult(0, frozenset())
    full = G.full
    delta = min(G.degrees())

    def search(k, start, chosen, closed):
        if k == 0:
            return chosen if closed == full else None
        # leave room for the remaining k - 1 picks
        for v in range(start, n - k + 1):
            if closed >> v & 1:
                continue
            hit = search(k - 1, v + 1, chosen | 1 << v, closure_mask(G, closed | 1 << v))
            if hit is not None:
                return hit
        return None

    for k in range(max(1, delta), n + 1):
        hit = search(k, 0, 0, 0)
        if hit is not None:
            return ZeroForcingResult(k, to_set(hit))
    raise AssertionError("the full vertex set is always forcing")


def zero_forcing_unicyclic_fast(G: Graph) -> int:
    """Zero forcing number of a connected unicyclic graph via its path cover number."""
    from .pathcover import path_cover_via_trim

    return path_cover_via_trim(G)
