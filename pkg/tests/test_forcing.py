import random
from itertools import combinations

import pytest

from oracles import naive_closure, naive_zero_forcing, to_nx
from zfgp.families import (
    complete_graph,
    cycle_graph,
    enumerate_connected,
    enumerate_trees,
    enumerate_unicyclic,
    partial_sun,
    path_graph,
    random_connected,
    star_graph,
)
from zfgp.forcing import (
    forcing_closure,
    is_zero_forcing_set,
    zero_forcing_number,
    zero_forcing_unicyclic_fast,
)
from zfgp.graph import CapExceeded, build_graph, leaves
from zfgp.pathcover import path_cover_number


class TestClosure:
    def test_path_from_leaf(self):
        ch = forcing_closure(path_graph(4), {0})
        assert ch.forces == ((0, 1), (1, 2), (2, 3))
        assert ch.final == {0, 1, 2, 3}

    def test_cycle_stalls(self):
        ch = forcing_closure(cycle_graph(4), {0})
        assert ch.forces == () and ch.final == {0}

    def test_complete_any_three(self):
        for S in combinations(range(4), 3):
            assert forcing_closure(complete_graph(4), S).final == {0, 1, 2, 3}

    def test_chronicle_replays(self):
        rng = random.Random(5)
        for _ in range(100):
            G = random_connected(rng.randint(2, 10), rng)
            S = {v for v in range(G.n) if rng.random() < 0.3}
            ch = forcing_closure(G, S, rng=rng)
            assert ch.replay(G) == ch.final
            assert ch.final == set(S) | {y for _, y in ch.forces}
            assert ch.final == naive_closure(to_nx(G), S)

    def test_replay_rejects_illegal(self):
        ch = forcing_closure(path_graph(4), {0})
        bad = type(ch)(ch.initial, ((0, 2),), ch.final)
        with pytest.raises(ValueError):
            bad.replay(path_graph(4))


class TestIsZeroForcing:
    def test_examples(self):
        assert not is_zero_forcing_set(path_graph(5), {2})
        assert is_zero_forcing_set(cycle_graph(6), {0, 1})
        G = random_connected(9, random.Random(2))
        assert is_zero_forcing_set(G, range(G.n))


class TestZeroForcingNumber:
    def test_examples(self):
        assert zero_forcing_number(complete_graph(5)).number == 4
        assert zero_forcing_number(cycle_graph(7)).number == 2
        assert zero_forcing_number(star_graph(3)).number == 2

    def test_matches_brute_force(self):
        for n in range(1, 8):
            for G in enumerate_connected(n):
                z = zero_forcing_number(G)
                assert z.number == naive_zero_forcing(to_nx(G))[0]

    def test_witness_minimal_and_lexicographic(self):
        # every size Z-1 subset fails, and the witness is the first size-Z hit
        for n in range(1, 10):
            for G in enumerate_trees(n) if n > 7 else enumerate_connected(n):
                z = zero_forcing_number(G)
                assert len(z.witness) == z.number and is_zero_forcing_set(G, z.witness)
                if z.number > 1:
                    assert not any(is_zero_forcing_set(G, S) for S in combinations(range(G.n), z.number - 1))
                first = next(S for S in combinations(range(G.n), z.number) if is_zero_forcing_set(G, S))
                assert tuple(sorted(z.witness)) == first

    def test_unicyclic_n9_exhaustive_minimality(self):
        for G in enumerate_unicyclic(9):
            z = zero_forcing_number(G)
            assert is_zero_forcing_set(G, z.witness)
            assert not any(is_zero_forcing_set(G, S) for S in combinations(range(9), z.number - 1))

    def test_empty_graph(self):
        assert zero_forcing_number(build_graph(0, [])).number == 0

    def test_cap(self):
        with pytest.raises(CapExceeded):
            zero_forcing_number(path_graph(20), cap=10)


class TestUnicyclicFast:
    def test_examples(self):
        assert zero_forcing_unicyclic_fast(cycle_graph(5)) == 2
        assert zero_forcing_unicyclic_fast(build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])) == 2
        assert zero_forcing_unicyclic_fast(partial_sun(4, [0, 1])) == 2

    def test_equals_exact_and_path_cover(self):
        for n in range(3, 10):
            for G in enumerate_unicyclic(n):
                z = zero_forcing_number(G).number
                assert zero_forcing_unicyclic_fast(G) == z == path_cover_number(G).number


def test_tree_bound():
    for n in range(2, 11):
        for T in enumerate_trees(n):
            assert zero_forcing_number(T).number <= len(leaves(T)) - 1
