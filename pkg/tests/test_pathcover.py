import random
from collections import Counter

import pytest

from oracles import naive_path_cover, to_nx
from zfgp.canon import canonical_key
from zfgp.families import (
    cycle_graph,
    enumerate_connected,
    enumerate_unicyclic,
    partial_sun,
    path_graph,
    random_unicyclic,
    spider,
    star_graph,
)
from zfgp.genpos import gp_number
from zfgp.graph import GraphError, build_graph, leaves
from zfgp.pathcover import (
    APPROPRIATE,
    ISOLATED_PATH,
    appropriate_vertices,
    check_path_partition,
    is_partial_sun,
    is_trimmed,
    partial_sun_path_cover,
    path_cover_number,
    path_cover_via_trim,
    peripheral_leaves,
    replay_trim,
    trimmed_form,
)

TRIANGLE_LEAF = build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


class TestPathCover:
    def test_examples(self):
        assert path_cover_number(path_graph(8)).number == 1
        assert path_cover_number(star_graph(3)).number == 2
        assert path_cover_number(cycle_graph(5)).number == 2

    def test_matches_brute_force(self):
        for n in range(1, 7):
            for G in enumerate_connected(n):
                p = path_cover_number(G)
                assert p.number == naive_path_cover(to_nx(G))
                assert check_path_partition(G, p.partition)

    def test_partition_checker_rejects(self):
        assert not check_path_partition(cycle_graph(4), [(0, 1, 2, 3)])
        assert not check_path_partition(path_graph(3), [(0, 1)])
        assert not check_path_partition(path_graph(3), [(0, 2, 1)])


class TestTrimRules:
    def test_appropriate(self):
        assert 0 in appropriate_vertices(star_graph(3))
        assert appropriate_vertices(cycle_graph(6)) == frozenset()
        assert 0 in appropriate_vertices(spider([2, 2, 1]))

    def test_peripheral(self):
        assert peripheral_leaves(path_graph(4)) == {0, 3}
        assert peripheral_leaves(star_graph(3)) == frozenset()
        G = build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])
        assert peripheral_leaves(G) == {4}


class TestTrimmedForm:
    def test_star(self):
        tr = trimmed_form(star_graph(3))
        assert (tr.n1, tr.n2, tr.n3, tr.empty) == (1, 3, 0, True)
        assert tr.log[0].kind == APPROPRIATE
        assert all(s.kind == ISOLATED_PATH for s in tr.log[1:])

    def test_bare_cycle_is_fixed(self):
        tr = trimmed_form(cycle_graph(6))
        assert tr.graph.n == 6 and (tr.n1, tr.n2, tr.n3) == (0, 0, 0)
        sun = is_partial_sun(tr.graph)
        assert sun is not None and sun.U == frozenset()

    def test_partial_sun_is_fixed(self):
        G = partial_sun(4, [0, 1])
        tr = trimmed_form(G)
        assert tr.graph == G and (tr.n1, tr.n2, tr.n3) == (0, 0, 0)

    def test_log_replays_to_trim(self):
        for n in range(3, 9):
            for G in enumerate_unicyclic(n):
                tr = trimmed_form(G)
                assert replay_trim(G, tr.log) == tr.graph
                assert is_trimmed(tr.graph)
                assert tr.empty or is_partial_sun(tr.graph) is not None

    def test_replay_rejects_illegal(self):
        tr = trimmed_form(star_graph(3))
        with pytest.raises(ValueError):
            replay_trim(star_graph(3), tr.log[1:])

    def test_random_orders_agree_on_trim(self):
        rng = random.Random(11)
        for _ in range(30):
            G = random_unicyclic(rng.randint(3, 12), rng)
            keys = {canonical_key(trimmed_form(G, random.Random(rng.random())).graph) for _ in range(5)}
            assert len(keys) == 1


class TestPartialSun:
    def test_recognition(self):
        G = build_graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6)])
        sun = is_partial_sun(G)
        assert sun is not None and sun.segment_sizes == [2]
        assert is_partial_sun(cycle_graph(4)).U == frozenset()
        assert is_partial_sun(build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)])) is None

    def test_generated_segments(self):
        assert is_partial_sun(partial_sun(6, [0, 1, 3])).segment_sizes == [2, 1]

    def test_formula(self):
        assert partial_sun_path_cover([3]) == 2
        assert partial_sun_path_cover([1, 1, 1]) == 3
        assert partial_sun_path_cover([]) == 2

    def test_formula_against_exact(self):
        for length in range(3, 9):
            for mask in range(1 << length):
                U = [i for i in range(length) if mask >> i & 1]
                G = partial_sun(length, U)
                assert partial_sun_path_cover(is_partial_sun(G)) == path_cover_number(G).number


class TestViaTrim:
    def test_examples(self):
        assert path_cover_via_trim(cycle_graph(7)) == 2
        assert path_cover_via_trim(TRIANGLE_LEAF) == 2

    def test_empty_trim_case(self):
        found = 0
        for H in enumerate_unicyclic(8):
            tr = trimmed_form(H)
            if tr.empty:
                found += 1
                assert path_cover_via_trim(H) == tr.n2 - tr.n1 == path_cover_number(H).number
        assert found > 0

    def test_rejects_non_unicyclic(self):
        with pytest.raises(GraphError):
            path_cover_via_trim(path_graph(4))

    def test_exhaustive(self):
        for n in range(3, 10):
            for G in enumerate_unicyclic(n):
                assert path_cover_via_trim(G) == path_cover_number(G).number


class TestTheorem3:
    def test_exhaustive(self):
        kinds = Counter()
        for n in range(3, 10):
            for G in enumerate_unicyclic(n):
                tr = trimmed_form(G)
                if tr.empty:
                    kinds["empty"] += 1
                    assert tr.n2 - tr.n1 <= len(leaves(G))
                else:
                    kinds["sun"] += 1
                    sun = is_partial_sun(tr.graph)
                    assert gp_number(G).number >= max(2, len(sun.U)) + tr.n2 - tr.n1
        assert kinds["empty"] and kinds["sun"]
