import pickle
from itertools import combinations

import networkx as nx
import pytest

from oracles import to_nx
from zfgp.canon import canonical_graph, canonical_key
from zfgp.families import (
    complete_graph,
    cycle_graph,
    enumerate_connected,
    enumerate_trees,
    labelled_trees,
    partial_sun,
    path_graph,
    spider,
    star_graph,
)
from zfgp.graph import (
    Graph,
    GraphError,
    biconnected_components,
    bits,
    branch_vertices,
    build_graph,
    classify,
    delete_vertices,
    induced_subgraph,
    is_clique_mask,
    leaves,
    quasi_vertices,
    root_tree,
    simplicial_vertices,
    unique_cycle,
)

BOWTIE = build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def iso(a, b):
    return nx.is_isomorphic(to_nx(a), to_nx(b))


class TestBuild:
    def test_path(self):
        G = build_graph(3, [(0, 1), (1, 2)])
        assert G.n == 3 and G.m == 2
        assert G.degrees() == [1, 2, 1]

    def test_cycle_degrees(self):
        G = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert G.degrees() == [2, 2, 2, 2]

    def test_complete(self):
        G = build_graph(5, list(combinations(range(5), 2)))
        assert G.m == 10

    @pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
    def test_rejects(self, edges):
        with pytest.raises(GraphError):
            build_graph(3, edges)

    def test_duplicate_edges_collapse(self):
        assert build_graph(2, [(0, 1), (1, 0)]).m == 1

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(GraphError):
            Graph(2, [0b10, 0])

    def test_degree_sum(self):
        for G in enumerate_connected(6):
            assert sum(G.degrees()) == 2 * G.m

    def test_immutable_and_picklable(self):
        G = path_graph(4)
        with pytest.raises(AttributeError):
            G.n = 7
        assert pickle.loads(pickle.dumps(G)) == G

    def test_labels_ignored_by_equality(self):
        G = path_graph(3)
        assert G.with_labels("abc") == G
        assert G.with_labels("abc").label_of([2, 0]) == ["a", "c"]


class TestClassify:
    def test_p4(self):
        f = classify(path_graph(4))
        assert f.tree and f.quasi_tree and f.forest and f.connected

    def test_c5(self):
        f = classify(cycle_graph(5))
        assert f.unicyclic and f.quasi_tree and f.cycle_graph and not f.tree

    def test_k4_minus_edge(self):
        G = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        assert classify(G).bicyclic

    def test_small_edge_cases(self):
        assert classify(build_graph(1, [])).tree
        assert classify(path_graph(2)).quasi_tree
        assert not classify(build_graph(1, [])).quasi_tree

    def test_flags_consistent(self):
        for n in range(1, 7):
            for G in enumerate_connected(n):
                f = classify(G)
                if f.tree:
                    assert f.connected and f.forest
                if f.unicyclic:
                    assert f.connected and G.m == G.n
                if f.bicyclic:
                    assert f.connected and G.m == G.n + 1
                assert bool(quasi_vertices(G)) == f.quasi_tree

    def test_quasi_vertices_brute(self):
        for G in enumerate_connected(6):
            H = to_nx(G)
            expect = set()
            for v in range(G.n):
                R = H.copy()
                R.remove_node(v)
                if nx.is_tree(R):
                    expect.add(v)
            assert quasi_vertices(G) == expect

    def test_block_graph_brute(self):
        for n in range(1, 8):
            for G in enumerate_connected(n):
                H = to_nx(G)
                blocks = list(nx.biconnected_components(H)) if n > 1 else [{0}]
                brute = all(H.subgraph(b).number_of_edges() == len(b) * (len(b) - 1) // 2 for b in blocks)
                assert classify(G).block_graph == brute

    def test_bipartite_matches_networkx(self):
        for G in enumerate_connected(6):
            assert classify(G).bipartite == nx.is_bipartite(to_nx(G))

    def test_biconnected_matches_networkx(self):
        for G in enumerate_connected(6):
            ours = sorted(sorted(bits(m)) for m in biconnected_components(G))
            theirs = sorted(sorted(b) for b in nx.biconnected_components(to_nx(G)))
            assert ours == theirs

    def test_flags_stable_under_relabelling(self):
        import random

        rng = random.Random(1)
        for G in enumerate_connected(6):
            perm = list(range(G.n))
            rng.shuffle(perm)
            H = build_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
            assert canonical_key(H) == canonical_key(G)
            a, b = classify(H).as_dict(), classify(G).as_dict()
            assert len(a.pop("quasi_vertices")) == len(b.pop("quasi_vertices"))
            assert a == b


class TestVertexQueries:
    def test_leaves(self):
        assert len(leaves(star_graph(4))) == 4
        assert leaves(cycle_graph(6)) == frozenset()
        assert len(leaves(spider([2, 2, 3]))) == 3

    def test_simplicial(self):
        assert simplicial_vertices(complete_graph(4)) == {0, 1, 2, 3}
        assert simplicial_vertices(path_graph(4)) == {0, 3}
        assert simplicial_vertices(BOWTIE) == {0, 1, 3, 4}

    def test_unique_cycle(self):
        cyc = unique_cycle(cycle_graph(5))
        assert sorted(cyc) == list(range(5))
        assert all(abs(a - b) in (1, 4) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
        G = build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
        assert sorted(unique_cycle(G)) == [0, 1, 2]
        with pytest.raises(GraphError):
            unique_cycle(path_graph(4))

    def test_root_tree(self):
        G = build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        assert iso(root_tree(G, 0), path_graph(2))
        assert root_tree(cycle_graph(4), 1).n == 1
        H = build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (0, 5)])
        assert iso(root_tree(H, 0), star_graph(3))

    def test_branch_vertices(self):
        assert branch_vertices(cycle_graph(5)) == frozenset()
        assert branch_vertices(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)])) == {2}
        assert len(branch_vertices(partial_sun(6, [0, 1, 3]))) == 3

    def test_delete_and_induce(self):
        assert iso(delete_vertices(path_graph(4), [0]), path_graph(3))
        G = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        assert classify(delete_vertices(G, [1])).forest
        assert induced_subgraph(G, []).n == 0

    def test_induced_keeps_original_labels(self):
        G = path_graph(5)
        H = delete_vertices(G, [0, 2])
        assert H.labels == (1, 3, 4)
        assert H.label_of([0]) == [1]

    def test_clique_mask(self):
        assert is_clique_mask(complete_graph(4), 0b1111)
        assert not is_clique_mask(path_graph(3), 0b111)


class TestCanonical:
    def test_p3_relabelled(self):
        assert canonical_key(build_graph(3, [(0, 1), (1, 2)])) == canonical_key(build_graph(3, [(1, 0), (0, 2)]))

    def test_c4_vs_p4(self):
        assert canonical_key(cycle_graph(4)) != canonical_key(path_graph(4))

    def test_labelled_trees_n4(self):
        trees = list(labelled_trees(4))
        assert len(trees) == 16
        keys = {canonical_key(t) for t in trees}
        assert len(keys) == 2
        # brute-force isomorphism classes
        reps = []
        for t in trees:
            if not any(iso(t, r) for r in reps):
                reps.append(t)
        assert len(reps) == 2

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)])
    def test_labelled_tree_classes(self, n, count):
        assert len({canonical_key(t) for t in labelled_trees(n)}) == count
        assert sum(1 for _ in enumerate_trees(n)) == count

    def test_key_iff_isomorphic(self):
        graphs = list(enumerate_connected(5))
        for a, b in combinations(graphs, 2):
            assert not iso(a, b)
        assert len({canonical_key(g) for g in graphs}) == len(graphs) == 21

    def test_canonical_graph_is_isomorphic(self):
        for G in enumerate_connected(5):
            C = canonical_graph(G)
            assert sorted(C.labels) == list(range(G.n))
            for u, v in C.edges():
                assert G.has_edge(C.labels[u], C.labels[v])
            assert C.m == G.m
