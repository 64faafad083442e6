import random

from hypothesis import given, settings
from hypothesis import strategies as st

from zfgp.canon import canonical_key
from zfgp.families import random_unicyclic
from zfgp.forcing import closure_mask, forcing_closure, zero_forcing_number
from zfgp.genpos import gp_number, is_general_position_set
from zfgp.graph import build_graph, classify, components, induced_mask, is_connected, leaves, to_mask, to_set
from zfgp.graph6 import decode_graph6, encode_graph6
from zfgp.pathcover import trimmed_form


@st.composite
def graphs(draw, max_n=10, connected=False):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree first
        order = draw(st.permutations(range(n)))
        tree = [(order[i], order[draw(st.integers(0, i - 1))]) for i in range(1, n)]
        chosen = chosen + tree
    return build_graph(n, chosen)


@st.composite
def graph_and_sets(draw, max_n=12):
    G = draw(graphs(max_n))
    S = draw(st.sets(st.integers(0, G.n - 1)))
    T = draw(st.sets(st.integers(0, G.n - 1)))
    return G, S, S | T


@settings(max_examples=200, deadline=None)
@given(graph_and_sets())
def test_closure_laws(data):
    G, S, S2 = data
    c1 = closure_mask(G, to_mask(S))
    assert to_mask(S) & ~c1 == 0
    assert closure_mask(G, c1) == c1
    assert c1 & ~closure_mask(G, to_mask(S2)) == 0


@settings(max_examples=100, deadline=None)
@given(graph_and_sets(), st.integers(0, 2**32))
def test_closure_order_independent(data, seed):
    G, S, _ = data
    rng = random.Random(seed)
    ch = forcing_closure(G, S, rng=rng)
    assert ch.final == to_set(closure_mask(G, to_mask(S)))
    assert ch.replay(G) == ch.final


@settings(max_examples=60, deadline=None)
@given(graphs(9, connected=True))
def test_gp_witness_and_subsets(G):
    g = gp_number(G)
    assert is_general_position_set(G, g.witness)
    w = sorted(g.witness)
    for i in range(len(w)):
        assert is_general_position_set(G, w[:i] + w[i + 1:])
    assert g.number >= len(leaves(G))
    if G.n >= 2:
        assert g.number >= 2


@settings(max_examples=60, deadline=None)
@given(graphs(9))
def test_zero_forcing_component_sum(G):
    total = sum(zero_forcing_number(induced_mask(G, c)).number for c in components(G))
    assert zero_forcing_number(G).number == total


@settings(max_examples=100, deadline=None)
@given(graphs(12))
def test_graph6_round_trip(G):
    assert decode_graph6(encode_graph6(G)) == G


@settings(max_examples=100, deadline=None)
@given(graphs(8), st.permutations(range(8)))
def test_canonical_key_relabelling(G, perm):
    perm = [p for p in perm if p < G.n]
    H = build_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])
    assert canonical_key(H) == canonical_key(G)
    assert classify(H).connected == is_connected(G)


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 12), st.integers(0, 2**32))
def test_trim_unique_up_to_isomorphism(n, seed):
    rng = random.Random(seed)
    G = random_unicyclic(n, rng)
    keys = {canonical_key(trimmed_form(G, random.Random(rng.random())).graph) for _ in range(4)}
    keys.add(canonical_key(trimmed_form(G).graph))
    assert len(keys) == 1
