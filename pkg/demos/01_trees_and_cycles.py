# Zero forcing vs general position on a few small graphs.
from zfgp import classify, invariant_record, leaves
from zfgp.families import complete_graph, cycle_graph, enumerate_trees, spider, star_graph

for name, G in [("K5", complete_graph(5)), ("C7", cycle_graph(7)), ("K1,4", star_graph(4)), ("spider 2,2,3", spider([2, 2, 3]))]:
    rec = invariant_record(G)
    print(f"{name:14} n={rec.n:2} Z={rec.Z} (set {rec.Z_witness})  gp={rec.gp} (set {rec.gp_witness})  P={rec.P}")

# on trees the gap gp - Z is at least one, and gp is just the leaf count
gaps = {}
for n in range(2, 10):
    for T in enumerate_trees(n):
        rec = invariant_record(T)
        assert rec.gp == len(leaves(T))
        gaps[rec.gp - rec.Z] = gaps.get(rec.gp - rec.Z, 0) + 1
print("trees n=2..9, histogram of gp - Z:", dict(sorted(gaps.items())))

# class flags come for free
print(classify(cycle_graph(5)))
