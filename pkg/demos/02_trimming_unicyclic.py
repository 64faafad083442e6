# Trimming a unicyclic graph down to a partial sun, and reading off P from it.
import random

from zfgp import build_graph, is_partial_sun, path_cover_number, path_cover_via_trim, trimmed_form, zero_forcing_number
from zfgp.families import enumerate_unicyclic

# a 5-cycle with a leaf on vertex 0, a pendant path 1-6-7 and a star hanging off 3
G = build_graph(12, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (6, 7), (3, 8), (8, 9), (8, 10), (8, 11)])

tr = trimmed_form(G)
for step in tr.log:
    print(f"delete {step.kind:16} {sorted(step.vertices)}")
print("counters n1, n2, n3 =", tr.n1, tr.n2, tr.n3)
sun = is_partial_sun(tr.graph)
print("what is left:", sorted(tr.remaining), "partial sun with segments", sun.segment_sizes if sun else None)
print("P via trim =", path_cover_via_trim(G), " exact P =", path_cover_number(G).number, " Z =", zero_forcing_number(G).number)

# a random deletion order can change n1 and n2 but not what is left, nor n2 - n1;
# a triangle 3-4-5 with two leaves on 5 and one on 4 already shows it
H = build_graph(6, [(0, 5), (1, 5), (2, 4), (3, 4), (3, 5), (4, 5)])
rng = random.Random(0)
for _ in range(6):
    t = trimmed_form(H, rng)
    print("random order: n1, n2 =", t.n1, t.n2, " n2 - n1 =", t.n2 - t.n1, " left:", sorted(t.remaining))

# Z = P on every unicyclic graph with at most 8 vertices
bad = [G for n in range(3, 9) for G in enumerate_unicyclic(n) if zero_forcing_number(G).number != path_cover_number(G).number]
print("unicyclic graphs n<=8 with Z != P:", len(bad))
