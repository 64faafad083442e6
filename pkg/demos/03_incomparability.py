# Graphs where Z and gp go either way.
from zfgp import encode_graph6, hunt, validate_figure_family
from zfgp.families import h1, h2, h3

# the bowtie has gp > Z, the fan on eight path vertices even more so
for name in ("H2", "H3"):
    v = validate_figure_family(name)
    print(name, "Z =", v.Z, "gp =", v.gp, v.verdict)

# two 4-cycles glued at a vertex, with s and t leaves on the far corners
for s, t in [(1, 1), (1, 2), (2, 2), (2, 3), (1, 3)]:
    v = validate_figure_family("H1", params={"s": s, "t": t})
    print(f"H1 s={s} t={t} n={h1(s, t).n}: Z={v.Z} gp={v.gp} expected Z={v.expected_Z} gp={v.expected_gp} {v.verdict}")

print("H1(2,2) as graph6:", encode_graph6(h1(2, 2)))

# exhaustive search over small bicyclic graphs
for relation in ("gp>Z", "Z>gp"):
    rep = hunt("bicyclic", relation, (4, 8))
    print(f"bicyclic n=4..8, {relation}: {len(rep.hits)} of {rep.examined}")
# Z>gp first shows up at n=11 (H1 with s=t=2 is one of the two graphs there);
# hunt("bicyclic", "Z>gp", (11, 11)) finds them in a few minutes
