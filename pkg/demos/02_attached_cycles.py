"""Hooking two graphs onto a cycle: the group does not depend on where F sits.

A triangle F and a single edge G are attached to a 6-cycle. G always hangs off
the last two cycle vertices; F hangs off the pair selected by the index i.
"""

from pathlib import Path

from sandpilegroups import HSpec, build_h, format_graph, read_graph, sandpile_group

DATA = Path(__file__).parent / "data"
F = read_graph(DATA / "triangle.txt")
G = read_graph(DATA / "single_edge.txt")

spec = HSpec(F=F, G=G, n=6, f1=(1, 0, 0), f2=(0, 0, 2), g1=(1, 1), g2=(1, 1), i=1)

h1 = build_h(spec)
print("i = 1 graph,", h1.vertex_count, "vertices,", h1.edge_count, "edges")
print(format_graph(h1))

for i in range(spec.n - 1):
    g = build_h(spec.with_i(i))
    print(f"i = {i}:  {sandpile_group(g)}")

# Moving the attachment changes the graph but not the group.
print("\ni=1 and i=2 graphs equal?", build_h(spec.with_i(1)) == build_h(spec.with_i(2)))
