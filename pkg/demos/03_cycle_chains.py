"""Chains of cycles: every gluing order gives the same cyclic group.

Cycles of lengths 3, 6, 4, 6 are glued edge to edge. A plan says which edge
of the previously added cycle receives the next one.
"""

from sandpilegroups import (
    ChSpec,
    build_ch_canonical,
    build_ch_member,
    canonical_plan,
    f_recursive,
    iter_plans,
    reduced_laplacian,
    sandpile_group,
)

a = (3, 6, 4, 6)
for plan in [(1, 3, 2), (1, 2, 2), (1, 2, 1), canonical_plan(a)]:
    g = build_ch_member(ChSpec(a, plan))
    print(f"plan {plan}: {g.vertex_count} vertices, group {sandpile_group(g)}")

# All plans at once.
groups = {sandpile_group(build_ch_member(ChSpec(a, p))) for p in iter_plans(a)}
print(f"\n{len(list(iter_plans(a)))} plans, distinct groups: {groups}")

# In the canonical member every cycle passes through the hub, the last vertex.
ch = build_ch_canonical(a)
print("\nhub neighbours:", ch.neighbors(ch.vertex_count))
print("reduced Laplacian with the hub removed is tridiagonal:")
print(reduced_laplacian(ch))

# The order matches the tree-count recurrence.
print("\nF(3,6,4,6) =", f_recursive(a))
for a in [(2, 2), (5, 5, 5), (2, 3, 4, 5, 6)]:
    print(f"{a}: group {sandpile_group(build_ch_canonical(a))}, recurrence {f_recursive(a)}")
