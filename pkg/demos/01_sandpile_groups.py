"""Sandpile groups from the Smith normal form of a reduced Laplacian.

Run with ``python demos/01_sandpile_groups.py``.
"""

from sandpilegroups import (
    Multigraph,
    group_order,
    laplacian,
    reduced_laplacian,
    sandpile_group,
    smith_normal_form,
    spanning_tree_count_bruteforce,
)

# A multigraph is a vertex count plus edge multiplicities on 1-based vertices.
k4 = Multigraph.complete(4)
print("Laplacian of K_4:")
print(laplacian(k4))

# Deleting one row and its column leaves a matrix whose Smith form carries the group.
M = reduced_laplacian(k4)
print("\nreduced Laplacian:")
print(M)
print("Smith diagonal:", smith_normal_form(M).diag)
print("sandpile group:", sandpile_group(k4))

# The group order is the number of spanning trees (Cayley: 4^2 = 16).
print("\norder via determinant:", group_order(k4))
print("order via enumeration:", spanning_tree_count_bruteforce(k4))

# Parallel edges count as distinct edges.
fat_triangle = Multigraph.from_edges(3, [(1, 2, 2), (2, 3, 2), (1, 3, 2)])
print("\ndoubled triangle:", sandpile_group(fat_triangle), "order", group_order(fat_triangle))

# The choice of deleted vertex does not matter.
for drop in fat_triangle.vertices():
    print(f"  drop {drop}:", sandpile_group(fat_triangle, drop))

# Cycles and trees.
print("\nC_5:", sandpile_group(Multigraph.cycle(5)))
print("path on 6 vertices:", sandpile_group(Multigraph.path(6)))
