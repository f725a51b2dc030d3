"""Sandpile (critical) groups of connected multigraphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .errors import DisconnectedError, TooLargeError
from .graph import Multigraph, is_connected, reduced_laplacian
from .linalg import determinant, divides, smith_normal_form

BRUTEFORCE_EDGE_LIMIT = 20


@dataclass(frozen=True)
class GroupStructure:
    """Finite abelian group ``C_{d1} + C_{d2} + ...`` in invariant-factor form.

    Factors are all >= 2 and each divides the next; the trivial group has no
    factors.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if any(d < 2 for d in fs):
            raise ValueError(f"invariant factors must be >= 2: {fs}")
        if any(not divides(a, b) for a, b in zip(fs, fs[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain: {fs}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"C_{d}" for d in self.invariant_factors)


def _require_connected(g: Multigraph) -> None:
    if not is_connected(g):
        raise DisconnectedError(
            f"graph on {g.vertex_count} vertices is disconnected; its sandpile group is infinite"
        )


def sandpile_group(g: Multigraph, drop: int | None = None) -> GroupStructure:
    """Sandpile group from the Smith form of the reduced Laplacian.

    ``drop`` selects the deleted row/column (default: the highest-numbered
    vertex). Unit factors are discarded. A single vertex gives the trivial
    group.
    """
    if g.vertex_count == 1:
        return GroupStructure()
    _require_connected(g)
    snf = smith_normal_form(reduced_laplacian(g, drop))
    assert 0 not in snf.diag, "connected graph produced a zero invariant factor"
    return GroupStructure(tuple(d for d in snf.diag if d != 1))


def group_order(g: Multigraph, drop: int | None = None) -> int:
    """Number of spanning trees, as ``|det|`` of a reduced Laplacian."""
    if g.vertex_count == 1:
        return 1
    _require_connected(g)
    return abs(determinant(reduced_laplacian(g, drop)))


def groups_isomorphic(a: GroupStructure, b: GroupStructure) -> bool:
    return a.invariant_factors == b.invariant_factors


def spanning_tree_count_bruteforce(g: Multigraph) -> int:
    """Count spanning trees by trying every set of ``n - 1`` edges.

    Parallel edges are distinct edges here. Only meant as a test oracle;
    refuses graphs with more than ``BRUTEFORCE_EDGE_LIMIT`` edges.
    """
    instances = [(u, v) for u, v, m in g.edges() for _ in range(m)]
    if len(instances) > BRUTEFORCE_EDGE_LIMIT:
        raise TooLargeError(f"{len(instances)} edges exceeds brute-force limit {BRUTEFORCE_EDGE_LIMIT}")
    n = g.vertex_count
    count = 0
    for subset in combinations(instances, n - 1):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
        else:
            count += 1
    return count
