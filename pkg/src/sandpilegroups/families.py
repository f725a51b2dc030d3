"""Graph constructions: cycles with two attached graphs, and chains of cycles.

Attached-cycle graphs (:class:`HSpec`, :func:`build_h`)
    A cycle ``T`` of length ``n`` has a graph ``F`` hooked onto two adjacent
    cycle vertices whose position depends on an index ``i``, and a graph
    ``G`` hooked onto the last two cycle vertices. The sandpile group does
    not depend on ``i``.

Chains of cycles (:class:`ChSpec`, :func:`build_ch_member`, :func:`build_ch_canonical`)
    Cycles of lengths ``a_1, ..., a_n`` glued one after another, each new
    cycle sharing one edge with the previous one. Every member of a class
    has the same sandpile group; the canonical member has all cycles
    meeting at a single hub vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterator, Sequence

from .errors import InvalidSpecError
from .graph import Multigraph, is_connected


@dataclass(frozen=True)
class HSpec:
    """Parameters of an attached-cycle graph.

    ``F`` (``r`` vertices) and ``G`` (``s`` vertices) may be ``None`` for an
    empty graph. ``f1``/``f2`` give, per vertex of ``F``, the number of edges
    to the two cycle vertices at the attachment point; ``g1``/``g2`` likewise
    for ``G`` and the last two cycle vertices.
    """

    F: Multigraph | None
    G: Multigraph | None
    n: int
    f1: tuple[int, ...] = ()
    f2: tuple[int, ...] = ()
    g1: tuple[int, ...] = ()
    g2: tuple[int, ...] = ()
    i: int = 1

    def __post_init__(self):
        for name in ("f1", "f2", "g1", "g2"):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    @property
    def r(self) -> int:
        return self.F.vertex_count if self.F is not None else 0

    @property
    def s(self) -> int:
        return self.G.vertex_count if self.G is not None else 0

    def with_i(self, i: int) -> HSpec:
        return replace(self, i=i)

    def validate(self) -> None:
        if self.n < 3:
            raise InvalidSpecError(f"cycle length n must be >= 3, got {self.n}")
        if not 0 <= self.i <= self.n - 2:
            raise InvalidSpecError(f"index i={self.i} outside 0..{self.n - 2}")
        for name, want in (("f1", self.r), ("f2", self.r), ("g1", self.s), ("g2", self.s)):
            vec = getattr(self, name)
            if len(vec) != want:
                raise InvalidSpecError(f"{name} has length {len(vec)}, expected {want}")
            if any(x < 0 for x in vec):
                raise InvalidSpecError(f"{name} has a negative entry")
        if self.r and sum(self.f1) + sum(self.f2) == 0:
            raise InvalidSpecError("F is not attached to the cycle (f1 and f2 are all zero)")
        if self.s and sum(self.g1) + sum(self.g2) == 0:
            raise InvalidSpecError("G is not attached to the cycle (g1 and g2 are all zero)")


def h_edge_count(spec: HSpec) -> int:
    ef = spec.F.edge_count if spec.F is not None else 0
    eg = spec.G.edge_count if spec.G is not None else 0
    return ef + eg + spec.n + sum(spec.f1) + sum(spec.f2) + sum(spec.g1) + sum(spec.g2)


def build_h(spec: HSpec) -> Multigraph:
    """Build the attached-cycle graph on ``r + n + s`` vertices.

    Numbering: ``F`` is ``1..r``, the cycle is ``r+1..r+n`` in cyclic order,
    ``G`` is ``r+n+1..r+n+s``. Each ``G`` vertex ``v`` gets ``g1(v)`` edges
    to ``r+n-1`` and ``g2(v)`` edges to ``r+n``. Each ``F`` vertex gets
    ``f1(v)`` edges to ``r+i`` (to ``r+n`` when ``i == 0``) and ``f2(v)``
    edges to ``r+i+1``.

    Raises InvalidSpecError for a bad spec or a disconnected result.
    """
    spec.validate()
    r, n, s, i = spec.r, spec.n, spec.s, spec.i
    edges = []
    if spec.F is not None:
        edges.extend(spec.F.edges())
    edges.extend((r + k, r + k % n + 1, 1) for k in range(1, n + 1))
    if spec.G is not None:
        edges.extend((u + r + n, v + r + n, m) for u, v, m in spec.G.edges())
    for v in range(1, s + 1):
        edges.append((r + n + v, r + n - 1, spec.g1[v - 1]))
        edges.append((r + n + v, r + n, spec.g2[v - 1]))
    first = r + i if i >= 1 else r + n
    for v in range(1, r + 1):
        edges.append((v, first, spec.f1[v - 1]))
        edges.append((v, r + i + 1, spec.f2[v - 1]))
    g = Multigraph.from_edges(r + n + s, edges)
    if not is_connected(g):
        raise InvalidSpecError("resulting graph is disconnected")
    return g


@dataclass(frozen=True)
class ChSpec:
    """A chain-of-cycles class member.

    ``plan[j]`` is the 1-based index ``p`` of the pair ``(L[p], L[p+1])`` in
    the current vertex list ``L`` that receives cycle ``j + 2``.
    """

    a: tuple[int, ...]
    plan: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "plan", tuple(self.plan))

    def validate(self) -> None:
        _check_lengths(self.a)
        if len(self.plan) != len(self.a) - 1:
            raise InvalidSpecError(f"plan needs {len(self.a) - 1} entries, got {len(self.plan)}")
        # |L| after placing cycle j is a_j, so the admissible range is static
        for j, p in enumerate(self.plan):
            if not 1 <= p < self.a[j]:
                raise InvalidSpecError(f"plan[{j}]={p} outside 1..{self.a[j] - 1}")


def _check_lengths(a: Sequence[int]) -> None:
    if len(a) < 1:
        raise InvalidSpecError("need at least one cycle length")
    if any(x < 2 for x in a):
        raise InvalidSpecError(f"cycle lengths must be >= 2: {tuple(a)}")


def ch_vertex_count(a: Sequence[int]) -> int:
    return sum(a) - 2 * (len(a) - 1)


def canonical_plan(a: Sequence[int]) -> tuple[int, ...]:
    """Plan that always glues onto the last pair of ``L``.

    Starting from the cycle ``1..a_1`` this keeps every cycle incident to
    vertex ``a_1``, giving a graph isomorphic to :func:`build_ch_canonical`.
    """
    return tuple(x - 1 for x in a[:-1])


def iter_plans(a: Sequence[int]) -> Iterator[tuple[int, ...]]:
    return product(*(range(1, x) for x in a[:-1]))


def build_ch_member(spec: ChSpec) -> Multigraph:
    spec.validate()
    a = spec.a
    edges = [(k, k % a[0] + 1, 1) for k in range(1, a[0] + 1)]
    L = list(range(1, a[0] + 1))
    nxt = a[0] + 1
    for length, p in zip(a[1:], spec.plan):
        left, right = L[p - 1], L[p]
        if length == 2:
            edges.append((left, right, 1))
            L = [left, right]
            continue
        chain = list(range(nxt, nxt + length - 2))
        nxt += length - 2
        path = [left, *chain, right]
        edges.extend((u, v, 1) for u, v in zip(path, path[1:]))
        L = path
    return Multigraph.from_edges(nxt - 1, edges)


def build_ch_canonical(a: Sequence[int]) -> Multigraph:
    """Chain of cycles whose cycles all pass through one hub vertex.

    The hub is the last vertex, ``k + 1``. The other vertices ``1..k`` form
    a path in outer-cycle order; cycle ``j`` spans the path segment from
    ``p_{j-1}`` to ``p_j`` (with ``p_0 = 1`` and ``p_j = p_{j-1} + a_j - 2``)
    and closes through the hub. Consecutive cycles share the hub edge to
    ``p_j``.
    """
    _check_lengths(a)
    k = ch_vertex_count(a) - 1
    hub = k + 1
    edges = [(v, v + 1, 1) for v in range(1, k)]
    pos = 1
    edges.append((hub, pos, 1))
    for x in a:
        pos += x - 2
        edges.append((hub, pos, 1))
    return Multigraph.from_edges(hub, edges)
