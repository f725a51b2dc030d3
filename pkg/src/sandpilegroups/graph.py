"""Undirected multigraphs with integer edge multiplicities.

Vertices are numbered ``1..vertex_count`` in every public function. Graphs are
immutable: :func:`add_edges` and friends return a new graph.

Text format::

    vertices N
    edge U V M
    # comment

Blank lines are ignored and repeated ``edge`` lines for one pair accumulate.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping

from .errors import OutOfRangeError, ParseError, SelfLoopError, TooSmallError
from .linalg import IntMatrix


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Multigraph:
    """Undirected loopless multigraph.

    ``multiplicities`` maps ordered pairs ``(u, v)`` with ``u < v`` to a
    positive edge count; absent pairs have multiplicity 0.
    """

    __slots__ = ("_n", "_mult")

    def __init__(self, vertex_count: int, multiplicities: Mapping[tuple[int, int], int] | None = None):
        if vertex_count < 1:
            raise TooSmallError(f"vertex_count must be >= 1, got {vertex_count}")
        self._n = vertex_count
        mult: dict[tuple[int, int], int] = {}
        for (u, v), m in (multiplicities or {}).items():
            self._check(u)
            self._check(v)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {{{u},{v}}}")
            if m:
                k = _key(u, v)
                mult[k] = mult.get(k, 0) + m
        self._mult = mult

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, ...]]) -> Multigraph:
        """Build from ``(u, v)`` or ``(u, v, m)`` tuples; repeats accumulate."""
        mult: dict[tuple[int, int], int] = {}
        g = cls(vertex_count)
        for e in edges:
            u, v = e[0], e[1]
            m = e[2] if len(e) > 2 else 1
            g._check(u)
            g._check(v)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if m < 0:
                raise ValueError(f"negative multiplicity {m}")
            if m:
                k = _key(u, v)
                mult[k] = mult.get(k, 0) + m
        g._mult = mult
        return g

    @classmethod
    def cycle(cls, n: int) -> Multigraph:
        if n < 3:
            raise TooSmallError("a simple cycle needs at least 3 vertices")
        return cls.from_edges(n, [(k, k % n + 1) for k in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> Multigraph:
        return cls.from_edges(n, [(k, k + 1) for k in range(1, n)])

    @classmethod
    def complete(cls, n: int) -> Multigraph:
        return cls.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def multiplicities(self) -> dict[tuple[int, int], int]:
        return dict(self._mult)

    def vertices(self) -> range:
        return range(1, self._n + 1)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(u, v, m)`` with ``u < v`` in sorted order."""
        for (u, v) in sorted(self._mult):
            yield u, v, self._mult[u, v]

    def multiplicity(self, u: int, v: int) -> int:
        self._check(u)
        self._check(v)
        return self._mult.get(_key(u, v), 0)

    @property
    def edge_count(self) -> int:
        """Total number of edges, counting parallel edges separately."""
        return sum(self._mult.values())

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        out = []
        for (a, b) in self._mult:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def _check(self, v: int) -> None:
        if not (isinstance(v, int) and 1 <= v <= self._n):
            raise OutOfRangeError(f"vertex {v} not in 1..{self._n}")

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._mult == other._mult

    def __hash__(self):
        return hash((self._n, frozenset(self._mult.items())))

    def __repr__(self):
        return f"Multigraph({self._n}, {dict(sorted(self._mult.items()))})"


def add_edges(g: Multigraph, u: int, v: int, m: int = 1) -> Multigraph:
    """Return a copy of ``g`` with ``m`` more parallel edges between u and v."""
    g._check(u)
    g._check(v)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    if m < 0:
        raise ValueError(f"cannot add a negative number of edges ({m})")
    mult = dict(g._mult)
    if m:
        k = _key(u, v)
        mult[k] = mult.get(k, 0) + m
    out = Multigraph(g.vertex_count)
    out._mult = mult
    return out


def degree(g: Multigraph, v: int) -> int:
    g._check(v)
    return sum(m for (a, b), m in g._mult.items() if a == v or b == v)


def is_connected(g: Multigraph) -> bool:
    adj: dict[int, list[int]] = {v: [] for v in g.vertices()}
    for u, v, _ in g.edges():
        adj[u].append(v)
        adj[v].append(u)
    seen = {1}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.vertex_count


def laplacian(g: Multigraph) -> IntMatrix:
    """Degree matrix minus adjacency matrix (positive diagonal)."""
    n = g.vertex_count
    rows = [[0] * n for _ in range(n)]
    for u, v, m in g.edges():
        rows[u - 1][v - 1] -= m
        rows[v - 1][u - 1] -= m
        rows[u - 1][u - 1] += m
        rows[v - 1][v - 1] += m
    return IntMatrix(rows)


def reduced_laplacian(g: Multigraph, drop: int | None = None) -> IntMatrix:
    """Laplacian with row and column ``drop`` removed (default: last vertex)."""
    if drop is None:
        drop = g.vertex_count
    g._check(drop)
    if g.vertex_count < 2:
        raise TooSmallError("reduced Laplacian needs at least 2 vertices")
    return laplacian(g).delete(drop - 1, drop - 1)


def relabel(g: Multigraph, perm: Mapping[int, int]) -> Multigraph:
    """Rename vertices through ``perm`` (a bijection on ``1..n``)."""
    return Multigraph.from_edges(g.vertex_count, [(perm[u], perm[v], m) for u, v, m in g.edges()])


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    """Place graphs side by side, shifting later vertex ids past earlier ones."""
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset, m) for u, v, m in h.edges())
        offset += h.vertex_count
    return Multigraph.from_edges(offset, edges)


# -- text format ------------------------------------------------------------

def parse_graph(text: str) -> Multigraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "vertices" or len(parts) != 2:
                raise ParseError("first statement must be 'vertices N'", lineno)
            n = _parse_int(parts[1], lineno)
            if n < 1:
                raise ParseError("vertex count must be >= 1", lineno)
            continue
        if parts[0] != "edge" or len(parts) != 4:
            raise ParseError(f"expected 'edge U V M', got {line!r}", lineno)
        u, v, m = (_parse_int(p, lineno) for p in parts[1:])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n}", lineno)
        if m < 1:
            raise ParseError("edge multiplicity must be >= 1", lineno)
        edges.append((u, v, m))
    if n is None:
        raise ParseError("missing 'vertices N' line")
    return Multigraph.from_edges(n, edges)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer: {tok!r}", lineno) from None


def format_graph(g: Multigraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"vertices {g.vertex_count}")
    lines.extend(f"edge {u} {v} {m}" for u, v, m in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path) -> Multigraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: Multigraph, path, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g, comment))


def to_dot(g: Multigraph, name: str = "G") -> str:
    """Graphviz DOT text; parallel edges are written out individually."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in g.vertices())
    for u, v, m in g.edges():
        lines.extend(f"  {u} -- {v};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"
