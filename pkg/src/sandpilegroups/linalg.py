"""Dense integer matrices, Smith normal form and exact determinants.

Entries are Python ints, so nothing overflows; all routines are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import NotSquareError
from .rng import SplitMix64


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self._rows = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> list[int]:
        """Row-major flat list."""
        return [x for r in self._rows for x in r]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self._rows))

    def delete(self, row: int, col: int) -> IntMatrix:
        """Drop one row and one column (0-based)."""
        return IntMatrix(
            [x for j, x in enumerate(r) if j != col]
            for i, r in enumerate(self._rows) if i != row
        )

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self._rows == tuple(zip(*self._rows))

    def __neg__(self):
        return IntMatrix([-x for x in r] for r in self._rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.tolist()})"

    def __str__(self):
        return format_matrix(self)


def format_matrix(m: IntMatrix) -> str:
    """Plain text, one row per line, columns right-aligned."""
    rows = m.tolist()
    width = max(len(str(x)) for r in rows for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows)


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors ``d_1 | d_2 | ... | d_k`` with zeros last."""

    diag: tuple[int, ...]

    def nonzero(self) -> tuple[int, ...]:
        return tuple(d for d in self.diag if d)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def divides(a: int, b: int) -> bool:
    if a == 0:
        return b == 0
    return b % a == 0


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Diagonal of the Smith normal form of ``m``.

    Elimination with a minimal-absolute-value pivot: the pivot row and column
    are reduced by Euclidean steps until everything else in them vanishes,
    then the diagonal is brought into a divisibility chain by replacing pairs
    ``(a, b)`` with ``(gcd, lcm)``, itself a unimodular equivalence.
    """
    a = m.tolist()
    nr, nc = m.rows, m.cols
    k = min(nr, nc)
    diag = []
    for t in range(k):
        while True:
            piv = None
            best = 0
            for i in range(t, nr):
                row = a[i]
                for j in range(t, nc):
                    x = row[j]
                    if x and (piv is None or abs(x) < best):
                        piv, best = (i, j), abs(x)
                        if best == 1:
                            break
                if best == 1:
                    break
            if piv is None:
                # remaining block is zero
                diag.extend([0] * (k - t))
                return _finish(diag)
            i, j = piv
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
            p = a[t][t]
            prow = a[t]
            clean = True
            for i in range(t + 1, nr):
                x = a[i][t]
                if x:
                    q = x // p
                    row = a[i]
                    for j in range(t, nc):
                        row[j] -= q * prow[j]
                    if row[t]:
                        clean = False
            for j in range(t + 1, nc):
                x = prow[j]
                if x:
                    q = x // p
                    for i in range(t, nr):
                        a[i][j] -= q * a[i][t]
                    if prow[j]:
                        clean = False
            if clean:
                break
        diag.append(abs(a[t][t]))
    return _finish(diag)


def _finish(diag: list[int]) -> SmithForm:
    d = [abs(x) for x in diag]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            if not divides(d[i], d[j]):
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] * d[j] // g
    return SmithForm(tuple(d))


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    a = m.tolist()
    n = m.rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def elementary_ops_fuzz(m: IntMatrix, seed: int, steps: int) -> IntMatrix:
    """Apply ``steps`` random unimodular row/column operations.

    Each step picks rows or columns with equal odds, then one of: add
    (+1 or -1) times one line to another, swap two lines, negate a line.
    The choice sequence is fixed by ``seed``.
    """
    rng = SplitMix64(seed)
    a = m.tolist()
    for _ in range(steps):
        on_rows = rng.coin()
        size = m.rows if on_rows else m.cols
        op = rng.randint(0, 2)
        src = rng.randint(0, size - 1)
        dst = rng.randint(0, size - 1)
        if op == 0 and size > 1:
            while dst == src:
                dst = rng.randint(0, size - 1)
            c = rng.choice((1, -1))
            if on_rows:
                a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
            else:
                for row in a:
                    row[dst] += c * row[src]
        elif op == 1:
            if on_rows:
                a[src], a[dst] = a[dst], a[src]
            else:
                for row in a:
                    row[src], row[dst] = row[dst], row[src]
        else:
            if on_rows:
                a[src] = [-x for x in a[src]]
            else:
                for row in a:
                    row[src] = -row[src]
    return IntMatrix(a)
