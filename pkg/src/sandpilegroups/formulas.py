"""Spanning-tree counts of cycle chains: the recurrence and its closed form.

``F_n`` is defined by::

    F_1(x1) = x1
    F_{i+1}(x1..x_{i+1}) = F_i(x1..x_{i-1}, x_i - 1) + (x_{i+1} - 1) * F_i(x1..x_i)

and ``G_n`` is an alternating sum of ``gamma_{i,n}``, where ``gamma_{i,j}``
sums the monomials ``prod(x_t for t in I)`` over the index sets ``I`` in
``C_{i,j}``: size-``i`` subsets of ``1..j`` in which every pair of
neighbouring elements differs by an odd amount and ``j - max(I)`` is even.
``C_{i,j}`` splits into ``B_{i,j}`` (sets containing ``j``) and ``A_{i,j}``
(the rest), giving ``alpha`` and ``beta``. The empty set is taken to lie in
every ``C_{0,j}``, so ``gamma_{0,j} = 1``.

Arguments may be any integers; values below 2 have no graph meaning but the
polynomials are still well defined.
"""

from __future__ import annotations

from math import prod
from typing import Iterator, Sequence

from .errors import ArityMismatchError, EmptyArgsError

IndexSet = tuple[int, ...]


def f_recursive(x: Sequence[int]) -> int:
    """Evaluate ``F_n(x)`` by the recurrence.

    ``F_i`` is only ever needed with its last argument at ``x_i`` or
    ``x_i - 1``, so two values per level suffice and the evaluation is linear
    in ``n`` rather than exponential.
    """
    if len(x) == 0:
        raise EmptyArgsError("F_n needs at least one argument")
    # level holds (F_i(..., x_i), F_i(..., x_i - 1))
    level = (x[0], x[0] - 1)
    for xi in x[1:]:
        at, below = level
        level = (below + (xi - 1) * at, below + (xi - 2) * at)
    return level[0]


def enumerate_C(i: int, j: int) -> list[IndexSet]:
    """All index sets in ``C_{i,j}``, sorted lexicographically.

    Sets are grown downward from their maximum, which must have the parity
    of ``j``; each further element sits an odd distance below the previous
    one. The pruning ``m >= depth`` keeps room for the remaining elements.
    """
    if i < 0 or j < 0:
        return []
    if i == 0:
        return [()]
    out: list[IndexSet] = []

    def grow(suffix: list[int], top: int, need: int) -> None:
        if need == 0:
            out.append(tuple(reversed(suffix)))
            return
        for m in range(top, need - 1, -2):
            suffix.append(m)
            grow(suffix, m - 1, need - 1)
            suffix.pop()

    grow([], j, i)
    out.sort()
    return out


def split_AB(i: int, j: int) -> tuple[list[IndexSet], list[IndexSet]]:
    """Partition ``C_{i,j}`` into ``(A, B)``, ``B`` being the sets containing ``j``."""
    A, B = [], []
    for s in enumerate_C(i, j):
        (B if s and s[-1] == j else A).append(s)
    return A, B


def _monomial_sum(sets, x: Sequence[int]) -> int:
    return sum(prod(x[t - 1] for t in s) for s in sets)


def _arity(name: str, x: Sequence[int], want: int) -> None:
    if len(x) != want:
        raise ArityMismatchError(f"{name} expects {want} arguments, got {len(x)}")


def eval_gamma(i: int, j: int, x: Sequence[int]) -> int:
    _arity(f"gamma_{{{i},{j}}}", x, j)
    return _monomial_sum(enumerate_C(i, j), x)


def eval_alpha(i: int, j: int, x: Sequence[int]) -> int:
    _arity(f"alpha_{{{i},{j}}}", x, j)
    return _monomial_sum(split_AB(i, j)[0], x)


def eval_beta(i: int, j: int, x: Sequence[int]) -> int:
    _arity(f"beta_{{{i},{j}}}", x, j)
    return _monomial_sum(split_AB(i, j)[1], x)


def eval_beta_prime(i: int, j: int, x: Sequence[int]) -> int:
    """``beta_{i,j}`` with its last variable fixed to 1; takes ``j - 1`` arguments.

    For ``j == 0`` there is no last variable and the value is 0.
    """
    if j <= 0:
        _arity(f"beta'_{{{i},{j}}}", x, 0)
        return 0
    _arity(f"beta'_{{{i},{j}}}", x, j - 1)
    return eval_beta(i, j, [*x, 1])


def closed_form_terms(n: int) -> Iterator[tuple[int, int]]:
    """Yield ``(sign, i)`` for ``G_n = sum(sign * gamma_{i,n})``."""
    sign = 1
    for i in range(n, -1, -2):
        yield sign, i
        sign = -sign


def g_closed_form(x: Sequence[int]) -> int:
    """Evaluate ``G_n(x) = gamma_{n,n} - gamma_{n-2,n} + gamma_{n-4,n} - ...``."""
    n = len(x)
    if n == 0:
        raise EmptyArgsError("G_n needs at least one argument")
    return sum(sign * eval_gamma(i, n, x) for sign, i in closed_form_terms(n))
