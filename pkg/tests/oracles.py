"""Independent reference computations used only by the tests.

None of these share code paths with the library implementations they check.
"""

from itertools import combinations, permutations
from math import gcd, prod


def det_leibniz(rows):
    """Determinant as a signed sum over permutations."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        total += (-1) ** inversions * prod(rows[i][perm[i]] for i in range(n))
    return total


def snf_by_minors(rows):
    """Smith diagonal from determinantal divisors.

    ``D_k`` is the gcd of all ``k x k`` minors and ``d_k = D_k / D_{k-1}``
    (zero once ``D_k`` vanishes).
    """
    nr, nc = len(rows), len(rows[0])
    k_max = min(nr, nc)
    D = [1]
    for k in range(1, k_max + 1):
        g = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                g = gcd(g, det_leibniz([[rows[i][j] for j in cs] for i in rs]))
        D.append(g)
    out = []
    for k in range(1, k_max + 1):
        out.append(0 if D[k] == 0 else D[k] // D[k - 1])
    return tuple(out)


def snf_2x2(rows):
    """d1 = gcd of entries, d1 * d2 = |det|."""
    (a, b), (c, d) = rows
    d1 = gcd(gcd(a, b), gcd(c, d))
    if d1 == 0:
        return (0, 0)
    return (d1, abs(a * d - b * c) // d1)


def f_naive(x):
    """The tree-count recurrence evaluated literally (exponential time)."""
    x = list(x)
    if len(x) == 1:
        return x[0]
    return f_naive(x[:-2] + [x[-2] - 1]) + (x[-1] - 1) * f_naive(x[:-1])


def c_sets_bruteforce(i, j):
    """Filter every size-i subset of 1..j by the two parity conditions."""
    out = []
    for s in combinations(range(1, j + 1), i):
        if not s:
            out.append(s)
            continue
        if (j - s[-1]) % 2:
            continue
        if all((b - a) % 2 == 1 for a, b in zip(s, s[1:])):
            out.append(s)
    return out


def spanning_trees_kirchhoff_fraction(n, edges):
    """Matrix-tree count with exact rational Gaussian elimination."""
    from fractions import Fraction

    L = [[Fraction(0)] * n for _ in range(n)]
    for u, v, m in edges:
        L[u - 1][u - 1] += m
        L[v - 1][v - 1] += m
        L[u - 1][v - 1] -= m
        L[v - 1][u - 1] -= m
    A = [row[:-1] for row in L[:-1]]
    size = n - 1
    det = Fraction(1)
    for c in range(size):
        p = next((r for r in range(c, size) if A[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, size):
            f = A[r][c] / A[c][c]
            for k in range(c, size):
                A[r][k] -= f * A[c][k]
    return int(abs(det))
