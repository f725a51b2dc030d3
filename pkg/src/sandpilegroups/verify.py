"""Seeded randomized checks of the structural facts this package relies on.

Each check runs ``trials`` independent trials. Trial ``t`` draws its instance
from ``SplitMix64(trial_seed(seed, t))`` (see :mod:`sandpilegroups.rng`), so a
failing trial can be replayed alone from the seed reported for it.

Checks:

``t1``           attached-cycle graphs: sandpile group independent of ``i``
``t3``           recurrence and closed form agree
``t4``           canonical chain of cycles has cyclic group of order ``F_n``
``matrix-tree``  reduced-Laplacian determinant equals brute-force tree count
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import SandpileError
from .families import HSpec, build_ch_canonical, build_h
from .formulas import f_recursive, g_closed_form
from .graph import Multigraph, is_connected
from .rng import SplitMix64, trial_seed
from .sandpile import group_order, sandpile_group, spanning_tree_count_bruteforce


@dataclass
class VerifyResult:
    check: str
    seed: int
    trials: int
    passed: int = 0
    failure_seeds: list[int] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failure_seeds)

    @property
    def ok(self) -> bool:
        return not self.failure_seeds


# -- random instances ---------------------------------------------------------

def random_multigraph(rng: SplitMix64, n: int, max_mult: int = 2, density: tuple[int, int] = (1, 2)) -> Multigraph:
    """Each pair independently present with probability ``density``; multiplicity uniform in ``1..max_mult``."""
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.coin(*density):
                edges.append((u, v, rng.randint(1, max_mult)))
    return Multigraph.from_edges(n, edges)


def random_connected_multigraph(rng: SplitMix64, max_vertices: int = 7, max_mult: int = 3,
                                max_edges: int = 14) -> Multigraph:
    """Random spanning tree plus random extra edges, total edge count capped.

    The tree is built by attaching vertex ``k`` to a uniformly chosen earlier
    vertex, after which vertex labels are shuffled.
    """
    n = rng.randint(2, max_vertices)
    n = min(n, max_edges + 1)
    perm = list(range(1, n + 1))
    for k in range(n - 1, 0, -1):
        t = rng.randint(0, k)
        perm[k], perm[t] = perm[t], perm[k]
    mult: dict[tuple[int, int], int] = {}
    for k in range(2, n + 1):
        u, v = perm[k - 1], perm[rng.randint(1, k - 1) - 1]
        key = (min(u, v), max(u, v))
        mult[key] = 1
    budget = max_edges - (n - 1)
    extra = rng.randint(0, budget)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for _ in range(extra):
        key = rng.choice(pairs)
        if mult.get(key, 0) < max_mult:
            mult[key] = mult.get(key, 0) + 1
    return Multigraph(n, mult)


def random_hspec(rng: SplitMix64, max_n: int = 8, max_part: int = 4, max_mult: int = 2) -> HSpec:
    """Random attached-cycle spec whose graphs are connected for every ``i``.

    Parts may be empty. Attachment vectors are redrawn until every connected
    component of ``F`` (resp. ``G``) has at least one edge to the cycle.
    """
    n = rng.randint(3, max_n)
    r = rng.randint(0, max_part)
    s = rng.randint(0, max_part)
    F = random_multigraph(rng, r, max_mult) if r else None
    G = random_multigraph(rng, s, max_mult) if s else None

    def attach(h: Multigraph | None, size: int):
        while True:
            a = tuple(rng.randint(0, max_mult) for _ in range(size))
            b = tuple(rng.randint(0, max_mult) for _ in range(size))
            if h is None or _every_component_touched(h, a, b):
                return a, b

    f1, f2 = attach(F, r)
    g1, g2 = attach(G, s)
    return HSpec(F=F, G=G, n=n, f1=f1, f2=f2, g1=g1, g2=g2, i=0)


def _every_component_touched(h: Multigraph, a, b) -> bool:
    # contract all attachment vertices into an extra apex and test connectivity
    apex = h.vertex_count + 1
    edges = list(h.edges())
    edges += [(v, apex, 1) for v in h.vertices() if a[v - 1] + b[v - 1] > 0]
    return is_connected(Multigraph.from_edges(apex, edges))


def random_args(rng: SplitMix64, max_len: int, lo: int, hi: int) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(rng.randint(1, max_len))]


# -- single trials ---------------------------------------------------------------
# Each returns True when the property holds for the instance drawn from seed.

def trial_t1(seed: int) -> bool:
    spec = random_hspec(SplitMix64(seed))
    groups = {sandpile_group(build_h(spec.with_i(i))) for i in range(spec.n - 1)}
    return len(groups) == 1


def trial_t3(seed: int) -> bool:
    x = random_args(SplitMix64(seed), max_len=8, lo=1, hi=20)
    return f_recursive(x) == g_closed_form(x)


def trial_t4(seed: int) -> bool:
    a = random_args(SplitMix64(seed), max_len=5, lo=2, hi=6)
    group = sandpile_group(build_ch_canonical(a))
    return group.is_cyclic and group.order == f_recursive(a)


def trial_matrix_tree(seed: int) -> bool:
    g = random_connected_multigraph(SplitMix64(seed))
    return group_order(g) == spanning_tree_count_bruteforce(g) == sandpile_group(g).order


CHECKS: dict[str, Callable[[int], bool]] = {
    "t1": trial_t1,
    "t3": trial_t3,
    "t4": trial_t4,
    "matrix-tree": trial_matrix_tree,
}


def run_check(check: str, trials: int, seed: int) -> VerifyResult:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    trial = CHECKS[check]
    result = VerifyResult(check=check, seed=seed, trials=trials)
    for t in range(trials):
        ts = trial_seed(seed, t)
        try:
            ok = trial(ts)
        except SandpileError:
            ok = False
        if ok:
            result.passed += 1
        else:
            result.failure_seeds.append(ts)
    return result
