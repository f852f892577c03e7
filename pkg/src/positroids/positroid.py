"""Positroid tests: interval-rank criterion, Grassmann necklaces, da Silva's
circuit/cocircuit criterion, non-crossing decompositions and circularity.

All cyclic notions use the order of the ground set. Matroids on a proper
subset S of [n] are first renumbered to [|S|] keeping that order, and any
returned subsets are translated back.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bits import (
    as_mask,
    cyclic_intervals,
    is_cyclic_interval,
    k_subsets,
    members,
    popcount,
    rotated_order,
)
from .errors import GPViolation, NotDisjoint
from .matroid import (
    Matroid,
    circuits,
    closure,
    cocircuits,
    connected_components,
    rank,
    reindex,
    unindex,
)
from .oriented import Chirotope, chirotope_validate, indicator_signs


@dataclass(frozen=True)
class PositroidVerdict:
    is_positroid: bool
    certificate: int | None = None

    def __bool__(self):
        return self.is_positroid


@dataclass(frozen=True)
class NonCrossingPartition:
    n: int
    blocks: tuple[int, ...]


@dataclass(frozen=True)
class CrossingWitness:
    first: int
    second: int


def _arc_runs(t: int, u: int, n: int) -> int:
    """Number of maximal same-set runs of t|u read around the n-cycle."""
    labels = [1 if t >> i & 1 else 2 for i in range(n) if (t | u) >> i & 1]
    if not labels:
        return 0
    changes = sum(1 for i in range(len(labels)) if labels[i] != labels[i - 1])
    return max(changes, 1)


def is_noncrossing(T, T2, n: int) -> bool:
    """True if some cyclic interval holds T and misses T2.

    For disjoint sets this is the same as having no a<b<c<d in cyclic order
    with a, c in T and b, d in T2.
    """
    t, u = as_mask(T), as_mask(T2)
    if t & u:
        raise NotDisjoint("sets must be disjoint")
    # reading the circle, the labels form at most one run of each set
    return _arc_runs(t, u, n) <= 2


def is_noncrossing_partition(blocks, n: int) -> bool:
    blocks = [as_mask(b) for b in blocks]
    return all(is_noncrossing(a, b, n) for a, b in combinations(blocks, 2))


def noncrossing_partitions(ground: int, n: int):
    """All non-crossing partitions of ``ground`` (cyclic order of [n])."""
    elems = members(ground)
    if not elems:
        yield ()
        return

    def rec(remaining, blocks):
        if not remaining:
            yield tuple(blocks)
            return
        first = remaining & -remaining
        rest = remaining ^ first
        sub = rest
        while True:
            block = first | sub
            if all(is_noncrossing(block, b, n) for b in blocks):
                yield from rec(remaining & ~block, blocks + [block])
            if sub == 0:
                break
            sub = (sub - 1) & rest

    yield from rec(ground, [])


def component_partition_check(M: Matroid):
    """The component partition if non-crossing, else a crossing pair."""
    blocks = connected_components(M)
    _, labels = reindex(M)
    pos = {e: i for i, e in enumerate(labels, 1)}
    m = len(labels)
    loc = [as_mask(pos[e] for e in members(b)) for b in blocks]
    for i, j in combinations(range(len(blocks)), 2):
        if not is_noncrossing(loc[i], loc[j], m):
            return CrossingWitness(blocks[i], blocks[j])
    return NonCrossingPartition(M.n, tuple(blocks))


def interval_ranks(M: Matroid) -> dict[int, int]:
    """rank of every cyclic interval of M's (full) ground set."""
    return {iv: rank(M, iv) for iv in cyclic_intervals(M.n)}


def is_positroid(M: Matroid) -> PositroidVerdict:
    """Decide whether M is a positroid for the order of its ground set.

    A positroid's basis polytope is cut out by the interval inequalities
    sum_{l in [i,j]} x_l <= rank([i,j]). So M is a positroid exactly when
    every k-subset meeting all interval bounds is already a basis; the first
    one that is not is returned as certificate.
    """
    N, labels = reindex(M)
    bounds = list(interval_ranks(N).items())
    bs = N.basis_set
    for s in k_subsets(N.ground, N.k):
        if s in bs:
            continue
        if all(popcount(s & iv) <= r for iv, r in bounds):
            return PositroidVerdict(False, unindex(s, labels))
    return PositroidVerdict(True, None)


def _greedy_min_basis(M: Matroid, order) -> int:
    b, r = 0, 0
    for e in order:
        if rank(M, b | 1 << (e - 1)) > r:
            b |= 1 << (e - 1)
            r += 1
    return b


def grassmann_necklace(M: Matroid) -> tuple[int, ...]:
    """(I_1, ..., I_n): I_a is the lex-minimal basis for a < a+1 < ... < a-1."""
    N, labels = reindex(M)
    return tuple(unindex(_greedy_min_basis(N, rotated_order(a, N.n)), labels) for a in range(1, N.n + 1))


def gale_geq(s: int, t: int, order) -> bool:
    """s >= t in the Gale order induced by ``order`` (equal sizes)."""
    pos = {e: i for i, e in enumerate(order)}
    a = sorted(pos[e] for e in members(s))
    b = sorted(pos[e] for e in members(t))
    return len(a) == len(b) and all(x >= y for x, y in zip(a, b))


def necklace_envelope(M: Matroid) -> frozenset[int]:
    """k-subsets Gale-above every necklace element in its rotated order."""
    N, labels = reindex(M)
    neck = [_greedy_min_basis(N, rotated_order(a, N.n)) for a in range(1, N.n + 1)]
    orders = [rotated_order(a, N.n) for a in range(1, N.n + 1)]
    env = [
        s
        for s in k_subsets(N.ground, N.k)
        if all(gale_geq(s, neck[a], orders[a]) for a in range(N.n))
    ]
    return frozenset(unindex(s, labels) for s in env)


def is_positroid_by_necklace(M: Matroid) -> bool:
    return necklace_envelope(M) == M.basis_set


def da_silva_criterion(M: Matroid) -> tuple[bool, tuple[int, int] | None]:
    """Every disjoint circuit/cocircuit pair must be non-crossing."""
    N, labels = reindex(M)
    cocs = cocircuits(N)
    for c in sorted(circuits(N)):
        for cc in sorted(cocs):
            if c & cc:
                continue
            if not is_noncrossing(c, cc, N.n):
                return False, (unindex(c, labels), unindex(cc, labels))
    return True, None


def is_circular(M: Matroid) -> bool:
    """Each circuit of rank below k spans a cyclic interval."""
    N, _ = reindex(M)
    for c in circuits(N):
        if rank(N, c) < N.k and not is_cyclic_interval(closure(N, c), N.n):
            return False
    return True


def indicator_chirotope(M: Matroid) -> tuple[Chirotope | None, GPViolation | None]:
    """The sign map that is +1 exactly on the bases, if it is a chirotope.

    Success means M underlies a positively oriented matroid; on failure the
    Grassmann-Plucker violation is returned instead.
    """
    try:
        chi = chirotope_validate(M.n, M.k, indicator_signs(M), M.ground)
    except GPViolation as exc:
        return None, exc
    return chi, None


def is_positively_oriented_matroid(M: Matroid) -> bool:
    return indicator_chirotope(M)[0] is not None

