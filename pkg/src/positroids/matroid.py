"""Matroids on subsets of an ordered ground set [n], given by their bases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .bits import (
    MAX_N,
    SubsetLike,
    as_mask,
    fmt,
    full,
    k_subsets,
    lowest,
    members,
    popcount,
    submasks,
)
from .errors import (
    EmptyBasisSet,
    ExchangeViolation,
    GroundSetError,
    OverlappingGroundSets,
    UnequalBasisSizes,
)


@dataclass(frozen=True)
class Matroid:
    """A matroid on ``ground`` (a bitmask inside [n]) with rank ``k``.

    ``bases`` is sorted numerically, which is colex order. Two matroids are
    equal when ground set, n and basis set coincide (labelled equality).
    Build instances with :func:`validate_bases` unless the bases are already
    known to satisfy the exchange axiom.
    """

    n: int
    ground: int
    k: int
    bases: tuple[int, ...]

    def __repr__(self):
        g = "" if self.ground == full(self.n) else f", ground={fmt(self.ground)}"
        bs = ", ".join(fmt(b) for b in self.bases)
        return f"Matroid(n={self.n}{g}, k={self.k}, bases=[{bs}])"

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @cached_property
    def independent(self) -> frozenset[int]:
        out = set()
        for b in self.bases:
            out.update(submasks(b))
        return frozenset(out)

    @cached_property
    def _circuits(self) -> tuple[int, ...]:
        found: list[int] = []
        indep = self.independent
        for size in range(1, popcount(self.ground) + 1):
            for s in k_subsets(self.ground, size):
                if s in indep:
                    continue
                if any(c & s == c for c in found):
                    continue
                found.append(s)
        return tuple(found)

    @property
    def size(self) -> int:
        return popcount(self.ground)

    @property
    def elements(self) -> tuple[int, ...]:
        return members(self.ground)

    def is_basis(self, s: SubsetLike) -> bool:
        return as_mask(s) in self.basis_set

    def is_independent(self, s: SubsetLike) -> bool:
        return as_mask(s) in self.independent


def _make(n, ground, k, bases) -> Matroid:
    return Matroid(n, ground, k, tuple(sorted(set(bases))))


def _check_ground(n: int, ground: int) -> None:
    if n < 0 or n > MAX_N:
        raise GroundSetError(f"n={n} outside 0..{MAX_N}")
    if ground & ~full(n):
        raise GroundSetError(f"ground {fmt(ground)} not inside [{n}]")


def exchange_witness(bases: Iterable[int]):
    """First (B1, B2, b1) violating basis exchange, or None."""
    bases = list(bases)
    bs = set(bases)
    for b1 in bases:
        for b2 in bases:
            only2 = b2 & ~b1
            rest = b1 & ~b2
            while rest:
                x = rest & -rest
                rest ^= x
                base = b1 ^ x
                y = only2
                ok = False
                while y:
                    bit = y & -y
                    y ^= bit
                    if base | bit in bs:
                        ok = True
                        break
                if not ok:
                    return b1, b2, x.bit_length()
    return None


def validate_bases(n: int, bases: Iterable[SubsetLike], ground: SubsetLike | None = None) -> Matroid:
    """Check the basis exchange axiom exhaustively and build the matroid.

    Raises EmptyBasisSet, UnequalBasisSizes or ExchangeViolation.
    """
    g = full(n) if ground is None else as_mask(ground)
    _check_ground(n, g)
    masks = {as_mask(b) for b in bases}
    if not masks:
        raise EmptyBasisSet("a matroid needs at least one basis")
    sizes = {popcount(b) for b in masks}
    if len(sizes) > 1:
        raise UnequalBasisSizes(f"bases have sizes {sorted(sizes)}")
    for b in masks:
        if b & ~g:
            raise GroundSetError(f"basis {fmt(b)} leaves the ground set {fmt(g)}")
    w = exchange_witness(sorted(masks))
    if w is not None:
        raise ExchangeViolation(*w)
    return _make(n, g, sizes.pop(), masks)


def uniform(k: int, elements: SubsetLike, n: int | None = None) -> Matroid:
    """U_{k,E} on the given elements; n defaults to the largest element."""
    g = as_mask(elements)
    n = g.bit_length() if n is None else n
    _check_ground(n, g)
    if k > popcount(g):
        raise UnequalBasisSizes(f"rank {k} exceeds {popcount(g)} elements")
    return _make(n, g, k, k_subsets(g, k))


def free(elements: SubsetLike, n: int | None = None) -> Matroid:
    g = as_mask(elements)
    return uniform(popcount(g), g, n)


def rank(M: Matroid, A: SubsetLike) -> int:
    a = as_mask(A)
    return max(popcount(b & a) for b in M.bases)


def independent_sets(M: Matroid) -> frozenset[int]:
    return M.independent


def circuits(M: Matroid) -> frozenset[int]:
    """Inclusion-minimal dependent subsets."""
    return frozenset(M._circuits)


def cocircuits(M: Matroid) -> frozenset[int]:
    return circuits(dual(M))


def closure(M: Matroid, A: SubsetLike) -> int:
    a = as_mask(A)
    r = rank(M, a)
    out = a
    for e in members(M.ground & ~a):
        if rank(M, a | 1 << (e - 1)) == r:
            out |= 1 << (e - 1)
    return out


def dual(M: Matroid) -> Matroid:
    return _make(M.n, M.ground, M.size - M.k, (M.ground & ~b for b in M.bases))


def restrict(M: Matroid, S: SubsetLike) -> Matroid:
    s = as_mask(S)
    if s & ~M.ground:
        raise GroundSetError(f"{fmt(s)} is not inside the ground set")
    r = rank(M, s)
    return _make(M.n, s, r, (b & s for b in M.bases if popcount(b & s) == r))


def delete(M: Matroid, T: SubsetLike) -> Matroid:
    return restrict(M, M.ground & ~as_mask(T))


def contract(M: Matroid, T: SubsetLike) -> Matroid:
    t = as_mask(T)
    if t & ~M.ground:
        raise GroundSetError(f"{fmt(t)} is not inside the ground set")
    r = rank(M, t)
    return _make(M.n, M.ground & ~t, M.k - r, (b & ~t for b in M.bases if popcount(b & t) == r))


def direct_sum(M: Matroid, N: Matroid) -> Matroid:
    if M.ground & N.ground:
        raise OverlappingGroundSets(f"{fmt(M.ground)} and {fmt(N.ground)} overlap")
    bases = [a | b for a in M.bases for b in N.bases]
    return _make(max(M.n, N.n), M.ground | N.ground, M.k + N.k, bases)


def connected_components(M: Matroid) -> list[int]:
    """Classes of "lies on a common circuit", sorted by smallest element.

    Loops and coloops come out as singletons.
    """
    parent = {e: e for e in M.elements}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in M._circuits:
        es = members(c)
        root = find(es[0])
        for e in es[1:]:
            parent[find(e)] = root
    blocks: dict[int, int] = {}
    for e in M.elements:
        r = find(e)
        blocks[r] = blocks.get(r, 0) | 1 << (e - 1)
    return sorted(blocks.values(), key=lowest)


def is_connected(M: Matroid) -> bool:
    return len(connected_components(M)) <= 1


def polytope_dim(M: Matroid) -> int:
    """Dimension of the basis polytope: |E| minus the number of components."""
    return M.size - len(connected_components(M))


def face_matroid(M: Matroid, w: Sequence) -> Matroid:
    """Matroid whose bases are the w-maximal bases of M.

    ``w[i-1]`` is the weight of element i; w must cover all of [n].
    Builds the flag of weight levels A_1 < A_2 < ... and returns the direct
    sum of the minors (M|A_i)/A_{i-1}.
    """
    if len(w) != M.n:
        raise ValueError(f"need {M.n} weights, got {len(w)}")
    w = [Fraction(x) for x in w]
    levels = sorted({w[e - 1] for e in M.elements}, reverse=True)
    out = _make(M.n, 0, 0, [0])
    prev = 0
    for lev in levels:
        cur = prev | as_mask(e for e in M.elements if w[e - 1] == lev)
        out = direct_sum(out, contract(restrict(M, cur), prev))
        prev = cur
    return _make(M.n, M.ground, out.k, out.bases)


def relabel(M: Matroid, mapping: dict[int, int], n: int) -> Matroid:
    """Rename elements through ``mapping`` into a matroid on [n]."""

    def move(s):
        return as_mask(mapping[e] for e in members(s))

    return _make(n, move(M.ground), M.k, (move(b) for b in M.bases))


def reindex(M: Matroid) -> tuple[Matroid, tuple[int, ...]]:
    """Copy of M on [m] keeping the inherited order, plus the old labels.

    ``labels[i-1]`` is the original name of new element i.
    """
    labels = M.elements
    if M.ground == full(M.n):
        return M, labels
    mapping = {e: i for i, e in enumerate(labels, 1)}
    return relabel(M, mapping, len(labels)), labels


def unindex(s: int, labels: Sequence[int]) -> int:
    """Translate a mask on [m] back through ``labels``."""
    return as_mask(labels[e - 1] for e in members(s))
