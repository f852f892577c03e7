"""Exact rational matrices: maximal minors, chirotopes, total nonnegativity,
moment-curve realizations and a small search for TNN realizations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from .bits import SubsetLike, as_mask, full, k_subsets, members, popcount
from .errors import NotAPositroid, NotIncreasing, RankDeficient, WrongSize
from .matroid import Matroid, _make
from .oriented import Chirotope, chirotope_validate


@dataclass(frozen=True)
class RationalMatrix:
    d: int
    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> "RationalMatrix":
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise WrongSize("ragged rows")
        return cls(len(rows), n, rows)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j - 1] for r in self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"RationalMatrix({self.d}x{self.n}: [{body}])"


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Bareiss elimination after clearing denominators row by row."""
    d = len(rows)
    if d == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for r in rows:
        r = [Fraction(x) for x in r]
        m = lcm(*(x.denominator for x in r))
        scale /= m
        a.append([int(x * m) for x in r])
    sign = 1
    prev = 1
    for k in range(d - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, d) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[d - 1][d - 1] * scale


def maximal_minor(A: RationalMatrix, I: SubsetLike) -> Fraction:
    cols = members(as_mask(I))
    if len(cols) != A.d or (cols and cols[-1] > A.n):
        raise WrongSize(f"need {A.d} columns inside 1..{A.n}, got {cols}")
    return determinant([[r[j - 1] for j in cols] for r in A.entries])


def plucker_coordinates(A: RationalMatrix) -> dict[int, Fraction]:
    return {s: maximal_minor(A, s) for s in k_subsets(full(A.n), A.d)}


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def chirotope_from_matrix(A: RationalMatrix) -> Chirotope:
    """Signs of the maximal minors; validated (a failure is an arithmetic bug)."""
    pl = plucker_coordinates(A)
    if not any(pl.values()):
        raise RankDeficient(f"{A.d}x{A.n} matrix has rank below {A.d}")
    return chirotope_validate(A.n, A.d, {s: _sgn(v) for s, v in pl.items()})


def is_totally_nonnegative(A: RationalMatrix) -> bool:
    return all(v >= 0 for v in plucker_coordinates(A).values())


def matroid_of_matrix(A: RationalMatrix) -> Matroid:
    bases = [s for s, v in plucker_coordinates(A).items() if v]
    if not bases:
        raise RankDeficient(f"{A.d}x{A.n} matrix has rank below {A.d}")
    return _make(A.n, full(A.n), A.d, bases)


def moment_curve_matrix(d: int, xs: Sequence) -> RationalMatrix:
    """Columns (1, x, x^2, ..., x^(d-1)) for strictly increasing x."""
    xs = [Fraction(x) for x in xs]
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise NotIncreasing("parameters must be strictly increasing")
    if len(xs) < d:
        raise WrongSize(f"need at least {d} points, got {len(xs)}")
    return RationalMatrix.of([[x**p for x in xs] for p in range(d)])


def _uniform_on_support(M: Matroid) -> bool:
    loops = M.ground & ~_nonloops(M)
    support = M.ground & ~loops
    return len(M.bases) == len(k_subsets(support, M.k))


def _nonloops(M: Matroid) -> int:
    out = 0
    for b in M.bases:
        out |= b
    return out


def realize_positroid_search(M: Matroid, height: int = 2, budget: int = 200_000) -> RationalMatrix | None:
    """Best-effort search for a TNN matrix realizing the positroid M.

    Loops become zero columns. If the remaining matroid is uniform the
    columns lie on the moment curve. Otherwise the columns of the
    lexicographically first basis are fixed to the identity, and each other
    entry is forced to zero or given the sign that makes its Plucker
    coordinate positive; magnitudes 1..height are tried, at most ``budget``
    candidates. None means nothing was found, not that none exists.
    """
    from .positroid import is_positroid

    if M.ground != full(M.n):
        raise ValueError("realization search needs a matroid on all of [n]")
    if not is_positroid(M):
        raise NotAPositroid(repr(M))
    d, n = M.k, M.n
    if d == 0:
        return RationalMatrix(0, n, ())
    nonloops = _nonloops(M)
    if _uniform_on_support(M):
        cols = members(nonloops)
        vand = moment_curve_matrix(d, range(len(cols)))
        rows = [[Fraction(0)] * n for _ in range(d)]
        for j, c in enumerate(cols):
            for i in range(d):
                rows[i][c - 1] = vand.entries[i][j]
        return RationalMatrix.of(rows)

    first = min(M.bases, key=members)
    piv = members(first)
    bs = M.basis_set
    free = []  # (row, col, sign)
    for c in range(1, n + 1):
        if first >> (c - 1) & 1:
            continue
        for r, p in enumerate(piv):
            swapped = (first & ~(1 << (p - 1))) | 1 << (c - 1)
            if swapped in bs:
                between = popcount(first & ~(1 << (p - 1)) & (full(max(p, c) - 1) & ~full(min(p, c))))
                free.append((r, c, -1 if between & 1 else 1))
    tried = 0
    for mags in product(range(1, height + 1), repeat=len(free)):
        tried += 1
        if tried > budget:
            return None
        rows = [[Fraction(0)] * n for _ in range(d)]
        for r, p in enumerate(piv):
            rows[r][p - 1] = Fraction(1)
        for (r, c, s), m in zip(free, mags):
            rows[r][c - 1] = Fraction(s * m)
        A = RationalMatrix.of(rows)
        if is_totally_nonnegative(A) and matroid_of_matrix(A) == M:
            return A
    return None

