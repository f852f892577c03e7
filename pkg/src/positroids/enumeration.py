"""Exhaustive enumeration of matroids, positroids and oriented matroids."""

from __future__ import annotations

from typing import Iterator

from .bits import MAX_N, full, k_subsets, members
from .matroid import Matroid, _make, relabel
from .oriented import Chirotope, enumerate_chirotopes as _orientations
from .positroid import indicator_chirotope, is_positroid


def enumerate_matroids(n: int, k: int) -> Iterator[Matroid]:
    """Every matroid of rank k on [n], once each, in a fixed order.

    Depth-first over the k-subsets in colex order, each either taken as a
    basis or rejected. A branch dies as soon as some exchange (B1, B2, x)
    has all its candidates (B1 - x) + y rejected; each such failure is
    detected when its last ingredient is decided, so every leaf is a
    matroid.
    """
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n={n} outside 0..{MAX_N}")
    if not 0 <= k <= n:
        return
    g = full(n)
    cands = k_subsets(g, k)
    total = len(cands)
    status: dict[int, bool] = {}
    inc: list[int] = []

    def rejected(s):
        return status.get(s) is False

    def broken(b1, b2, x):
        base = b1 & ~x
        y = b2 & ~b1
        while y:
            bit = y & -y
            y ^= bit
            if not rejected(base | bit):
                return False
        return True

    def bad_pair(b1, b2):
        rest = b1 & ~b2
        while rest:
            x = rest & -rest
            rest ^= x
            if broken(b1, b2, x):
                return True
        return False

    def bad_after_include(s):
        for b in inc:
            if b != s and (bad_pair(s, b) or bad_pair(b, s)):
                return True
        return False

    def bad_after_reject(s):
        # s = (B1 - x) + y for an included B1 and some B2 holding y but not x
        for ybit_e in members(s):
            ybit = 1 << (ybit_e - 1)
            for x_e in members(g & ~s):
                x = 1 << (x_e - 1)
                b1 = (s & ~ybit) | x
                if status.get(b1) is not True:
                    continue
                for b2 in inc:
                    if b2 & ybit and not b2 & x and broken(b1, b2, x):
                        return True
        return False

    def rec(i):
        if i == total:
            if inc:
                yield _make(n, g, k, inc)
            return
        s = cands[i]
        status[s] = True
        inc.append(s)
        if not bad_after_include(s):
            yield from rec(i + 1)
        inc.pop()
        status[s] = False
        if not bad_after_reject(s):
            yield from rec(i + 1)
        del status[s]

    yield from rec(0)


def enumerate_all_matroids(n: int) -> Iterator[Matroid]:
    for k in range(n + 1):
        yield from enumerate_matroids(n, k)


def enumerate_positroids(n: int, k: int) -> Iterator[Matroid]:
    for M in enumerate_matroids(n, k):
        if is_positroid(M):
            yield M


def enumerate_poms(n: int, k: int) -> Iterator[Chirotope]:
    """All-nonnegative chirotopes: one per positively oriented matroid class."""
    for M in enumerate_matroids(n, k):
        chi, _ = indicator_chirotope(M)
        if chi is not None:
            yield chi


def enumerate_chirotopes(n: int, k: int) -> Iterator[Chirotope]:
    """Every rank-k oriented matroid on [n], canonical sign representative."""
    for M in enumerate_matroids(n, k):
        yield from _orientations(M)


def connected_positroids_on(ground: int, n: int) -> list[Matroid]:
    """Connected positroids on ``ground`` with the order inherited from [n]."""
    from .matroid import is_connected

    elems = members(ground)
    m = len(elems)
    mapping = {i: e for i, e in enumerate(elems, 1)}
    out = []
    for k in range(m + 1):
        for M in enumerate_positroids(m, k):
            if is_connected(M):
                out.append(relabel(M, mapping, n))
    return out
