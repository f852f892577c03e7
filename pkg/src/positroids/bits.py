"""Subsets of [n] encoded as bitmasks (element i is bit i-1).

Numeric order of equal-size masks is colex order of the subsets.
"""

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Union

MAX_N = 16

SubsetLike = Union[int, Iterable[int]]


def as_mask(s: SubsetLike) -> int:
    """Accept a bitmask or an iterable of 1-indexed elements."""
    if isinstance(s, int):
        if s < 0:
            raise ValueError(f"negative bitmask {s}")
        return s
    m = 0
    for e in s:
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"bad element {e!r}")
        m |= 1 << (e - 1)
    return m


def mask(*elements: int) -> int:
    return as_mask(elements)


def members(m: int) -> tuple[int, ...]:
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def full(n: int) -> int:
    return (1 << n) - 1


def popcount(m: int) -> int:
    return bin(m).count("1")


def lowest(m: int) -> int:
    """Smallest element of a nonempty mask."""
    return (m & -m).bit_length()


@lru_cache(maxsize=None)
def k_subsets(ground: int, k: int) -> tuple[int, ...]:
    """All k-subsets of ``ground`` in colex order."""
    elems = members(ground)
    out = [as_mask(c) for c in combinations(elems, k)]
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def subset_index(ground: int, k: int) -> dict[int, int]:
    return {s: i for i, s in enumerate(k_subsets(ground, k))}


def submasks(m: int):
    """All submasks of m, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == m:
            return
        sub = (sub - m) & m


def lex_key(m: int) -> tuple[int, ...]:
    return members(m)


def fmt(m: int) -> str:
    return "{" + ",".join(map(str, members(m))) + "}"


def cyclic_interval(i: int, j: int, n: int) -> int:
    """The cyclic interval [i, j] of [n]; wraps past n when j < i."""
    if i <= j:
        return full(j) & ~full(i - 1)
    return (full(n) & ~full(i - 1)) | full(j)


@lru_cache(maxsize=None)
def cyclic_intervals(n: int) -> tuple[int, ...]:
    """Every distinct nonempty cyclic interval of [n]."""
    seen = set()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            seen.add(cyclic_interval(i, j, n))
    return tuple(sorted(seen))


def is_cyclic_interval(m: int, n: int) -> bool:
    """True when the nonempty mask is one contiguous arc of the n-cycle."""
    if m == 0:
        return False
    f = full(n)
    if m == f:
        return True
    # an arc has exactly one element whose cyclic predecessor is outside it
    rot = ((m << 1) | (m >> (n - 1))) & f
    return popcount(m & ~rot) == 1


def rotated_order(a: int, n: int) -> list[int]:
    """a < a+1 < ... < n < 1 < ... < a-1."""
    return list(range(a, n + 1)) + list(range(1, a))
