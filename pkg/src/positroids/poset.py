"""Finite posets: Hasse diagram, Möbius function, gradedness, thinness,
Eulerian test and reduced Euler characteristics of order complexes.

Order relations are stored as bitsets: ``up[i]`` has bit j set iff i <= j.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .bits import popcount
from .errors import NotComparable, PositroidsError

BOTTOM = "hat0"


def _bits(m: int):
    while m:
        b = m & -m
        yield b.bit_length() - 1
        m ^= b


class Poset:
    """A finite poset on indices 0..N-1 with arbitrary ids and payloads.

    If ``bottom`` is not None it is the index of an adjoined least element.
    """

    def __init__(self, ids: Sequence[str], up: Sequence[int], payload: Sequence[Any] | None = None, bottom: int | None = None):
        self.ids = list(ids)
        self.up = list(up)
        self.payload = list(payload) if payload is not None else [None] * len(ids)
        self.bottom = bottom
        n = len(self.ids)
        self.down = [0] * n
        for i in range(n):
            for j in _bits(self.up[i]):
                self.down[j] |= 1 << i
        self._check()
        # a linear extension
        self.order = sorted(range(n), key=lambda i: popcount(self.down[i]))
        self._mobius_rows: dict[int, dict[int, int]] = {}
        self._covers = None

    @classmethod
    def from_relation(cls, ids, leq: Callable[[int, int], bool], payload=None, adjoin_bottom=False):
        n = len(ids)
        up = [sum(1 << j for j in range(n) if leq(i, j)) for i in range(n)]
        if not adjoin_bottom:
            return cls(ids, up, payload)
        up = [(1 << (n + 1)) - 1] + [u << 1 for u in up]
        return cls([BOTTOM] + list(ids), up, [None] + list(payload or [None] * n), bottom=0)

    def _check(self):
        n = len(self.ids)
        for i in range(n):
            if not self.up[i] >> i & 1:
                raise PositroidsError(f"relation not reflexive at {self.ids[i]}")
            for j in _bits(self.up[i]):
                if j != i and self.up[j] >> i & 1:
                    raise PositroidsError(f"relation not antisymmetric: {self.ids[i]}, {self.ids[j]}")
                if self.up[j] & ~self.up[i]:
                    raise PositroidsError(f"relation not transitive through {self.ids[j]}")
        if self.bottom is not None and self.up[self.bottom] != (1 << n) - 1:
            raise PositroidsError("adjoined bottom is not below everything")

    def __len__(self):
        return len(self.ids)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def interval(self, x: int, y: int) -> int:
        """Bitset of the closed interval [x, y]."""
        return self.up[x] & self.down[y]

    @property
    def covers(self) -> list[tuple[int, int]]:
        if self._covers is None:
            out = []
            for x in range(len(self)):
                above = self.up[x] & ~(1 << x)
                for y in _bits(above):
                    if self.interval(x, y) == (1 << x) | (1 << y):
                        out.append((x, y))
            self._covers = out
        return self._covers

    def upper_covers(self) -> list[list[int]]:
        ups = [[] for _ in range(len(self))]
        for x, y in self.covers:
            ups[x].append(y)
        return ups

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if self.down[i] == 1 << i]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if self.up[i] == 1 << i]


def mobius(P: Poset, x: int, y: int) -> int:
    if not P.leq(x, y):
        raise NotComparable(f"{P.ids[x]} is not below {P.ids[y]}")
    row = P._mobius_rows.get(x)
    if row is None:
        row = {}
        for z in P.order:
            if not P.up[x] >> z & 1:
                continue
            if z == x:
                row[z] = 1
            else:
                below = P.up[x] & P.down[z] & ~(1 << z)
                row[z] = -sum(row[w] for w in _bits(below))
        P._mobius_rows[x] = row
    return row[y]


def _chain_lengths(P: Poset):
    """Shortest and longest saturated chains from a minimal element."""
    lo = [0] * len(P)
    hi = [0] * len(P)
    ups = P.upper_covers()
    seen = [False] * len(P)
    for m in P.minimal():
        seen[m] = True
    for x in P.order:
        for y in ups[x]:
            if not seen[y]:
                lo[y], hi[y], seen[y] = lo[x] + 1, hi[x] + 1, True
            else:
                lo[y] = min(lo[y], lo[x] + 1)
                hi[y] = max(hi[y], hi[x] + 1)
    return lo, hi


def is_graded(P: Poset) -> bool:
    """All maximal chains have the same length."""
    if not len(P):
        return True
    lo, hi = _chain_lengths(P)
    tops = P.maximal()
    return min(lo[t] for t in tops) == max(hi[t] for t in tops)


def rank_function(P: Poset) -> list[int] | None:
    if not is_graded(P):
        return None
    return _chain_lengths(P)[1]


def interval_length(P: Poset, x: int, y: int) -> int:
    """Length of the longest chain from x to y."""
    if not P.leq(x, y):
        raise NotComparable(f"{P.ids[x]} is not below {P.ids[y]}")
    best = {x: 0}
    ups = P.upper_covers()
    inside = P.interval(x, y)
    for z in P.order:
        if z not in best:
            continue
        for w in ups[z]:
            if inside >> w & 1:
                best[w] = max(best.get(w, 0), best[z] + 1)
    return best[y]


def is_thin(P: Poset) -> bool:
    """Every interval of length two has exactly four elements."""
    r = rank_function(P)
    for x in range(len(P)):
        for y in _bits(P.up[x]):
            size = popcount(P.interval(x, y))
            if size < 3:
                continue
            length = r[y] - r[x] if r is not None else interval_length(P, x, y)
            if length == 2 and size != 4:
                return False
    return True


def is_eulerian(P: Poset) -> bool:
    r = rank_function(P)
    if r is None:
        return False
    for x in range(len(P)):
        for y in _bits(P.up[x]):
            if mobius(P, x, y) != (-1) ** (r[y] - r[x]):
                return False
    return True


@dataclass(frozen=True)
class Diagnostics:
    graded: bool
    rank_vector: tuple[int, ...] | None
    thin: bool
    eulerian: bool

    def as_dict(self):
        return {
            "graded": self.graded,
            "rank_vector": list(self.rank_vector) if self.rank_vector else None,
            "thin": self.thin,
            "eulerian": self.eulerian,
        }


def poset_diagnostics(P: Poset) -> Diagnostics:
    r = rank_function(P)
    vec = None
    if r is not None:
        counts = [0] * (max(r) + 1 if r else 0)
        for v in r:
            counts[v] += 1
        vec = tuple(counts)
    return Diagnostics(r is not None, vec, is_thin(P), is_eulerian(P))


def chain_counts(P: Poset, elements: int) -> list[int]:
    """c[i] = number of chains with i elements inside the given bitset."""
    ending: dict[int, list[int]] = {}
    total = [1]
    for z in P.order:
        if not elements >> z & 1:
            continue
        acc = [0, 1]
        for w in _bits(P.down[z] & elements & ~(1 << z)):
            for size, c in enumerate(ending[w]):
                if c:
                    while len(acc) <= size + 1:
                        acc.append(0)
                    acc[size + 1] += c
        ending[z] = acc
        for size, c in enumerate(acc):
            if size == 0:
                continue
            while len(total) <= size:
                total.append(0)
            total[size] += c
    return total


def order_complex_euler(P: Poset, part: tuple[int, int] | None = None) -> int:
    """Reduced Euler characteristic of the order complex.

    ``part`` None means the whole poset without its adjoined bottom; a pair
    (x, y) means the open interval (x, y). The empty complex gives -1.
    """
    if part is None:
        elements = (1 << len(P)) - 1
        if P.bottom is not None:
            elements &= ~(1 << P.bottom)
    else:
        x, y = part
        if not P.leq(x, y):
            raise NotComparable(f"{P.ids[x]} is not below {P.ids[y]}")
        elements = P.interval(x, y) & ~(1 << x) & ~(1 << y)
    counts = chain_counts(P, elements)
    # a chain of i elements is an (i-1)-simplex
    return sum(c if i % 2 else -c for i, c in enumerate(counts))


def to_json(P: Poset) -> str:
    r = rank_function(P)
    return json.dumps(
        {"elements": P.ids, "covers": [list(c) for c in P.covers], "ranks": r},
        ensure_ascii=False,
    )


def to_dot(P: Poset, name: str = "poset") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, label in enumerate(P.ids):
        lines.append(f'  n{i} [label="{label}"];')
    for x, y in P.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def chain_poset(length: int) -> Poset:
    """Totally ordered poset 0 < 1 < ... < length."""
    ids = [str(i) for i in range(length + 1)]
    return Poset.from_relation(ids, lambda i, j: i <= j)
