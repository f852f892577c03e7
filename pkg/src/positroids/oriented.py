"""Chirotopes, reorientation, signed circuits and positive orientability."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .bits import (
    SubsetLike,
    as_mask,
    fmt,
    full,
    k_subsets,
    lowest,
    members,
    popcount,
    subset_index,
)
from .errors import (
    AllZero,
    GPViolation,
    GroundSetError,
    NoBasisExtension,
    OverlappingGroundSets,
    PositroidsError,
    SupportNotMatroid,
    WrongArity,
)
from .matroid import Matroid, _make, connected_components, rank, validate_bases


@dataclass(frozen=True)
class Chirotope:
    """Rank-d chirotope on ``ground`` inside [n].

    ``signs[i]`` is the value on the i-th d-subset of ``ground`` in colex
    order (see :func:`positroids.bits.k_subsets`). Instances are always in
    canonical form: the lexicographically smallest basis has sign +1, which
    identifies chi with -chi.
    """

    n: int
    ground: int
    d: int
    signs: tuple[int, ...]

    @property
    def subsets(self) -> tuple[int, ...]:
        return k_subsets(self.ground, self.d)

    @cached_property
    def _lookup(self) -> dict[int, int]:
        return {s: v for s, v in zip(self.subsets, self.signs) if v}

    def sign(self, s: SubsetLike) -> int:
        """chi(I) for the sorted tuple of I."""
        return self._lookup.get(as_mask(s), 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(s for s, v in zip(self.subsets, self.signs) if v)

    def items(self):
        return zip(self.subsets, self.signs)

    def __repr__(self):
        parts = ", ".join(f"{fmt(s)}:{'+' if v > 0 else '-'}" for s, v in self.items() if v)
        return f"Chirotope(n={self.n}, d={self.d}, ground={fmt(self.ground)}, {parts})"


@dataclass(frozen=True)
class SignedSet:
    positive: int
    negative: int

    def __post_init__(self):
        if self.positive & self.negative:
            raise ValueError("positive and negative parts overlap")

    @property
    def support(self) -> int:
        return self.positive | self.negative

    def __neg__(self):
        return SignedSet(self.negative, self.positive)

    def __call__(self, e: int) -> int:
        b = 1 << (e - 1)
        return 1 if self.positive & b else -1 if self.negative & b else 0

    def __repr__(self):
        return "{" + ",".join(f"{e}{'+' if self(e) > 0 else '-'}" for e in members(self.support)) + "}"


def _sort_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 on repeats)."""
    if len(set(seq)) != len(seq):
        return 0
    inv = 0
    for i in range(len(seq)):
        a = seq[i]
        for j in range(i + 1, len(seq)):
            if a > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def _ordered(lookup: Mapping[int, int], seq: Sequence[int]) -> int:
    s = _sort_sign(seq)
    if not s:
        return 0
    return s * lookup.get(as_mask(seq), 0)


def eval_ordered(chi: Chirotope, tup: Sequence[int]) -> int:
    """chi on an ordered d-tuple, extended by the alternating rule."""
    if len(tup) != chi.d:
        raise WrongArity(f"expected {chi.d} elements, got {len(tup)}")
    return _ordered(chi._lookup, tuple(tup))


def _canonical_signs(subsets, signs) -> tuple[int, ...]:
    first = None
    for s, v in zip(subsets, signs):
        if v and (first is None or members(s) < members(first[0])):
            first = (s, v)
    if first is not None and first[1] < 0:
        return tuple(-v for v in signs)
    return tuple(signs)


def _build(n, ground, d, signs) -> Chirotope:
    return Chirotope(n, ground, d, _canonical_signs(k_subsets(ground, d), signs))


def _gp_terms(lookup, a, b, c, e, ys):
    def s(x, y):
        return _ordered(lookup, (x, y) + ys)

    return s(a, b) * s(c, e), s(a, c) * s(b, e), s(a, e) * s(b, c)


def b2_holds(lookup, v, ys) -> bool:
    """The axiom exactly as stated for one ordered (v1..v4) and y-tuple."""
    v1, v2, v3, v4 = v
    ys = tuple(ys)

    def s(x, y):
        return _ordered(lookup, (x, y) + ys)

    eps = s(v1, v2) * s(v3, v4)
    if eps == 0:
        return True
    return s(v3, v2) * s(v1, v4) == eps or s(v2, v4) * s(v1, v3) == eps


def gp_witness(lookup: Mapping[int, int], ground: int, d: int):
    """First violated three-term relation as (v, ys), or None.

    Works per unordered 4-set: with t1 - t2 + t3 = 0 the signed terms must be
    all zero or include both signs. A failing ordered tuple is then located
    with :func:`b2_holds`.
    """
    if d < 2:
        return None
    for ymask in k_subsets(ground, d - 2):
        ys = members(ymask)
        rest = members(ground & ~ymask)
        for a, b, c, e in combinations(rest, 4):
            t1, t2, t3 = _gp_terms(lookup, a, b, c, e, ys)
            vals = (t1, -t2, t3)
            if (1 in vals) != (-1 in vals):
                for v in permutations((a, b, c, e)):
                    if not b2_holds(lookup, v, ys):
                        return v, ys
                raise AssertionError("symmetric check and B2 disagree")  # pragma: no cover
    return None


def b2_witness_unpruned(lookup: Mapping[int, int], ground: int, d: int):
    """Literal check over all ordered distinct 4-tuples; slow reference."""
    if d < 2:
        return None
    for ymask in k_subsets(ground, d - 2):
        ys = members(ymask)
        rest = members(ground & ~ymask)
        for v in permutations(rest, 4):
            if not b2_holds(lookup, v, ys):
                return v, ys
    return None


def _signs_from(ground, d, signs) -> list[int]:
    subs = k_subsets(ground, d)
    if isinstance(signs, Mapping):
        idx = subset_index(ground, d)
        out = [0] * len(subs)
        for key, v in signs.items():
            m = as_mask(key)
            if m not in idx:
                raise WrongArity(f"{fmt(m)} is not a {d}-subset of {fmt(ground)}")
            out[idx[m]] = int(v)
    else:
        out = [int(v) for v in signs]
        if len(out) != len(subs):
            raise WrongArity(f"expected {len(subs)} signs, got {len(out)}")
    if any(v not in (-1, 0, 1) for v in out):
        raise ValueError("signs must be -1, 0 or 1")
    return out


def chirotope_validate(n: int, d: int, signs, ground: SubsetLike | None = None) -> Chirotope:
    """Validate a sign map and return it in canonical form.

    ``signs`` is a mapping from d-subsets (bitmask or element iterable) to
    -1/0/1, missing keys being 0, or a sequence in colex order.
    """
    g = full(n) if ground is None else as_mask(ground)
    if g & ~full(n):
        raise GroundSetError(f"ground {fmt(g)} not inside [{n}]")
    vals = _signs_from(g, d, signs)
    if not any(vals):
        raise AllZero("chirotope is identically zero")
    subs = k_subsets(g, d)
    try:
        validate_bases(n, [s for s, v in zip(subs, vals) if v], g)
    except PositroidsError as exc:
        raise SupportNotMatroid(str(exc)) from exc
    lookup = {s: v for s, v in zip(subs, vals) if v}
    w = gp_witness(lookup, g, d)
    if w is not None:
        raise GPViolation(*w)
    return _build(n, g, d, vals)


def underlying_matroid(chi: Chirotope) -> Matroid:
    return _make(chi.n, chi.ground, chi.d, chi.support)


def reorient(chi: Chirotope, A: SubsetLike) -> Chirotope:
    """Flip the elements of A: chi(I) times (-1)^|A & I|."""
    a = as_mask(A)
    signs = [-v if popcount(s & a) & 1 else v for s, v in chi.items()]
    return _build(chi.n, chi.ground, chi.d, signs)


def _solve_gf2(rows: list[tuple[int, int]]) -> int | None:
    """Solve sum_{i in row} x_i = rhs over GF(2); free variables set to 0."""
    pivots: dict[int, tuple[int, int]] = {}
    for r, b in rows:
        while r:
            p = r.bit_length() - 1
            if p not in pivots:
                pivots[p] = (r, b)
                break
            pr, pb = pivots[p]
            r ^= pr
            b ^= pb
        else:
            if b:
                return None
    x = 0
    for p in sorted(pivots):
        r, b = pivots[p]
        # lower bits are already fixed
        if (popcount(r & x & ~(1 << p)) & 1) ^ b:
            x |= 1 << p
    return x


def is_positively_orientable(chi: Chirotope) -> int | None:
    """A set A whose reorientation has all bases of one sign, or None.

    Both targets are tried because chi and -chi are the same oriented
    matroid; :func:`reorient` with the returned A gives the all-positive
    canonical form.
    """
    for target in (1, -1):
        rows = [(s, 0 if v == target else 1) for s, v in chi.items() if v]
        x = _solve_gf2(rows)
        if x is not None:
            return x
    return None


def positively_orientable_brute(chi: Chirotope) -> int | None:
    """Reference search over all 2^|E| reorientations."""
    for a in range(1 << chi.n):
        if a & ~chi.ground:
            continue
        vals = {v if not popcount(s & a) & 1 else -v for s, v in chi.items() if v}
        if len(vals) == 1:
            return a
    return None


def signed_circuits(chi: Chirotope) -> frozenset[SignedSet]:
    """One signed circuit per circuit, normalised so its minimum is positive."""
    M = underlying_matroid(chi)
    out = set()
    for c_mask in M._circuits:
        c = lowest(c_mask)
        rest = c_mask & ~(1 << (c - 1))
        if not rest:
            out.add(SignedSet(c_mask, 0))
            continue
        basis = next((b for b in M.bases if b & rest == rest), None)
        if basis is None:
            raise NoBasisExtension(f"no basis contains {fmt(rest)}")
        pos, neg = 1 << (c - 1), 0
        for f in members(rest):
            x = members(basis & ~(1 << (f - 1)))
            sigma = -eval_ordered(chi, (c,) + x) * eval_ordered(chi, (f,) + x)
            if sigma == 1:
                pos |= 1 << (f - 1)
            elif sigma == -1:
                neg |= 1 << (f - 1)
            else:
                raise NoBasisExtension(f"degenerate pivot for circuit {fmt(c_mask)}")
        out.add(SignedSet(pos, neg))
    return frozenset(out)


def restriction_completion(chi: Chirotope, S: SubsetLike) -> tuple[int, ...]:
    """Smallest-index elements outside S that raise S to full rank."""
    M = underlying_matroid(chi)
    cur = as_mask(S)
    r = rank(M, cur)
    picked = []
    for e in members(chi.ground & ~cur):
        if r == chi.d:
            break
        if rank(M, cur | 1 << (e - 1)) > r:
            cur |= 1 << (e - 1)
            r += 1
            picked.append(e)
    return tuple(picked)


def om_restrict(chi: Chirotope, S: SubsetLike, completion: Sequence[int] | None = None) -> Chirotope:
    """The oriented matroid chi|S, read off chi(b_1..b_d', a_1..a_{d-d'})."""
    s = as_mask(S)
    if s & ~chi.ground:
        raise GroundSetError(f"{fmt(s)} is not inside the ground set")
    M = underlying_matroid(chi)
    dd = rank(M, s)
    a = restriction_completion(chi, s) if completion is None else tuple(completion)
    if len(a) != chi.d - dd or rank(M, s | as_mask(a)) != chi.d or as_mask(a) & s:
        raise ValueError(f"{a} does not complete {fmt(s)} to full rank")
    signs = [eval_ordered(chi, members(sub) + a) for sub in k_subsets(s, dd)]
    return _build(chi.n, s, dd, signs)


def om_direct_sum(chi1: Chirotope, chi2: Chirotope) -> Chirotope:
    if chi1.ground & chi2.ground:
        raise OverlappingGroundSets(f"{fmt(chi1.ground)} and {fmt(chi2.ground)} overlap")
    g = chi1.ground | chi2.ground
    d = chi1.d + chi2.d
    signs = []
    for s in k_subsets(g, d):
        p, q = s & chi1.ground, s & chi2.ground
        if popcount(p) != chi1.d:
            signs.append(0)
            continue
        v = chi1.sign(p) * chi2.sign(q)
        if v:
            v *= _sort_sign(members(p) + members(q))
        signs.append(v)
    return _build(max(chi1.n, chi2.n), g, d, signs)


def om_is_connected(chi: Chirotope) -> bool:
    return len(connected_components(underlying_matroid(chi))) <= 1


def rotate_order(chi: Chirotope, i: int) -> Chirotope:
    """Relabel by the cyclic shift of [n] sending i to 1."""
    n = chi.n
    if not 1 <= i <= n:
        raise ValueError(f"i={i} outside 1..{n}")

    def new(e):
        return (e - i) % n + 1

    def old(j):
        return (j + i - 2) % n + 1

    g = as_mask(new(e) for e in members(chi.ground))
    signs = [eval_ordered(chi, tuple(old(j) for j in members(s))) for s in k_subsets(g, chi.d)]
    return _build(n, g, chi.d, signs)


def indicator_signs(M: Matroid) -> list[int]:
    """+1 on bases, 0 elsewhere, in colex order."""
    bs = M.basis_set
    return [1 if s in bs else 0 for s in k_subsets(M.ground, M.k)]


def enumerate_chirotopes(M: Matroid) -> Iterable[Chirotope]:
    """Every chirotope (canonical form) with underlying matroid M.

    Depth-first over the signs of the bases in colex order, pruning on any
    three-term relation whose bases are all decided.
    """
    bases = M.bases
    lex_first = min(bases, key=members)
    order = [lex_first] + [b for b in bases if b != lex_first]
    pos = {b: i for i, b in enumerate(order)}
    d, g = M.k, M.ground
    # each relation is checked once all its bases have been assigned
    checks: dict[int, list] = {}
    if d >= 2:
        for ymask in k_subsets(g, d - 2):
            ys = members(ymask)
            for quad in combinations(members(g & ~ymask), 4):
                a, b, c, e = quad
                sets = [
                    as_mask((x, y) + ys)
                    for x, y in ((a, b), (c, e), (a, c), (b, e), (a, e), (b, c))
                ]
                involved = [pos[s] for s in sets if s in pos]
                if len(involved) < 2:
                    continue
                checks.setdefault(max(involved), []).append((quad, ys))
    lookup: dict[int, int] = {}

    def ok(level):
        for (a, b, c, e), ys in checks.get(level, ()):
            t1, t2, t3 = _gp_terms(lookup, a, b, c, e, ys)
            vals = (t1, -t2, t3)
            if (1 in vals) != (-1 in vals):
                return False
        return True

    def rec(level):
        if level == len(order):
            yield _build(M.n, g, d, [lookup.get(s, 0) for s in k_subsets(g, d)])
            return
        for v in ((1,) if level == 0 else (1, -1)):
            lookup[order[level]] = v
            if ok(level):
                yield from rec(level + 1)
        del lookup[order[level]]

    yield from rec(0)


def signed_circuit_components(chi: Chirotope) -> list[int]:
    """Classes of elements sharing a signed circuit, computed from scratch."""
    blocks = {e: 1 << (e - 1) for e in members(chi.ground)}
    for c in signed_circuits(chi):
        merged = 0
        for e in members(c.support):
            merged |= blocks[e]
        for e in members(merged):
            blocks[e] = merged
    return sorted(set(blocks.values()), key=lowest)


def direct_sum_split(chi: Chirotope) -> int | None:
    """A nonempty proper S with chi = chi|S + chi|(E-S), or None.

    This is the definition of a disconnected oriented matroid, tested over
    every bipartition of the ground set.
    """
    g = chi.ground
    if popcount(g) < 2:
        return None
    top = 1 << (g.bit_length() - 1)
    rest = g & ~top
    s = rest
    # S avoids the largest element, so each bipartition is seen once
    while s:
        part = s
        other = g & ~part
        summed = om_direct_sum(om_restrict(chi, part), om_restrict(chi, other))
        if summed.d == chi.d and summed.signs == chi.signs:
            return part
        s = (s - 1) & rest
    return None
