"""The positive MacPhersonian: positively oriented matroids of rank k on [n]
ordered by specialization, with an adjoined bottom element."""

from __future__ import annotations

from .bits import members
from .errors import ShapeMismatch
from .enumeration import enumerate_chirotopes, enumerate_poms
from .oriented import Chirotope, is_positively_orientable, underlying_matroid
from .poset import Poset


def specializes(chi: Chirotope, chi2: Chirotope) -> bool:
    """chi ~> chi2: chi agrees with chi2 (or -chi2) wherever chi2 is nonzero."""
    if (chi.n, chi.ground, chi.d) != (chi2.n, chi2.ground, chi2.d):
        raise ShapeMismatch("chirotopes differ in ground set or rank")
    pairs = [(a, b) for a, b in zip(chi.signs, chi2.signs) if b]
    return all(a == b for a, b in pairs) or all(a == -b for a, b in pairs)


def chirotope_id(chi: Chirotope) -> str:
    return " ".join(
        ("+" if v > 0 else "-") + ",".join(map(str, members(s))) for s, v in chi.items() if v
    ) or "+"


def build_macphersonian_plus(k: int, n: int, reorientation_closed: bool = False) -> Poset:
    """MacP+(k, n) with a bottom element adjoined.

    Elements are the all-nonnegative chirotopes, one per positroid. With
    ``reorientation_closed`` every positively orientable chirotope is kept
    instead, which gives a larger poset. M' <= M iff M ~> M'.
    """
    if reorientation_closed:
        elems = [c for c in enumerate_chirotopes(n, k) if is_positively_orientable(c) is not None]
    else:
        elems = list(enumerate_poms(n, k))
    return Poset.from_relation(
        [chirotope_id(c) for c in elems],
        lambda i, j: specializes(elems[j], elems[i]),
        payload=elems,
        adjoin_bottom=True,
    )


def containment_poset(k: int, n: int) -> Poset:
    """Positroids of rank k on [n] ordered by inclusion of basis sets."""
    elems = list(enumerate_poms(n, k))
    bases = [underlying_matroid(c).basis_set for c in elems]
    return Poset.from_relation(
        [chirotope_id(c) for c in elems],
        lambda i, j: bases[i] <= bases[j],
        payload=elems,
        adjoin_bottom=True,
    )
