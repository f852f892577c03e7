"""Canonical JSON for matroids, chirotopes, matrices and verdicts.

Matroid:   {"n": 4, "bases": [[1, 2], [1, 3]]}
Chirotope: {"n": 4, "d": 2, "signs": {"1,2": 1, "1,3": -1}}
Matrix:    {"d": 2, "n": 3, "entries": [["1", "1", "1"], ["0", "1/2", "2"]]}

Matroids and chirotopes on a proper subset of [n] carry an extra "ground"
list. Parsers raise ParseError on anything non-canonical.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .bits import as_mask, full, members
from .errors import ParseError, PositroidsError
from .matroid import Matroid, validate_bases
from .oriented import Chirotope, chirotope_validate
from .positroid import PositroidVerdict
from .realization import RationalMatrix

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def subset_list(m: int) -> list[int]:
    return list(members(m))


def _int(obj, name) -> int:
    if not isinstance(obj, int) or isinstance(obj, bool):
        raise ParseError(f"{name} must be an integer")
    return obj


def _sorted_subset(items, what) -> int:
    if not isinstance(items, list) or any(not isinstance(e, int) or isinstance(e, bool) for e in items):
        raise ParseError(f"{what} must be a list of integers")
    if any(b <= a for a, b in zip(items, items[1:])):
        raise ParseError(f"{what} {items} is not strictly increasing")
    if items and items[0] < 1:
        raise ParseError(f"{what} {items} has an element below 1")
    return as_mask(items)


def _ground(obj, n) -> int:
    if "ground" not in obj:
        return full(n)
    return _sorted_subset(obj["ground"], "ground")


def matroid_to_obj(M: Matroid) -> dict:
    out: dict[str, Any] = {"n": M.n}
    if M.ground != full(M.n):
        out["ground"] = subset_list(M.ground)
    out["bases"] = sorted(subset_list(b) for b in M.bases)
    return out


def matroid_from_obj(obj: dict) -> Matroid:
    n = _int(obj.get("n"), "n")
    raw = obj.get("bases")
    if not isinstance(raw, list):
        raise ParseError("bases must be a list")
    bases = [_sorted_subset(b, "basis") for b in raw]
    if len(set(bases)) != len(bases):
        raise ParseError("duplicate basis")
    try:
        return validate_bases(n, bases, _ground(obj, n))
    except PositroidsError as exc:
        raise ParseError(f"not a matroid: {exc}") from exc


def chirotope_to_obj(chi: Chirotope) -> dict:
    out: dict[str, Any] = {"n": chi.n, "d": chi.d}
    if chi.ground != full(chi.n):
        out["ground"] = subset_list(chi.ground)
    keys = sorted((members(s), v) for s, v in chi.items() if v)
    out["signs"] = {",".join(map(str, k)): v for k, v in keys}
    return out


def chirotope_from_obj(obj: dict) -> Chirotope:
    n = _int(obj.get("n"), "n")
    d = _int(obj.get("d"), "d")
    raw = obj.get("signs")
    if not isinstance(raw, dict):
        raise ParseError("signs must be an object")
    signs = {}
    for key, v in raw.items():
        try:
            elems = [int(x) for x in key.split(",")] if key else []
        except ValueError as exc:
            raise ParseError(f"bad subset key {key!r}") from exc
        m = _sorted_subset(elems, f"key {key!r}")
        if len(elems) != d:
            raise ParseError(f"key {key!r} does not have {d} elements")
        if m in signs:
            raise ParseError(f"duplicate key {key!r}")
        if v not in (-1, 0, 1) or isinstance(v, bool):
            raise ParseError(f"sign {v!r} is not -1, 0 or 1")
        signs[m] = v
    try:
        return chirotope_validate(n, d, signs, _ground(obj, n))
    except PositroidsError as exc:
        raise ParseError(f"not a chirotope: {exc}") from exc


def matrix_to_obj(A: RationalMatrix) -> dict:
    return {"d": A.d, "n": A.n, "entries": [[str(x) for x in row] for row in A.entries]}


def _rational(x) -> Fraction:
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str) and _RATIONAL.fullmatch(x):
        try:
            return Fraction(x)
        except ZeroDivisionError as exc:
            raise ParseError(f"{x!r} has a zero denominator") from exc
    raise ParseError(f"{x!r} is not an exact rational string like '3/4'")


def matrix_from_obj(obj: dict) -> RationalMatrix:
    d = _int(obj.get("d"), "d")
    n = _int(obj.get("n"), "n")
    rows = obj.get("entries")
    if not isinstance(rows, list) or len(rows) != d:
        raise ParseError(f"entries must be a list of {d} rows")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"each row must have {n} entries")
        parsed.append([_rational(x) for x in row])
    return RationalMatrix(d, n, tuple(tuple(r) for r in parsed))


def detect_kind(obj: Any) -> str:
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    if "entries" in obj:
        return "matrix"
    if "signs" in obj:
        return "chirotope"
    if "bases" in obj:
        return "matroid"
    raise ParseError("cannot tell the object kind from its keys")


def load(text: str):
    """Parse JSON text into a Matroid, Chirotope or RationalMatrix."""
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    kind = detect_kind(obj)
    return {"matrix": matrix_from_obj, "chirotope": chirotope_from_obj, "matroid": matroid_from_obj}[kind](obj)


def to_obj(x) -> Any:
    if isinstance(x, Matroid):
        return matroid_to_obj(x)
    if isinstance(x, Chirotope):
        return chirotope_to_obj(x)
    if isinstance(x, RationalMatrix):
        return matrix_to_obj(x)
    if isinstance(x, PositroidVerdict):
        return {
            "is_positroid": x.is_positroid,
            "certificate": None if x.certificate is None else subset_list(x.certificate),
        }
    raise TypeError(f"cannot serialize {type(x).__name__}")


def dumps(x) -> str:
    return json.dumps(to_obj(x), separators=(",", ":"), ensure_ascii=False)
