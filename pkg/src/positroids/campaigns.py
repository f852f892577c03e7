"""Exhaustive verification campaigns behind ``positroids verify``.

A campaign is split into shards, one per (n, k) layer. Each shard returns a
partial report; partial reports merge associatively, so shards may run in
worker processes.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from . import enumeration as enum
from . import oriented as om
from . import positroid as pos
from .bits import MAX_N, full, members, submasks
from .errors import UnknownTheorem
from .macphersonian import build_macphersonian_plus, containment_poset
from .matroid import Matroid, contract, direct_sum, dual, restrict
from .poset import mobius, order_complex_euler, poset_diagnostics, rank_function
from .serialize import to_obj

log = logging.getLogger(__name__)

SOFT_MAX_N = 6


def soft_max_n() -> int:
    return int(os.environ.get("POSITROID_MAX_N", SOFT_MAX_N))


@dataclass
class VerificationReport:
    theorem: str
    parameters: dict
    instances: int = 0
    counterexamples: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.theorem,
            self.parameters,
            self.instances + other.instances,
            self.counterexamples + other.counterexamples,
            self.wall_time + other.wall_time,
        )

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "parameters": self.parameters,
            "instances": self.instances,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "wall_time": round(self.wall_time, 3),
        }


def _sub(m):
    return list(members(m))


# --- shard functions: (n, k) -> (instances, counterexamples) ---------------


def main_theorem(n, k):
    count, bad = 0, []
    for M in enum.enumerate_matroids(n, k):
        count += 1
        chi, _ = pos.indicator_chirotope(M)
        if chi is None:
            continue
        verdict = pos.is_positroid(M)
        if not verdict.is_positroid:
            bad.append({"matroid": to_obj(M), "certificate": _sub(verdict.certificate)})
    return count, bad


def equivalence(n, k):
    """Indicator chirotope, da Silva, interval criterion and necklace agree."""
    count, bad = 0, []
    for M in enum.enumerate_matroids(n, k):
        count += 1
        verdicts = {
            "positively_oriented": pos.indicator_chirotope(M)[0] is not None,
            "da_silva": pos.da_silva_criterion(M)[0],
            "positroid": pos.is_positroid(M).is_positroid,
            "necklace": pos.is_positroid_by_necklace(M),
        }
        if len(set(verdicts.values())) != 1:
            bad.append({"matroid": to_obj(M), "verdicts": verdicts})
    return count, bad


@lru_cache(maxsize=None)
def _connected_on(block: int, n: int) -> tuple[Matroid, ...]:
    return tuple(enum.connected_positroids_on(block, n))


def noncrossing(n, k):
    count, bad = 0, []
    for M in enum.enumerate_matroids(n, k):
        if not pos.is_positroid(M):
            continue
        count += 1
        res = pos.component_partition_check(M)
        if isinstance(res, pos.CrossingWitness):
            bad.append({"matroid": to_obj(M), "crossing": [_sub(res.first), _sub(res.second)]})
    # converse: sums of connected positroids along non-crossing partitions
    for blocks in pos.noncrossing_partitions(full(n), n):
        for parts in product(*(_connected_on(b, n) for b in blocks)):
            if sum(p.k for p in parts) != k:
                continue
            count += 1
            S = Matroid(n, 0, 0, (0,))
            for p in parts:
                S = direct_sum(S, p)
            verdict = pos.is_positroid(S)
            if not verdict.is_positroid:
                bad.append(
                    {
                        "direct_sum": to_obj(S),
                        "partition": [_sub(b) for b in blocks],
                        "certificate": _sub(verdict.certificate),
                    }
                )
    return count, bad


def closure(n, k):
    count, bad = 0, []
    for M in enum.enumerate_matroids(n, k):
        if not pos.is_positroid(M):
            continue
        minors = [("dual", None, dual(M))]
        for s in submasks(M.ground):
            minors.append(("restrict", s, restrict(M, s)))
            minors.append(("contract", s, contract(M, s)))
        for op, s, N in minors:
            count += 1
            if not pos.is_positroid(N).is_positroid:
                bad.append({"matroid": to_obj(M), "operation": op, "subset": None if s is None else _sub(s)})
    return count, bad


def rotation(n, k):
    count, bad = 0, []
    for chi in enum.enumerate_chirotopes(n, k):
        count += 1
        base = om.is_positively_orientable(chi) is not None
        for i in range(1, n + 1):
            if (om.is_positively_orientable(om.rotate_order(chi, i)) is not None) != base:
                bad.append({"chirotope": to_obj(chi), "rotation": i})
    return count, bad


def restriction(n, k):
    count, bad = 0, []
    for chi in enum.enumerate_chirotopes(n, k):
        if om.is_positively_orientable(chi) is None:
            continue
        for s in submasks(chi.ground):
            count += 1
            if om.is_positively_orientable(om.om_restrict(chi, s)) is None:
                bad.append({"chirotope": to_obj(chi), "subset": _sub(s)})
    return count, bad


def connectivity(n, k):
    count, bad = 0, []
    for chi in enum.enumerate_chirotopes(n, k):
        count += 1
        via_matroid = om.om_is_connected(chi)
        via_circuits = len(om.signed_circuit_components(chi)) <= 1
        split = om.direct_sum_split(chi)
        via_definition = split is None
        if not via_matroid == via_circuits == via_definition:
            bad.append(
                {
                    "chirotope": to_obj(chi),
                    "underlying_connected": via_matroid,
                    "signed_circuit_connected": via_circuits,
                    "split": None if split is None else _sub(split),
                }
            )
    return count, bad


def poset_topology(n, k):
    P = build_macphersonian_plus(k, n)
    bad = []
    diag = poset_diagnostics(P)
    if not (diag.graded and diag.thin and diag.eulerian):
        bad.append({"k": k, "n": n, "diagnostics": diag.as_dict()})
        return len(P), bad
    r = rank_function(P)
    tops = P.maximal()
    if len(tops) != 1 or P.payload[tops[0]].signs != tuple(1 for _ in P.payload[tops[0]].signs):
        bad.append({"k": k, "n": n, "problem": "top element is not the uniform positroid"})
    elif r[tops[0]] != k * (n - k) + 1:
        bad.append({"k": k, "n": n, "problem": f"length {r[tops[0]]} != k(n-k)+1"})
    whole = order_complex_euler(P)
    if whole != 0:
        bad.append({"k": k, "n": n, "problem": f"reduced Euler characteristic of the whole complex is {whole}"})
    for m in range(len(P)):
        if m == P.bottom:
            continue
        # sphere of dimension length - 2; the atoms give the empty sphere
        chi_open = order_complex_euler(P, (P.bottom, m))
        expected = 1 if r[m] % 2 == 0 else -1
        if chi_open != expected or chi_open != mobius(P, P.bottom, m):
            bad.append({"k": k, "n": n, "element": P.ids[m], "euler": chi_open, "length": r[m]})
    return len(P), bad


def poset_isomorphism(n, k):
    P = build_macphersonian_plus(k, n)
    Q = containment_poset(k, n)
    bad = []
    if P.ids != Q.ids or P.up != Q.up:
        diff = [P.ids[i] for i in range(len(P)) if P.up[i] != Q.up[i]]
        bad.append({"k": k, "n": n, "elements_with_different_upsets": diff})
    return len(P), bad


THEOREMS = {
    "main-5.1": main_theorem,
    "dasilva-5.2": equivalence,
    "noncrossing-3.7": noncrossing,
    "closure-3.5": closure,
    "rotate-4.10": rotation,
    "restrict-4.12": restriction,
    "connected-4.13": connectivity,
    "poset-6.6": poset_topology,
    "isomorphism-6.13": poset_isomorphism,
}


def shards(n_max: int, k: int | None = None) -> list[tuple[int, int]]:
    out = []
    for n in range(n_max + 1):
        for kk in range(n + 1):
            if k is None or kk == k:
                out.append((n, kk))
    return out


def _run_shard(args):
    theorem, n, k = args
    t0 = time.perf_counter()
    count, bad = THEOREMS[theorem](n, k)
    return count, bad, time.perf_counter() - t0


def run_campaign(theorem: str, n_max: int, k: int | None = None, jobs: int = 1) -> VerificationReport:
    if theorem not in THEOREMS:
        raise UnknownTheorem(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if not 0 <= n_max <= MAX_N:
        raise ValueError(f"n={n_max} outside 0..{MAX_N}")
    if n_max > soft_max_n():
        log.warning("n=%d is above the soft bound %d; this may take very long", n_max, soft_max_n())
    t0 = time.perf_counter()
    work = [(theorem, n, kk) for n, kk in shards(n_max, k)]
    report = VerificationReport(theorem, {"n_max": n_max, "k": k})
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_shard, work))
    else:
        results = [_run_shard(w) for w in work]
    for count, bad, _ in results:
        report = report.merge(VerificationReport(theorem, report.parameters, count, bad))
    report.wall_time = time.perf_counter() - t0
    return report
