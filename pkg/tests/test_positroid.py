from itertools import product

import pytest

from conftest import load_fixture
from oracles import crossing_quadruple, cyclic_interval as interval_oracle
from positroids.bits import cyclic_interval, cyclic_intervals, full, mask, members, popcount, submasks
from positroids.enumeration import enumerate_all_matroids, enumerate_positroids
from positroids.errors import NotDisjoint
from positroids.matroid import contract, dual, rank, restrict, uniform, validate_bases
from positroids.positroid import (
    CrossingWitness,
    NonCrossingPartition,
    component_partition_check,
    da_silva_criterion,
    grassmann_necklace,
    indicator_chirotope,
    interval_ranks,
    is_circular,
    is_noncrossing,
    is_noncrossing_partition,
    is_positroid,
    is_positroid_by_necklace,
    noncrossing_partitions,
)

ALL5 = [M for n in range(6) for M in enumerate_all_matroids(n)]


def test_cyclic_intervals_match_oracle():
    for n in range(1, 7):
        for i, j in product(range(1, n + 1), repeat=2):
            assert set(members(cyclic_interval(i, j, n))) == interval_oracle(i, j, n)


# --- non-crossing ------------------------------------------------------------


def test_noncrossing_examples():
    assert not is_noncrossing(mask(1, 3), mask(2, 4), 4)
    assert is_noncrossing(mask(1, 2), mask(3, 4), 4)
    assert is_noncrossing(mask(1), mask(3), 4)
    with pytest.raises(NotDisjoint):
        is_noncrossing(mask(1, 2), mask(2, 3), 4)


def test_noncrossing_matches_quadruple_oracle():
    for n in range(1, 8):
        for labels in product((0, 1, 2), repeat=n):
            t = {i + 1 for i, x in enumerate(labels) if x == 1}
            u = {i + 1 for i, x in enumerate(labels) if x == 2}
            assert is_noncrossing(mask(*t), mask(*u), n) == (crossing_quadruple(t, u, n) is None)


def test_noncrossing_partition_counts_are_catalan():
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for n, c in enumerate(catalan):
        parts = list(noncrossing_partitions(full(n), n))
        assert len(parts) == c
        assert all(is_noncrossing_partition(p, n) for p in parts)


def test_component_partition_examples(parallel_sum, crossing_sum, u24):
    assert component_partition_check(parallel_sum) == NonCrossingPartition(4, (mask(1, 2), mask(3, 4)))
    assert component_partition_check(crossing_sum) == CrossingWitness(mask(1, 3), mask(2, 4))
    assert component_partition_check(u24) == NonCrossingPartition(4, (full(4),))


# --- the interval criterion ---------------------------------------------------


def test_is_positroid_examples(u24, parallel_sum, crossing_sum):
    for n in range(0, 6):
        for k in range(n + 1):
            assert is_positroid(uniform(k, list(range(1, n + 1)))).is_positroid
    v = is_positroid(crossing_sum)
    assert not v.is_positroid and v.certificate == mask(1, 3)
    assert is_positroid(parallel_sum)


def test_certificates_are_genuine():
    for M in ALL5:
        if M.ground != full(M.n):
            continue
        v = is_positroid(M)
        assert (v.certificate is None) == v.is_positroid
        if v.certificate is not None:
            c = v.certificate
            assert popcount(c) == M.k and c not in M.basis_set
            for iv in cyclic_intervals(M.n):
                assert popcount(c & iv) <= rank(M, iv)


def test_interval_ranks_cover_all_intervals(u24):
    r = interval_ranks(u24)
    assert len(r) == 13  # 12 proper arcs plus the whole circle
    assert r[full(4)] == 2 and r[mask(2)] == 1


def test_proper_ground_set_is_reindexed():
    M = restrict(uniform(2, [1, 2, 3, 4, 5]), mask(1, 3, 5))
    assert is_positroid(M)
    N = restrict(validate_bases(5, [[1, 2], [1, 5], [2, 3], [3, 5]]), mask(1, 2, 3, 5))
    v = is_positroid(N)
    assert not v and v.certificate & ~N.ground == 0


# --- the necklace oracle -------------------------------------------------------


def test_necklace_examples(u24):
    assert grassmann_necklace(u24) == (mask(1, 2), mask(2, 3), mask(3, 4), mask(1, 4))
    M = validate_bases(3, [[2], [3]])
    assert grassmann_necklace(M) == (mask(2), mask(2), mask(3))
    F = uniform(3, [1, 2, 3])
    assert grassmann_necklace(F) == (full(3),) * 3


def test_necklace_oracle_agrees():
    for M in ALL5:
        if M.ground == full(M.n):
            assert is_positroid(M).is_positroid == is_positroid_by_necklace(M)


# --- da Silva, circularity, indicator -------------------------------------------


def test_da_silva_examples(u24, parallel_sum, crossing_sum):
    assert da_silva_criterion(crossing_sum) == (False, (mask(1, 3), mask(2, 4)))
    assert da_silva_criterion(u24) == (True, None)
    assert da_silva_criterion(parallel_sum) == (True, None)


def test_circular_examples(parallel_sum):
    assert is_circular(uniform(3, [1, 2, 3, 4, 5]))
    assert is_circular(parallel_sum)
    M = validate_bases(4, [[1, 2], [1, 3], [2, 4], [3, 4]])  # U_{1,{1,4}} + U_{1,{2,3}}
    assert is_circular(M)


def test_indicator_examples(u24, crossing_sum):
    chi, err = indicator_chirotope(u24)
    assert err is None and chi.signs == (1,) * 6
    chi, err = indicator_chirotope(crossing_sum)
    assert chi is None and sorted(err.v) == [1, 2, 3, 4]
    chi, err = indicator_chirotope(uniform(0, [1, 2]))
    assert chi is not None and chi.signs == (1,)


def test_verdicts_agree_and_circular_implies_positive():
    for M in ALL5:
        if M.ground != full(M.n):
            continue
        pom = indicator_chirotope(M)[0] is not None
        assert pom == is_positroid(M).is_positroid == da_silva_criterion(M)[0]
        if is_circular(M):
            assert pom


def test_positroids_closed_under_minors_n4():
    for n in range(5):
        for k in range(n + 1):
            for M in enumerate_positroids(n, k):
                assert is_positroid(dual(M))
                for s in submasks(M.ground):
                    assert is_positroid(restrict(M, s)) and is_positroid(contract(M, s))


# --- counts ----------------------------------------------------------------------


def test_positroid_counts_match_decorated_permutations():
    expected = load_fixture("decorated_permutation_counts.json")["counts"]
    for n in range(0, 7):
        total = sum(1 for k in range(n + 1) for _ in enumerate_positroids(n, k))
        assert total == expected[str(n)]


def test_rank_one_positroids():
    for n in range(1, 7):
        assert len(list(enumerate_positroids(n, 1))) == 2**n - 1


def test_positroids_4_2_contents(u24, crossing_sum):
    got = list(enumerate_positroids(4, 2))
    assert u24 in got and crossing_sum not in got
