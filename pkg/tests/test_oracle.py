from math import comb, gcd

import pytest

from src.combinatorics.counting import count_anderson, count_corners, count_main, count_sc_fms, count_sc_main
from src.combinatorics.oracle import (
    corner_histogram,
    count_oracle,
    enumerate_cores,
    enumerate_cores_naive,
    enumerate_paths_exhaustive,
    enumerate_sc_cores,
    residue_vector,
)
from src.models.errors import NotACoreError, OracleCapExceeded, ParameterError
from src.models.lattice_path import PathKind
from src.models.partition import Partition, ResidueVector
from src.utils.config import get_settings

THREE_FIVE_SEVEN = [Partition(), Partition.of(1), Partition.of(1, 1), Partition.of(2),
                    Partition.of(2, 1, 1), Partition.of(3, 1)]

GRID = [(s, d, p) for s in range(1, 8) for d in range(1, 5) for p in range(2, 5) if gcd(s, d) == 1]


@pytest.fixture
def small_caps(monkeypatch):
    monkeypatch.setenv("CORE_MOTZKIN_MAX_PATH_LENGTH", "6")
    monkeypatch.setenv("CORE_MOTZKIN_MAX_CORE_MODULUS", "5")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_three_five_seven():
    assert enumerate_cores([3, 5, 7]) == THREE_FIVE_SEVEN


def test_trivial_families():
    assert enumerate_cores([1, 7]) == [Partition()]
    assert enumerate_cores([1]) == [Partition()]
    assert enumerate_sc_cores([1, 2]) == [Partition()]
    assert len(enumerate_cores([4, 5, 6])) == 9


def test_self_conjugate_cores():
    assert enumerate_sc_cores([3, 4, 5]) == [Partition(), Partition.of(1)]
    for s in range(1, 9):
        assert len(enumerate_sc_cores([s, s + 1])) == comb(s, s // 2)


@pytest.mark.parametrize("ts", [[], [4, 3], [3, 3], [4, 6], [0, 3], [5]])
def test_bad_moduli(ts):
    with pytest.raises(ParameterError):
        enumerate_cores(ts)


def test_residue_search_matches_naive_scan():
    for ts in ([3, 4], [3, 5, 7], [4, 5, 6], [2, 5], [3, 7, 11]):
        assert enumerate_cores(ts) == enumerate_cores_naive(ts, 20)


@pytest.mark.parametrize("s,d,p", GRID)
def test_residue_search_agrees_with_naive_scan_on_grid(s, d, p):
    moduli = [s + i * d for i in range(p + 1)]
    small = [core for core in enumerate_cores(moduli) if core.size <= 20]
    assert small == enumerate_cores_naive(moduli, 20)


def test_worker_pool_matches_sequential():
    assert enumerate_cores([5, 7, 9], workers=2) == enumerate_cores([5, 7, 9], workers=1)


def test_bound_saturation():
    cores = enumerate_cores([4, 7])
    assert enumerate_cores([4, 7], bound=4 * 7 * 2) == cores
    assert len(cores) == count_anderson(4, 7)


@pytest.mark.parametrize("s,d,p", GRID)
def test_bound_saturation_on_grid(s, d, p):
    moduli = [s + i * d for i in range(p + 1)]
    assert enumerate_cores(moduli, bound=moduli[0] * moduli[1] + moduli[0]) == enumerate_cores(moduli)


@pytest.mark.parametrize("s,d", [(s, d) for s in range(1, 8) for d in range(1, 5) if gcd(s, d) == 1])
def test_oracle_matches_main_formula(s, d):
    for p in range(2, 5):
        moduli = [s + i * d for i in range(p + 1)]
        assert count_oracle(moduli) == count_main(s, d, p)


def test_oracle_matches_anderson():
    for s in range(1, 9):
        for t in range(s + 1, 10):
            if gcd(s, t) == 1:
                assert count_oracle([s, t]) == count_anderson(s, t)


def test_self_conjugate_oracle():
    for s in range(1, 9):
        for t in range(s + 1, 10):
            if gcd(s, t) == 1:
                assert count_oracle([s, t], self_conjugate=True) == count_sc_fms(s, t)
    for s in range(1, 10):
        for p in range(2, 5):
            assert count_oracle(list(range(s, s + p + 1)), self_conjugate=True) == count_sc_main(s, p)


def test_residue_vector():
    assert residue_vector(Partition.of(2, 1, 1), 3).counts == (2, 1)
    assert residue_vector(Partition(), 4).counts == (0, 0, 0)
    assert ResidueVector(s=3, counts=(2, 1)).to_beta_set().elements == frozenset({1, 4, 2})
    with pytest.raises(NotACoreError):
        residue_vector(Partition.of(3), 3)


def test_corner_histogram():
    assert corner_histogram([4, 5]) == {0: 1, 1: 6, 2: 6, 3: 1}
    for s in range(1, 9):
        for p in (2, 3, 4):
            histogram = corner_histogram(list(range(s, s + p + 1)))
            assert histogram == {k: count_corners(s, p, k) for k in range(s // 2 + 1) if count_corners(s, p, k)}


def test_exhaustive_paths():
    assert enumerate_paths_exhaustive(PathKind.RATIONAL_MOTZKIN, s=3, d=2) == \
        ["UFDDD", "UDFDD", "UDDFD", "FUDDD", "FFFDD", "FFDFD"]
    assert enumerate_paths_exhaustive(PathKind.MOTZKIN, length=0) == [""]
    assert enumerate_paths_exhaustive(PathKind.DYCK, order=2) == ["UUDD", "UDUD"]
    assert enumerate_paths_exhaustive(PathKind.SYMMETRIC_MOTZKIN, length=3) == ["UFD", "FFF"]
    assert len(enumerate_paths_exhaustive(PathKind.SYMMETRIC_DYCK, order=4)) == 6
    assert enumerate_paths_exhaustive(PathKind.SYMMETRIC_GEN_DYCK, s=3, p=3) == \
        [("U3", "D3"), ("F1", "F1", "F1")]
    assert len(enumerate_paths_exhaustive(PathKind.FREE, s=3, d=2)) == 30
    with pytest.raises(ParameterError):
        enumerate_paths_exhaustive(PathKind.MOTZKIN, length=4, p=1)


def test_caps(small_caps):
    with pytest.raises(OracleCapExceeded):
        enumerate_paths_exhaustive(PathKind.MOTZKIN, length=7)
    with pytest.raises(OracleCapExceeded):
        enumerate_paths_exhaustive(PathKind.RATIONAL_MOTZKIN, s=5, d=2)
    with pytest.raises(OracleCapExceeded):
        enumerate_cores([7, 8])
    assert len(enumerate_paths_exhaustive(PathKind.MOTZKIN, length=6)) == 51
