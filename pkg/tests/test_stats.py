"""Tests for the range scans and their brute-force counterparts."""

import math

import pytest

from seqpower.arith import factorize
from seqpower.components import tail_count
from seqpower.errors import BudgetExceededError
from seqpower.graph_oracle import oracle_noncycle_count
from seqpower.idempotents import all_index_sets
from seqpower.stats import (
    ScanReport,
    cyclic_count,
    default_checkpoints,
    power_image_count,
    scan,
    scan_series,
)


def test_cyclic_count_fixtures():
    assert cyclic_count(factorize(36)) == 21  # 12 + 6 + 2 + 1
    assert cyclic_count(factorize(4)) == 3
    for m in (2, 3, 30, 105, 210):  # squarefree: every residue is cyclic
        assert cyclic_count(factorize(m)) == m


def test_cyclic_count_plus_tails_is_m():
    for m in range(2, 2001):
        f = factorize(m)
        tails = sum(tail_count(f, s) for s in all_index_sets(f.r))
        assert cyclic_count(f) + tails == m


def test_cyclic_count_matches_oracle():
    for m in range(2, 301):
        assert cyclic_count(factorize(m)) == m - oracle_noncycle_count(m)


def test_power_image_count_fixtures():
    # squares mod 36 are {0, 1, 4, 9, 13, 16, 25, 28}
    assert power_image_count(36, 2) == 8
    assert power_image_count(8, 2) == 3  # {0, 1, 4}
    for m in (2, 9, 17, 100):
        assert power_image_count(m, 1) == m


def test_power_image_count_matches_enumeration():
    for m in range(2, 120):
        for k in (1, 2, 3, 5):
            assert power_image_count(m, k) == len({pow(x, k, m) for x in range(m)})


def test_power_image_count_budget():
    with pytest.raises(BudgetExceededError):
        power_image_count(10**6, 2, max_m=1000)


def test_scan_tiny():
    rep = scan(2)
    assert rep.n == 2
    assert rep.sum_a == 2  # both residues of Z/2Z are cyclic
    assert rep.sum_phi == 1
    assert rep.mean_idempotents == 1.0


def test_scan_matches_brute_force():
    n = 200
    sum_a = 0
    sum_phi = 0
    sum_idem = 0
    sum_sq = 0
    sum_cube = 0
    for m in range(2, n + 1):
        sum_a += m - oracle_noncycle_count(m)
        sum_phi += sum(1 for v in range(m) if math.gcd(v, m) == 1)
        sum_idem += sum(1 for v in range(m) if v * v % m == v)
        sum_sq += len({v * v % m for v in range(m)})
        sum_cube += len({pow(v, 3, m) for v in range(m)})
    rep = scan(n)
    assert rep.sum_a == sum_a
    assert rep.sum_phi == sum_phi
    assert rep.mean_idempotents == sum_idem / n
    assert rep.sq_image_mean == sum_sq / (n - 1)
    assert rep.cube_image_mean == sum_cube / (n - 1)
    assert rep.ratio_a == sum_a / n**2
    assert rep.ratio_phi == sum_phi / n**2


def test_scan_pinned_at_2000():
    # exact values frozen from the sieve-backed scan itself, cross-checked
    # against the brute-force oracle on the prefix in the test above
    rep = scan(2000, with_images=False)
    assert rep.sum_a == 1763369
    assert rep.sum_phi == 1216587
    assert rep.mean_idempotents == 10810 / 2000


def test_scan_without_images():
    rep = scan(500, with_images=False)
    assert rep.sq_image_mean is None
    assert rep.cube_image_mean is None
    assert rep.sum_a == scan(500).sum_a


def test_scan_image_budget():
    with pytest.raises(BudgetExceededError):
        scan(2000, image_bound=100)
    # without images there is no budget to exceed
    assert scan(2000, with_images=False, image_bound=100).n == 2000


def test_scan_validates():
    with pytest.raises(ValueError):
        scan(1)
    with pytest.raises(ValueError):
        scan_series(100, checkpoints=[150])


def test_default_checkpoints():
    assert default_checkpoints(2) == [2]
    assert default_checkpoints(16) == [2, 4, 8, 16]
    assert default_checkpoints(20) == [2, 4, 8, 16, 20]


def test_scan_series_checkpoints():
    reports = scan_series(64)
    assert [rep.n for rep in reports] == [2, 4, 8, 16, 32, 64]
    assert all(isinstance(rep, ScanReport) for rep in reports)
    # the final checkpoint equals a direct scan
    assert reports[-1] == scan(64)
    # sums are nondecreasing along checkpoints
    for first, second in zip(reports, reports[1:]):
        assert first.sum_a <= second.sum_a
        assert first.sum_phi <= second.sum_phi
