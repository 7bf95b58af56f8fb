"""Range scans of cyclic counts, totients, idempotent counts and power images.

The scanned sums converge to known constants: the cyclic-element sum grows
like 0.4408 * N**2, the totient sum like (3/pi^2) * N**2, and the mean
idempotent count like (6/pi^2) * ln N. Image counts of squaring and cubing
are reported against their reference curves as well. Convergence is slow
for the logarithmic quantities; the reports carry raw sums so callers can
pick their own tolerances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Factorization, euler_phi
from .errors import BudgetExceededError
from .idempotents import all_index_sets, prime_power_part

__all__ = [
    "DEFAULT_IMAGE_BOUND",
    "REF_CYCLIC_SUM",
    "REF_UNIT_SUM",
    "REF_IDEMPOTENT_LOG",
    "REF_SQUARE_IMAGE",
    "REF_CUBE_IMAGE",
    "ScanReport",
    "cyclic_count",
    "power_image_count",
    "scan",
    "scan_series",
    "default_checkpoints",
]

DEFAULT_IMAGE_BOUND = 5000

REF_CYCLIC_SUM = 0.4408
REF_UNIT_SUM = 3 / math.pi**2
REF_IDEMPOTENT_LOG = 6 / math.pi**2
REF_SQUARE_IMAGE = 0.376
REF_CUBE_IMAGE = 0.484


@dataclass(frozen=True)
class ScanReport:
    """Aggregates over 2 <= m <= n.

    mean_idempotents divides the idempotent-count sum by n itself; the
    image means average over the n - 1 scanned moduli and are None when
    the scan ran without image counting.
    """

    n: int
    sum_a: int
    sum_phi: int
    mean_idempotents: float
    sq_image_mean: float | None
    cube_image_mean: float | None

    @property
    def ratio_a(self) -> float:
        return self.sum_a / self.n**2

    @property
    def ratio_phi(self) -> float:
        return self.sum_phi / self.n**2


def cyclic_count(f: Factorization) -> int:
    """Number of residues lying on cycles: the sum of phi(m/g) over all subsets."""
    return sum(
        euler_phi(f.m // prime_power_part(f, index_set))
        for index_set in all_index_sets(f.r)
    )


def power_image_count(m: int, k: int, *, max_m: int = DEFAULT_IMAGE_BOUND) -> int:
    """Size of the image of x -> x**k on Z/mZ, by direct enumeration."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    if m > max_m:
        raise BudgetExceededError(f"m = {m} exceeds the image budget {max_m}")
    return len({pow(x, k, m) for x in range(m)})


def _spf_sieve(n: int) -> list[int]:
    # smallest prime factor for every value up to n
    spf = list(range(n + 1))
    p = 2
    while p * p <= n:
        if spf[p] == p:
            for q in range(p * p, n + 1, p):
                if spf[q] == q:
                    spf[q] = p
        p += 1
    return spf


def _factor_with_spf(m: int, spf: list[int]) -> Factorization:
    factors = []
    n = m
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        factors.append((p, e))
    return Factorization(m, tuple(factors))


def default_checkpoints(n: int) -> list[int]:
    """Powers of 2 up to n, plus n itself."""
    points = []
    value = 2
    while value <= n:
        points.append(value)
        value *= 2
    if points[-1] != n:
        points.append(n)
    return points


def scan_series(
    n: int,
    *,
    checkpoints: list[int] | None = None,
    with_images: bool = True,
    image_bound: int = DEFAULT_IMAGE_BOUND,
) -> list[ScanReport]:
    """One ScanReport per checkpoint, accumulated in a single pass over m."""
    if n < 2:
        raise ValueError(f"scan bound must be >= 2, got {n}")
    if with_images and n > image_bound:
        raise BudgetExceededError(
            f"image scans up to N = {n} exceed the budget {image_bound}"
        )
    if checkpoints is None:
        checkpoints = default_checkpoints(n)
    points = sorted(set(checkpoints))
    if not points or points[0] < 2 or points[-1] > n:
        raise ValueError(f"checkpoints must lie in [2, {n}]")

    spf = _spf_sieve(n)
    sum_a = 0
    sum_phi = 0
    sum_idem = 0
    sum_sq = 0
    sum_cube = 0
    reports = []
    next_point = 0
    for m in range(2, n + 1):
        f = _factor_with_spf(m, spf)
        sum_a += cyclic_count(f)
        phi = 1
        for p, e in f.factors:
            phi *= (p - 1) * p ** (e - 1)
        sum_phi += phi
        sum_idem += 1 << f.r
        if with_images:
            sum_sq += len({x * x % m for x in range(m)})
            sum_cube += len({pow(x, 3, m) for x in range(m)})
        if next_point < len(points) and m == points[next_point]:
            scanned = m - 1
            reports.append(
                ScanReport(
                    n=m,
                    sum_a=sum_a,
                    sum_phi=sum_phi,
                    mean_idempotents=sum_idem / m,
                    sq_image_mean=sum_sq / scanned if with_images else None,
                    cube_image_mean=sum_cube / scanned if with_images else None,
                )
            )
            next_point += 1
    return reports


def scan(
    n: int,
    *,
    with_images: bool = True,
    image_bound: int = DEFAULT_IMAGE_BOUND,
) -> ScanReport:
    """Aggregate over 2 <= m <= n."""
    return scan_series(
        n, checkpoints=[n], with_images=with_images, image_bound=image_bound
    )[-1]
