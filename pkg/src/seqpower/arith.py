"""Exact integer and modular arithmetic primitives.

Everything here is plain ``int`` arithmetic; Python integers are unbounded,
so sums that grow past m**2/2 stay exact with no special handling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotInvertibleError

__all__ = [
    "Factorization",
    "factorize",
    "euler_phi",
    "mod_pow",
    "mod_inv",
    "divisors",
    "beta",
]


@dataclass(frozen=True)
class Factorization:
    """A modulus m >= 2 with its prime-power decomposition.

    ``factors`` is strictly increasing in the prime and every exponent is
    at least 1; the product of the prime powers reconstructs m exactly.
    Prime indices used throughout the package are 1-based: index i refers
    to ``factors[i - 1]``.
    """

    m: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        if not self.factors:
            raise ValueError("factor list must not be empty")
        product = 1
        last_p = 0
        for p, e in self.factors:
            if p <= last_p:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            last_p = p
            product *= p**e
        if product != self.m:
            raise ValueError(f"factors multiply to {product}, not {self.m}")

    @property
    def r(self) -> int:
        """Number of distinct primes."""
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def prime(self, i: int) -> int:
        """The i-th prime, 1-based."""
        return self.factors[i - 1][0]

    def exponent(self, i: int) -> int:
        """The exponent of the i-th prime, 1-based."""
        return self.factors[i - 1][1]


def factorize(m: int) -> Factorization:
    """Prime-power decomposition of m >= 2 by trial division."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    factors = []
    n = m
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        factors.append((2, e))
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(m, tuple(factors))


def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1."""
    if n < 1:
        raise ValueError(f"totient argument must be >= 1, got {n}")
    result = n
    if n % 2 == 0:
        result //= 2
        while n % 2 == 0:
            n //= 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 2
    if n > 1:
        result -= result // n
    return result


def mod_pow(base: int, exp: int, m: int) -> int:
    """base**exp mod m with exact arbitrary-precision intermediates."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not 0 <= base < m:
        raise ValueError(f"base {base} out of range for modulus {m}")
    if exp < 0:
        raise ValueError(f"exponent must be >= 0, got {exp}")
    return pow(base, exp, m)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a*x + b*y = g
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inv(a: int, m: int) -> int:
    """Inverse of a modulo m; raises NotInvertibleError unless gcd(a, m) = 1."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not 0 <= a < m:
        raise ValueError(f"residue {a} out of range for modulus {m}")
    g, x, _ = _xgcd(a, m)
    if g != 1:
        raise NotInvertibleError(a, m, g)
    return x % m


def divisors(n: int) -> list[int]:
    """All divisors of n >= 1, in increasing order."""
    if n < 1:
        raise ValueError(f"divisors argument must be >= 1, got {n}")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def _divisor_omega_pairs(factors: tuple[tuple[int, int], ...]) -> list[tuple[int, int]]:
    # (divisor, number of prime factors with multiplicity) for every divisor
    pairs = [(1, 0)]
    for p, e in factors:
        pairs = [(d * p**k, om + k) for d, om in pairs for k in range(e + 1)]
    return pairs


def beta(n: int) -> int:
    """Liouville-alternating divisor sum: sum of d * lambda(n/d) over d | n.

    lambda(k) = (-1)**Omega(k) with Omega counting prime factors with
    multiplicity. For squarefree n this equals euler_phi(n); in general it
    is an upper bound for it.
    """
    if n < 1:
        raise ValueError(f"beta argument must be >= 1, got {n}")
    if n == 1:
        return 1
    factors = factorize(n).factors
    big_omega = sum(e for _, e in factors)
    total = 0
    for d, om in _divisor_omega_pairs(factors):
        total += d if (big_omega - om) % 2 == 0 else -d
    return total
