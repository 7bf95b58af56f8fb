"""Idempotent residues of Z/mZ and their subset bookkeeping.

Each subset I of the prime indices of m determines one idempotent d:
the unique residue with d = 0 (mod g) and d = 1 (mod m/g), where g is the
product of the full prime powers indexed by I. The 2**r idempotents form
a monoid under multiplication, and the subset-of-primes map classifies
every residue into the component it eventually cycles in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import Factorization, mod_inv
from .errors import NotIdempotentError

__all__ = [
    "IndexSet",
    "IdempotentRecord",
    "all_index_sets",
    "multiplier",
    "prime_power_part",
    "idempotent_for",
    "all_idempotents",
    "is_idempotent",
    "idempotent_product",
    "index_set_of",
]


@dataclass(frozen=True)
class IndexSet:
    """A subset of the prime indices {1, ..., r}, stored as a bitmask.

    Two IndexSets are equal iff both the bitmask and the arity r agree;
    set operations require matching arity.
    """

    bits: int
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"arity must be >= 1, got {self.r}")
        if not 0 <= self.bits < (1 << self.r):
            raise ValueError(f"bitmask {self.bits} out of range for r = {self.r}")

    @classmethod
    def empty(cls, r: int) -> "IndexSet":
        return cls(0, r)

    @classmethod
    def full(cls, r: int) -> "IndexSet":
        return cls((1 << r) - 1, r)

    @classmethod
    def from_indices(cls, indices, r: int) -> "IndexSet":
        """Build from 1-based prime indices."""
        bits = 0
        for i in indices:
            if not 1 <= i <= r:
                raise ValueError(f"index {i} out of range for r = {r}")
            bits |= 1 << (i - 1)
        return cls(bits, r)

    def indices(self) -> tuple[int, ...]:
        """The member indices, 1-based and ascending."""
        return tuple(i for i in range(1, self.r + 1) if self.bits >> (i - 1) & 1)

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.r and bool(self.bits >> (i - 1) & 1)

    def __iter__(self):
        return iter(self.indices())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def _same_arity(self, other: "IndexSet") -> None:
        if self.r != other.r:
            raise ValueError(f"arity mismatch: {self.r} != {other.r}")

    def __or__(self, other: "IndexSet") -> "IndexSet":
        self._same_arity(other)
        return IndexSet(self.bits | other.bits, self.r)

    def __and__(self, other: "IndexSet") -> "IndexSet":
        self._same_arity(other)
        return IndexSet(self.bits & other.bits, self.r)

    def difference(self, other: "IndexSet") -> "IndexSet":
        self._same_arity(other)
        return IndexSet(self.bits & ~other.bits, self.r)

    def complement(self) -> "IndexSet":
        return IndexSet(self.bits ^ ((1 << self.r) - 1), self.r)

    def issubset(self, other: "IndexSet") -> bool:
        self._same_arity(other)
        return self.bits & ~other.bits == 0

    def is_empty(self) -> bool:
        return self.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.r) - 1


def all_index_sets(r: int) -> list[IndexSet]:
    """All 2**r subsets, in ascending bitmask order."""
    return [IndexSet(bits, r) for bits in range(1 << r)]


@dataclass(frozen=True)
class IdempotentRecord:
    """One idempotent d together with the quantities that define it.

    g = gcd(d, m) is the product of the full prime powers indexed by the
    subset, pi the squarefree product of the same primes, and a the least
    non-negative representative of the inverse of g mod m/g (0 when the
    subset is full, so that d = 0).
    """

    index_set: IndexSet
    g: int
    a: int
    d: int
    pi: int


def _check_arity(f: Factorization, index_set: IndexSet) -> None:
    if index_set.r != f.r:
        raise ValueError(
            f"index set arity {index_set.r} does not match factorization r = {f.r}"
        )


def multiplier(f: Factorization, index_set: IndexSet) -> int:
    """Squarefree product of the primes indexed by the subset (1 for empty)."""
    _check_arity(f, index_set)
    out = 1
    for i in index_set:
        out *= f.prime(i)
    return out


def prime_power_part(f: Factorization, index_set: IndexSet) -> int:
    """Product of the full prime powers of m indexed by the subset."""
    _check_arity(f, index_set)
    out = 1
    for i in index_set:
        p, e = f.factors[i - 1]
        out *= p**e
    return out


def idempotent_for(f: Factorization, index_set: IndexSet) -> IdempotentRecord:
    """The unique idempotent whose prime support within m is the given subset."""
    g = prime_power_part(f, index_set)
    pi = multiplier(f, index_set)
    cofactor = f.m // g
    a = 0 if cofactor == 1 else mod_inv(g % cofactor, cofactor)
    d = a * g % f.m
    return IdempotentRecord(index_set=index_set, g=g, a=a, d=d, pi=pi)


def all_idempotents(f: Factorization) -> list[IdempotentRecord]:
    """All 2**r idempotent records, in ascending subset-bitmask order."""
    return [idempotent_for(f, index_set) for index_set in all_index_sets(f.r)]


def is_idempotent(m: int, v: int) -> bool:
    """Whether v * v = v (mod m)."""
    if not 0 <= v < m:
        raise ValueError(f"residue {v} out of range for modulus {m}")
    return v * v % m == v


def idempotent_product(f: Factorization, d1: int, d2: int) -> int:
    """Product of two idempotents; lands on the idempotent of the union subset."""
    for d in (d1, d2):
        if not is_idempotent(f.m, d):
            raise NotIdempotentError(f"{d} is not idempotent mod {f.m}")
    return d1 * d2 % f.m


def index_set_of(f: Factorization, v: int) -> IndexSet:
    """The subset of primes of m dividing v; v = 0 maps to the full set.

    This is the component membership map: v belongs to the component of
    the idempotent with this index set.
    """
    if not 0 <= v < f.m:
        raise ValueError(f"residue {v} out of range for modulus {f.m}")
    bits = 0
    for i, (p, _) in enumerate(f.factors):
        if v % p == 0:
            bits |= 1 << i
    return IndexSet(bits, f.r)
