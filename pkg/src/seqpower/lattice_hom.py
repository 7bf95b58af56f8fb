"""The component lattice and the homomorphisms between cycle groups.

Components order by divisibility of their squarefree multipliers, which is
the Boolean lattice of index sets. For comparable components I <= K, the
map x -> d_K * x is a group homomorphism from the cycle group of I onto the
cycle group of K, with kernel {d_I * u : u a unit, u = 1 (mod m/g_K)} and
all fibers of size phi(g_K)/phi(g_I).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Factorization, euler_phi
from .components import DEFAULT_ELEMENT_BUDGET, du_contains, du_elements
from .errors import BudgetExceededError, IncomparableError
from .idempotents import IndexSet, all_index_sets, idempotent_for, prime_power_part

__all__ = [
    "ComponentLattice",
    "HomDescriptor",
    "lattice_of",
    "hom_apply",
    "hom_kernel",
    "hom_fibers",
    "describe_hom",
]


@dataclass(frozen=True)
class ComponentLattice:
    """Boolean lattice of the 2**r index sets, ordered by inclusion.

    Join is union (lcm of multipliers), meet is intersection (gcd of
    multipliers); bottom is the unit component, top the nilpotent one.
    """

    r: int
    nodes: tuple[IndexSet, ...]

    def leq(self, a: IndexSet, b: IndexSet) -> bool:
        return a.issubset(b)

    def join(self, a: IndexSet, b: IndexSet) -> IndexSet:
        return a | b

    def meet(self, a: IndexSet, b: IndexSet) -> IndexSet:
        return a & b

    @property
    def bottom(self) -> IndexSet:
        return IndexSet.empty(self.r)

    @property
    def top(self) -> IndexSet:
        return IndexSet.full(self.r)

    def atoms(self) -> list[IndexSet]:
        return [IndexSet(1 << i, self.r) for i in range(self.r)]

    def coatoms(self) -> list[IndexSet]:
        full = (1 << self.r) - 1
        return [IndexSet(full ^ (1 << i), self.r) for i in range(self.r)]

    def covers(self) -> list[tuple[IndexSet, IndexSet]]:
        """All covering pairs (lower, upper), the Hasse diagram edges."""
        pairs = []
        for node in self.nodes:
            for i in range(self.r):
                bit = 1 << i
                if node.bits & bit == 0:
                    pairs.append((node, IndexSet(node.bits | bit, self.r)))
        return pairs


def lattice_of(f: Factorization) -> ComponentLattice:
    """The full component lattice of Z/mZ."""
    return ComponentLattice(r=f.r, nodes=tuple(all_index_sets(f.r)))


@dataclass(frozen=True)
class HomDescriptor:
    """A homomorphism between comparable cycle groups, summarized.

    multiplier_idempotent is the idempotent of the target-minus-source
    index set; multiplying by it (equivalently by the target idempotent)
    realizes the map. fiber_size * |target cycle group| = |source cycle
    group|, and the kernel has exactly fiber_size elements.
    """

    source: IndexSet
    target: IndexSet
    multiplier_idempotent: int
    fiber_size: int
    kernel: frozenset[int]


def _require_comparable(source: IndexSet, target: IndexSet) -> None:
    if source.r != target.r:
        raise IncomparableError(f"arity mismatch: {source.r} != {target.r}")
    if not source.issubset(target):
        raise IncomparableError(
            f"source {source.indices()} is not a subset of target {target.indices()}"
        )


def hom_apply(f: Factorization, source: IndexSet, target: IndexSet, x: int) -> int:
    """Map x from the source cycle group into the target one: d_target * x.

    Multiplying by the target idempotent agrees with multiplying by the
    relative idempotent on the whole source cycle group.
    """
    _require_comparable(source, target)
    if not du_contains(f, source, x):
        raise ValueError(f"{x} is not in the cycle group of {source.indices()}")
    return idempotent_for(f, target).d * x % f.m


def hom_kernel(f: Factorization, source: IndexSet, target: IndexSet) -> set[int]:
    """Elements mapping to the target idempotent.

    Exactly {d_source * u : u a unit with u = 1 (mod m/g_target)}, of size
    phi(g_target)/phi(g_source).
    """
    _require_comparable(source, target)
    m = f.m
    d_source = idempotent_for(f, source).d
    cofactor = m // prime_power_part(f, target)
    one = 1 % cofactor
    gcd = math.gcd
    return {
        d_source * u % m
        for u in range(1, m)
        if gcd(u, m) == 1 and u % cofactor == one
    }


def hom_fibers(
    f: Factorization,
    source: IndexSet,
    target: IndexSet,
    *,
    max_elements: int = DEFAULT_ELEMENT_BUDGET,
) -> dict[int, set[int]]:
    """Preimage of every target element, keyed by image.

    The fibers partition the source cycle group and each has exactly
    phi(g_target)/phi(g_source) elements.
    """
    _require_comparable(source, target)
    source_elems = du_elements(f, source)
    if len(source_elems) > max_elements:
        raise BudgetExceededError(
            f"source cycle group has {len(source_elems)} elements,"
            f" exceeding the budget {max_elements}"
        )
    d_target = idempotent_for(f, target).d
    m = f.m
    fibers: dict[int, set[int]] = {}
    for x in source_elems:
        fibers.setdefault(d_target * x % m, set()).add(x)
    return fibers


def describe_hom(f: Factorization, source: IndexSet, target: IndexSet) -> HomDescriptor:
    """Summarize the homomorphism between two comparable components."""
    _require_comparable(source, target)
    relative = target.difference(source)
    fiber_size = euler_phi(prime_power_part(f, target)) // euler_phi(
        prime_power_part(f, source)
    )
    return HomDescriptor(
        source=source,
        target=target,
        multiplier_idempotent=idempotent_for(f, relative).d,
        fiber_size=fiber_size,
        kernel=frozenset(hom_kernel(f, source, target)),
    )
