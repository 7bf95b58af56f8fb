"""Analytic component structure: elements, cycle group, tails, and sums.

Everything in this module is computed from the factorization alone. The
component of index set I consists of the residues whose prime support
within m is exactly the primes of I; its cyclic part is the coset g*x
(gcd(x, m/g) = 1), a group with the component's idempotent as identity,
and everything else is a tail. Element sums have exact closed forms,
double-checked here by a raw inclusion-exclusion evaluator, and group
isomorphisms are witnessed executably through order profiles.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .arith import Factorization, divisors, euler_phi
from .errors import BudgetExceededError, ClosureError
from .idempotents import (
    IdempotentRecord,
    IndexSet,
    idempotent_for,
    index_set_of,
    multiplier,
    prime_power_part,
)

__all__ = [
    "DEFAULT_ELEMENT_BUDGET",
    "ComponentDescriptor",
    "InclusionExclusionTerm",
    "TailLayer",
    "describe_component",
    "component_size",
    "component_elements",
    "du_elements",
    "du_contains",
    "is_tail",
    "tail_elements",
    "tail_partition",
    "tail_count",
    "verify_phi_identity",
    "analytic_tail_length",
    "tail_layers",
    "first_layer_powers",
    "component_sum",
    "du_sum",
    "tail_sum",
    "inclusion_exclusion_terms",
    "sum_by_inclusion_exclusion",
    "cyclic_unit_group_orders",
    "predicted_group_structure",
    "order_profile",
    "cyclic_group_profile",
    "profile_product",
    "predicted_du_profile",
]

DEFAULT_ELEMENT_BUDGET = 10**5


@dataclass(frozen=True)
class ComponentDescriptor:
    """All counted and summed facts about one component.

    size = cycle_size + tail_count always; tail_count is 0 exactly when g
    is squarefree; element_sum = tail_sum + the cycle-group sum.
    max_tail_length is the longest tail length occurring in the component
    (one less than the largest exponent over the index set, 0 for units).
    """

    idem: IdempotentRecord
    size: int
    cycle_size: int
    tail_count: int
    element_sum: int
    tail_sum: int
    max_tail_length: int

    @property
    def index_set(self) -> IndexSet:
        return self.idem.index_set


@dataclass(frozen=True)
class InclusionExclusionTerm:
    """One superset term of the component-sum inclusion-exclusion.

    extra_primes counts the primes of the superset's multiplier beyond the
    base multiplier; cofactor is m divided by the superset's multiplier.
    """

    subset: IndexSet
    extra_primes: int
    pi: int
    cofactor: int

    @property
    def value(self) -> int:
        sign = -1 if self.extra_primes % 2 else 1
        return sign * self.pi * math.comb(self.cofactor, 2)


@dataclass(frozen=True)
class TailLayer:
    """Tails with an exact multiplier valuation: pi**i | t, pi**(i+1) does not.

    predicted_length is ceil(e/i) - 1 with e the largest exponent over the
    index set: an upper bound on every member's tail length, attained for
    every member whenever the exponents over the index set are all equal.
    """

    index: int
    elements: frozenset[int]
    predicted_length: int


def component_size(f: Factorization, index_set: IndexSet) -> int:
    """Number of elements: phi(m) / phi(pi)."""
    return euler_phi(f.m) // euler_phi(multiplier(f, index_set))


def _check_element_budget(count: int, max_elements: int, what: str) -> None:
    if count > max_elements:
        raise BudgetExceededError(
            f"{what} has {count} elements, exceeding the budget {max_elements}"
        )


def component_elements(
    f: Factorization,
    index_set: IndexSet,
    *,
    max_elements: int = DEFAULT_ELEMENT_BUDGET,
) -> set[int]:
    """All residues whose prime support within m is exactly the index set.

    Enumerated as {pi * x mod m : gcd(x, m/g) = 1}; the count is
    phi(m)/phi(pi) and is checked against the budget before enumerating.
    """
    _check_element_budget(component_size(f, index_set), max_elements, "component")
    m = f.m
    pi = multiplier(f, index_set)
    cofactor = m // prime_power_part(f, index_set)
    gcd = math.gcd
    return {pi * x % m for x in range(m // pi) if gcd(x, cofactor) == 1}


def du_elements(f: Factorization, index_set: IndexSet) -> set[int]:
    """The cycle group of the component: {g * x mod m : gcd(x, m/g) = 1}.

    A multiplicative group of size phi(m/g) whose identity is the
    component's idempotent.
    """
    m = f.m
    g = prime_power_part(f, index_set)
    cofactor = m // g
    gcd = math.gcd
    return {g * x % m for x in range(cofactor) if gcd(x, cofactor) == 1}


def du_contains(f: Factorization, index_set: IndexSet, v: int) -> bool:
    """Membership in the cycle group without enumerating it."""
    if not 0 <= v < f.m:
        return False
    g = prime_power_part(f, index_set)
    if v % g != 0:
        return False
    return math.gcd(v // g, f.m // g) == 1


def is_tail(f: Factorization, v: int) -> bool:
    """Whether v is a tail vertex: g of v's own component does not divide v."""
    index_set = index_set_of(f, v)
    return v % prime_power_part(f, index_set) != 0


def tail_elements(
    f: Factorization,
    index_set: IndexSet,
    *,
    max_elements: int = DEFAULT_ELEMENT_BUDGET,
) -> set[int]:
    """The tails of one component: its elements not divisible by g."""
    g = prime_power_part(f, index_set)
    elements = component_elements(f, index_set, max_elements=max_elements)
    return {v for v in elements if v % g != 0}


def tail_partition(
    f: Factorization,
    index_set: IndexSet,
    *,
    max_elements: int = DEFAULT_ELEMENT_BUDGET,
) -> dict[int, set[int]]:
    """Partition of the tails into unit-multiple classes.

    Keys are the proper divisors y of g/pi; the class of y is
    {y * pi * x mod m : gcd(x, m/(y*pi)) = 1}, of size phi(m/(y*pi)).
    Empty exactly when g is squarefree.
    """
    _check_element_budget(tail_count(f, index_set), max_elements, "tail set")
    m = f.m
    pi = multiplier(f, index_set)
    g = prime_power_part(f, index_set)
    gcd = math.gcd
    out: dict[int, set[int]] = {}
    for y in divisors(g // pi)[:-1]:
        step = y * pi
        cofactor = m // step
        out[y] = {step * x % m for x in range(cofactor) if gcd(x, cofactor) == 1}
    return out


def tail_count(f: Factorization, index_set: IndexSet) -> int:
    """Closed-form tail count: sum of phi(m/(y*pi)) over proper divisors y of g/pi."""
    m = f.m
    pi = multiplier(f, index_set)
    g = prime_power_part(f, index_set)
    return sum(euler_phi(m // (y * pi)) for y in divisors(g // pi)[:-1])


def verify_phi_identity(f: Factorization, index_set: IndexSet) -> tuple[int, int]:
    """Both sides of phi(m)/phi(pi) = sum over y | g/pi of phi(m/(y*pi)).

    Computed independently; they agree because the cycle group and the
    tail classes partition the component.
    """
    m = f.m
    pi = multiplier(f, index_set)
    g = prime_power_part(f, index_set)
    lhs = euler_phi(m) // euler_phi(pi)
    rhs = sum(euler_phi(m // (y * pi)) for y in divisors(g // pi))
    return lhs, rhs


def _valuation(v: int, p: int) -> int:
    count = 0
    while v % p == 0:
        v //= p
        count += 1
    return count


def analytic_tail_length(f: Factorization, v: int) -> int:
    """Exact tail length of v's orbit, from exponent bookkeeping alone.

    0 for cyclic v. Otherwise one less than the smallest k with g | v**k,
    which is the maximum over the supporting primes p of
    ceil(e_p / valuation_p(v)).
    """
    index_set = index_set_of(f, v)
    g = prime_power_part(f, index_set)
    if v % g == 0:
        return 0
    k = 1
    for i in index_set:
        p, e = f.factors[i - 1]
        k = max(k, -(-e // _valuation(v, p)))
    return k - 1


def _max_exponent(f: Factorization, index_set: IndexSet) -> int:
    return max(f.exponent(i) for i in index_set)


def tail_layers(
    f: Factorization,
    index_set: IndexSet,
    *,
    max_elements: int = DEFAULT_ELEMENT_BUDGET,
) -> list[TailLayer]:
    """Layers T_1 .. T_(e-1) of the tails by exact multiplier valuation."""
    if index_set.is_empty():
        raise ValueError("the unit component has no tail layers")
    m = f.m
    pi = multiplier(f, index_set)
    e = _max_exponent(f, index_set)
    tails = tail_elements(f, index_set, max_elements=max_elements)
    layers = []
    for i in range(1, e):
        step = pi**i
        members = frozenset(
            t for t in tails if t % step == 0 and (t // step) % pi != 0
        )
        layers.append(TailLayer(index=i, elements=members, predicted_length=-(-e // i) - 1))
    return layers


def first_layer_powers(
    f: Factorization,
    index_set: IndexSet,
    k: int,
    *,
    max_elements: int = DEFAULT_ELEMENT_BUDGET,
) -> set[int]:
    """k-th powers of the first tail layer, for the layer-inclusion check."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    layers = tail_layers(f, index_set, max_elements=max_elements)
    if not layers:
        return set()
    return {pow(t, k, f.m) for t in layers[0].elements}


def component_sum(f: Factorization, index_set: IndexSet) -> int:
    """Exact integer sum of the component's residues, in closed form.

    m**2/2 * phi(pi_dual)/pi_all for a proper index set; the full set
    needs an extra -m/2 because the alternating binomial sum behind the
    closed form no longer vanishes there.
    """
    m = f.m
    pi_all = multiplier(f, IndexSet.full(f.r))
    if index_set.is_full():
        return m * (m // pi_all - 1) // 2
    pi_dual = multiplier(f, index_set.complement())
    return m * m * euler_phi(pi_dual) // (2 * pi_all)


def du_sum(f: Factorization, index_set: IndexSet) -> int:
    """Sum of the cycle group as integers: m * phi(m/g) / 2, or 0 for {0}."""
    if index_set.is_full():
        return 0
    return f.m * euler_phi(f.m // prime_power_part(f, index_set)) // 2


def tail_sum(f: Factorization, index_set: IndexSet) -> int:
    """Sum of the tails as integers: component sum minus cycle-group sum."""
    return component_sum(f, index_set) - du_sum(f, index_set)


def inclusion_exclusion_terms(
    f: Factorization, index_set: IndexSet
) -> list[InclusionExclusionTerm]:
    """One term per superset of the index set, ascending by bitmask."""
    base_bits = index_set.bits
    rest = ((1 << f.r) - 1) & ~base_bits
    terms = []
    sub = 0
    while True:  # submask walk over the complement, ascending
        superset = IndexSet(base_bits | sub, f.r)
        pi = multiplier(f, superset)
        terms.append(
            InclusionExclusionTerm(
                subset=superset,
                extra_primes=len(superset) - len(index_set),
                pi=pi,
                cofactor=f.m // pi,
            )
        )
        if sub == rest:
            break
        sub = (sub - rest) & rest
    return terms


def sum_by_inclusion_exclusion(f: Factorization, index_set: IndexSet) -> int:
    """Independent evaluation of the component sum by inclusion-exclusion.

    Sums (-1)**extra * pi_J * C(m/pi_J, 2) over all supersets J; agrees
    with component_sum for every index set, including the full one.
    """
    return sum(term.value for term in inclusion_exclusion_terms(f, index_set))


def cyclic_unit_group_orders(prime_powers: Iterable[tuple[int, int]]) -> list[int]:
    """Cyclic factor orders of the unit group of a product of prime powers.

    Odd prime powers contribute one cyclic factor of order phi(p**e); the
    power of 2 contributes nothing for e = 1, one factor of order 2 for
    e = 2, and factors of orders 2 and 2**(e-2) for e > 2.
    """
    orders = []
    for p, e in prime_powers:
        if p == 2:
            if e == 2:
                orders.append(2)
            elif e > 2:
                orders.extend([2, 1 << (e - 2)])
        else:
            orders.append((p - 1) * p ** (e - 1))
    return orders


def predicted_group_structure(f: Factorization, index_set: IndexSet) -> list[int]:
    """Cyclic factor orders of the component's cycle group.

    The cycle group is isomorphic to the units mod m/g, i.e. the product
    of the unit groups of the prime powers outside the index set.
    """
    remaining = [f.factors[i - 1] for i in index_set.complement()]
    return cyclic_unit_group_orders(remaining)


def order_profile(
    elements: Iterable[int],
    identity: int,
    m: int,
    *,
    check_closure: bool = True,
) -> Counter:
    """Multiset of multiplicative orders of the elements relative to identity.

    A complete isomorphism invariant for finite abelian groups: two are
    isomorphic iff their profiles agree, which makes profile equality the
    executable form of the isomorphism statements in this package.
    """
    elems = set(elements)
    if identity not in elems:
        raise ClosureError(f"identity {identity} is not among the elements")
    if check_closure:
        for x in elems:
            for y in elems:
                if x * y % m not in elems:
                    raise ClosureError(
                        f"{x} * {y} mod {m} leaves the element set"
                    )
    bound = len(elems)
    profile: Counter = Counter()
    for x in elems:
        y = x
        order = 1
        while y != identity:
            y = y * x % m
            order += 1
            if order > bound or y not in elems:
                raise ClosureError(f"powers of {x} leave the element set")
        profile[order] += 1
    return profile


def cyclic_group_profile(order: int) -> Counter:
    """Order profile of a cyclic group: phi(d) elements of order d per d | order."""
    return Counter({d: euler_phi(d) for d in divisors(order)})


def profile_product(a: Counter, b: Counter) -> Counter:
    """Order profile of a direct product, by lcm convolution of profiles."""
    out: Counter = Counter()
    for da, ca in a.items():
        for db, cb in b.items():
            out[math.lcm(da, db)] += ca * cb
    return out


def predicted_du_profile(f: Factorization, index_set: IndexSet) -> Counter:
    """Order profile the cycle group must have per its predicted structure."""
    profile = Counter({1: 1})
    for order in predicted_group_structure(f, index_set):
        profile = profile_product(profile, cyclic_group_profile(order))
    return profile


def describe_component(f: Factorization, index_set: IndexSet) -> ComponentDescriptor:
    """Assemble every counted and summed fact about one component."""
    idem = idempotent_for(f, index_set)
    size = component_size(f, index_set)
    cycle_size = euler_phi(f.m // idem.g)
    max_tail = 0 if index_set.is_empty() else _max_exponent(f, index_set) - 1
    return ComponentDescriptor(
        idem=idem,
        size=size,
        cycle_size=cycle_size,
        tail_count=tail_count(f, index_set),
        element_sum=component_sum(f, index_set),
        tail_sum=tail_sum(f, index_set),
        max_tail_length=max_tail,
    )
