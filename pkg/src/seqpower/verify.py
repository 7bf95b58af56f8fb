"""Cross-checks of every analytic result against the brute-force oracles.

check_modulus runs, for one modulus: partition equality against the graph
oracle, per-vertex tail classification and tail length against the orbit
oracle, uniqueness of idempotent and multiplier per component, every sum
against direct summation and the inclusion-exclusion referee, the totient
identity, homomorphism fiber sizes, kernels and images, and the
order-profile isomorphism evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import euler_phi, factorize
from .components import (
    component_elements,
    cyclic_unit_group_orders,
    cyclic_group_profile,
    du_elements,
    du_sum,
    component_sum,
    is_tail,
    analytic_tail_length,
    order_profile,
    predicted_du_profile,
    profile_product,
    sum_by_inclusion_exclusion,
    tail_count,
    tail_sum,
    verify_phi_identity,
)
from .graph_oracle import DEFAULT_ORACLE_BOUND, build_graph
from .idempotents import (
    IndexSet,
    all_index_sets,
    idempotent_for,
    index_set_of,
    multiplier,
    prime_power_part,
)
from .lattice_hom import hom_fibers, hom_kernel
from .orbits import orbit

__all__ = ["CheckFailure", "ModulusReport", "RangeReport", "check_modulus", "verify_range"]


@dataclass(frozen=True)
class CheckFailure:
    m: int
    check: str
    expected: str
    actual: str


@dataclass(frozen=True)
class ModulusReport:
    m: int
    components: int
    checks: int
    failure: CheckFailure | None

    @property
    def ok(self) -> bool:
        return self.failure is None


@dataclass(frozen=True)
class RangeReport:
    lo: int
    hi: int
    moduli: int
    components: int
    checks: int
    failure: CheckFailure | None

    @property
    def ok(self) -> bool:
        return self.failure is None


class _Recorder:
    """Counts checks and remembers the first failure."""

    def __init__(self, m: int):
        self.m = m
        self.checks = 0
        self.failure: CheckFailure | None = None

    def expect(self, check: str, expected, actual) -> bool:
        self.checks += 1
        if self.failure is None and expected != actual:
            self.failure = CheckFailure(
                m=self.m, check=check, expected=_shorten(expected), actual=_shorten(actual)
            )
        return self.failure is None


def _shorten(value, limit: int = 120) -> str:
    text = repr(value)
    return text if len(text) <= limit else text[: limit - 3] + "..."


def check_modulus(m: int, *, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> ModulusReport:
    """Run the full per-modulus invariant suite; stop at the first failure."""
    f = factorize(m)
    rec = _Recorder(m)
    subsets = all_index_sets(f.r)

    # analytic partition vs the graph oracle
    graph = build_graph(m, max_m=oracle_bound)
    analytic = sorted(
        tuple(sorted(component_elements(f, index_set))) for index_set in subsets
    )
    rec.expect("partition", list(graph.components), analytic)

    # per-vertex tail classification and exact tail length vs the orbit oracle
    for v in range(m):
        orb = orbit(m, v)
        if not rec.expect(f"tail_predicate v={v}", len(orb.tail) > 0, is_tail(f, v)):
            break
        if not rec.expect(
            f"tail_length v={v}", len(orb.tail), analytic_tail_length(f, v)
        ):
            break
        if not rec.expect(
            f"orbit_idempotent v={v}",
            orb.idempotent,
            idempotent_for(f, index_set_of(f, v)).d,
        ):
            break

    unit_profile = order_profile(du_elements(f, IndexSet.empty(f.r)), 1, m, check_closure=False)
    multiplier_residues = {multiplier(f, s) % m for s in subsets}

    for index_set in subsets:
        idem = idempotent_for(f, index_set)
        elements = component_elements(f, index_set)
        du = du_elements(f, index_set)
        tails = sorted(v for v in elements if v % idem.g != 0)

        # uniqueness of the idempotent and the multiplier inside the component
        idems_inside = [v for v in elements if v * v % m == v]
        rec.expect(f"unique_idempotent I={index_set.bits}", [idem.d], idems_inside)
        multipliers_inside = sorted(elements & multiplier_residues)
        rec.expect(
            f"unique_multiplier I={index_set.bits}",
            [multiplier(f, index_set) % m],
            multipliers_inside,
        )

        # counts
        rec.expect(f"tail_count I={index_set.bits}", len(tails), tail_count(f, index_set))

        # sums: closed form, inclusion-exclusion referee, direct summation
        direct = sum(elements)
        rec.expect(f"component_sum I={index_set.bits}", direct, component_sum(f, index_set))
        rec.expect(
            f"inclusion_exclusion_sum I={index_set.bits}",
            direct,
            sum_by_inclusion_exclusion(f, index_set),
        )
        rec.expect(f"du_sum I={index_set.bits}", sum(du), du_sum(f, index_set))
        rec.expect(f"tail_sum I={index_set.bits}", sum(tails), tail_sum(f, index_set))

        # totient identity
        lhs, rhs = verify_phi_identity(f, index_set)
        rec.expect(f"phi_identity I={index_set.bits}", lhs, rhs)

        # order-profile evidence: cycle group matches its predicted structure,
        # and the dual product recovers the unit group
        profile = order_profile(du, idem.d, m, check_closure=False)
        rec.expect(
            f"du_profile I={index_set.bits}", predicted_du_profile(f, index_set), profile
        )
        dual = order_profile(
            du_elements(f, index_set.complement()),
            idempotent_for(f, index_set.complement()).d,
            m,
            check_closure=False,
        )
        rec.expect(
            f"dual_product_profile I={index_set.bits}",
            unit_profile,
            profile_product(profile, dual),
        )

        # homomorphisms into every superset component
        for target in subsets:
            if not index_set.issubset(target):
                continue
            fiber_size = euler_phi(prime_power_part(f, target)) // euler_phi(idem.g)
            fibers = hom_fibers(f, index_set, target)
            rec.expect(
                f"hom_image I={index_set.bits} K={target.bits}",
                sorted(du_elements(f, target)),
                sorted(fibers),
            )
            rec.expect(
                f"hom_fiber_sizes I={index_set.bits} K={target.bits}",
                {fiber_size},
                {len(fiber) for fiber in fibers.values()},
            )
            kernel = hom_kernel(f, index_set, target)
            rec.expect(
                f"hom_kernel I={index_set.bits} K={target.bits}",
                sorted(fibers[idempotent_for(f, target).d]),
                sorted(kernel),
            )
            predicted_kernel = _cyclic_profile_of(
                cyclic_unit_group_orders(
                    f.factors[i - 1] for i in target.difference(index_set)
                )
            )
            rec.expect(
                f"kernel_profile I={index_set.bits} K={target.bits}",
                predicted_kernel,
                order_profile(kernel, idem.d, m, check_closure=False),
            )
        if rec.failure is not None:
            break

    return ModulusReport(
        m=m, components=len(subsets), checks=rec.checks, failure=rec.failure
    )


def _cyclic_profile_of(orders: list[int]):
    profile = cyclic_group_profile(1)
    for order in orders:
        profile = profile_product(profile, cyclic_group_profile(order))
    return profile


def verify_range(
    lo: int, hi: int, *, oracle_bound: int = DEFAULT_ORACLE_BOUND
) -> RangeReport:
    """Check every modulus in [lo, hi]; stop at the first failing modulus."""
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    moduli = 0
    components = 0
    checks = 0
    for m in range(lo, hi + 1):
        report = check_modulus(m, oracle_bound=oracle_bound)
        moduli += 1
        components += report.components
        checks += report.checks
        if report.failure is not None:
            return RangeReport(
                lo=lo,
                hi=hi,
                moduli=moduli,
                components=components,
                checks=checks,
                failure=report.failure,
            )
    return RangeReport(
        lo=lo, hi=hi, moduli=moduli, components=components, checks=checks, failure=None
    )
