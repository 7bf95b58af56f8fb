"""Structure of power orbits over Z/mZ.

Analytic computation, from the factorization of m alone, of everything the
modular power map does to Z/mZ: the 2**r idempotents, the component
partition of the orbit graph, cycle groups and tails with exact counts and
integer sums, the component lattice with its homomorphisms, and range
scans of the associated densities. A brute-force orbit/graph oracle backs
every analytic claim, and the `verify` module cross-checks them per
modulus.
"""

from .arith import Factorization, beta, divisors, euler_phi, factorize, mod_inv, mod_pow
from .components import (
    ComponentDescriptor,
    InclusionExclusionTerm,
    TailLayer,
    analytic_tail_length,
    component_elements,
    component_sum,
    describe_component,
    du_elements,
    du_sum,
    is_tail,
    order_profile,
    predicted_group_structure,
    sum_by_inclusion_exclusion,
    tail_count,
    tail_layers,
    tail_partition,
    tail_sum,
    verify_phi_identity,
)
from .errors import (
    BudgetExceededError,
    ClosureError,
    IncomparableError,
    NotIdempotentError,
    NotInvertibleError,
)
from .graph_oracle import PowerGraph, build_graph, oracle_components, oracle_noncycle_count
from .idempotents import (
    IdempotentRecord,
    IndexSet,
    all_idempotents,
    all_index_sets,
    idempotent_for,
    idempotent_product,
    index_set_of,
    multiplier,
    prime_power_part,
)
from .lattice_hom import (
    ComponentLattice,
    HomDescriptor,
    describe_hom,
    hom_apply,
    hom_fibers,
    hom_kernel,
    lattice_of,
)
from .orbits import Orbit, orbit, orbit_idempotent, tail_length_of
from .stats import ScanReport, cyclic_count, power_image_count, scan, scan_series
from .verify import check_modulus, verify_range

__version__ = "0.1.0"

__all__ = [
    "Factorization",
    "factorize",
    "euler_phi",
    "mod_pow",
    "mod_inv",
    "divisors",
    "beta",
    "IndexSet",
    "IdempotentRecord",
    "all_index_sets",
    "multiplier",
    "prime_power_part",
    "idempotent_for",
    "all_idempotents",
    "idempotent_product",
    "index_set_of",
    "Orbit",
    "orbit",
    "orbit_idempotent",
    "tail_length_of",
    "PowerGraph",
    "build_graph",
    "oracle_components",
    "oracle_noncycle_count",
    "ComponentDescriptor",
    "InclusionExclusionTerm",
    "TailLayer",
    "describe_component",
    "component_elements",
    "du_elements",
    "is_tail",
    "tail_partition",
    "tail_count",
    "verify_phi_identity",
    "analytic_tail_length",
    "tail_layers",
    "component_sum",
    "du_sum",
    "tail_sum",
    "sum_by_inclusion_exclusion",
    "predicted_group_structure",
    "order_profile",
    "ComponentLattice",
    "HomDescriptor",
    "lattice_of",
    "hom_apply",
    "hom_kernel",
    "hom_fibers",
    "describe_hom",
    "ScanReport",
    "cyclic_count",
    "scan",
    "scan_series",
    "power_image_count",
    "check_modulus",
    "verify_range",
    "NotInvertibleError",
    "NotIdempotentError",
    "IncomparableError",
    "ClosureError",
    "BudgetExceededError",
]
