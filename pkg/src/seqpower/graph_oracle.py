"""Brute-force construction of the full power graph over Z/mZ.

For every base c the orbit walk inserts one directed edge per consecutive
power pair, including the closing edge back into the cycle. Undirected
connectivity over those edges yields the ground-truth component partition
that the analytic modules are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError

__all__ = [
    "DEFAULT_ORACLE_BOUND",
    "PowerGraph",
    "build_graph",
    "oracle_components",
    "oracle_noncycle_count",
]

DEFAULT_ORACLE_BOUND = 10**6


class _DisjointSet:
    """Union-find with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def groups(self) -> list[list[int]]:
        """Members of every set, each ascending, ordered by least member."""
        by_root: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return sorted(by_root.values(), key=lambda g: g[0])


@dataclass(frozen=True)
class PowerGraph:
    """Deduplicated edge set over Z/mZ plus its component partition.

    Edges are a set, not a multiset: the membership condition quantifies
    existentially over (base, exponent). Self-loops stay; every idempotent
    carries one. Components use undirected connectivity and are stored
    sorted, ordered by least vertex.
    """

    m: int
    edges: frozenset[tuple[int, int]]
    components: tuple[tuple[int, ...], ...]


def _check_budget(m: int, max_m: int) -> None:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if m > max_m:
        raise BudgetExceededError(f"m = {m} exceeds the oracle budget {max_m}")


def build_graph(m: int, *, max_m: int = DEFAULT_ORACLE_BOUND) -> PowerGraph:
    """Walk every orbit of Z/mZ and collect consecutive-power edges."""
    _check_budget(m, max_m)
    edges: set[tuple[int, int]] = set()
    dsu = _DisjointSet(m)
    add_edge = edges.add
    union = dsu.union
    for c in range(m):
        seen: set[int] = set()
        see = seen.add
        x = c
        while x not in seen:
            see(x)
            nxt = x * c % m
            add_edge((x, nxt))
            union(x, nxt)
            x = nxt
    components = tuple(tuple(g) for g in dsu.groups())
    return PowerGraph(m=m, edges=frozenset(edges), components=components)


def oracle_components(graph: PowerGraph) -> tuple[tuple[int, ...], ...]:
    """The component partition, sorted by least vertex."""
    return graph.components


def oracle_noncycle_count(m: int, *, max_m: int = DEFAULT_ORACLE_BOUND) -> int:
    """Number of residues whose orbit has a nonempty tail."""
    _check_budget(m, max_m)
    count = 0
    for a in range(m):
        seen: set[int] = set()
        see = seen.add
        x = a
        while x not in seen:
            see(x)
            x = x * a % m
        # the first repeated value is a itself exactly when a is cyclic
        if x != a:
            count += 1
    return count
