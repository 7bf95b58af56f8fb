"""Power-orbit walking: the per-element brute-force oracle.

The orbit of a starts at exponent 1 (a itself, never a**0) and stops just
before the first repeated residue. The repeat point splits it into a tail
(pre-periodic prefix, possibly empty) and a cycle that contains exactly one
idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["Orbit", "orbit", "orbit_idempotent", "tail_length_of"]


@dataclass(frozen=True)
class Orbit:
    """One element's power trajectory, split at the first repeat."""

    base: int
    tail: tuple[int, ...]
    cycle: tuple[int, ...]
    idempotent: int

    @property
    def values(self) -> tuple[int, ...]:
        """All distinct powers a**1, a**2, ... in exponent order."""
        return self.tail + self.cycle

    @property
    def tail_length(self) -> int:
        return len(self.tail)


def orbit(m: int, a: int) -> Orbit:
    """Walk the powers of a mod m until the first repeat and split there."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if not 0 <= a < m:
        raise ValueError(f"residue {a} out of range for modulus {m}")
    first_seen: dict[int, int] = {}
    seq: list[int] = []
    x = a
    exponent = 1
    while x not in first_seen:
        first_seen[x] = exponent
        seq.append(x)
        x = x * a % m
        exponent += 1
    j = first_seen[x]  # exponent at which the cycle starts
    tail = tuple(seq[: j - 1])
    cycle = tuple(seq[j - 1 :])
    idem = next(c for c in cycle if c * c % m == c)
    return Orbit(base=a, tail=tail, cycle=cycle, idempotent=idem)


def orbit_idempotent(m: int, a: int) -> int:
    """The unique idempotent in the orbit of a."""
    return orbit(m, a).idempotent


def tail_length_of(m: int, a: int) -> int:
    """Length of the pre-periodic prefix of a's orbit (0 when a is cyclic)."""
    return len(orbit(m, a).tail)
