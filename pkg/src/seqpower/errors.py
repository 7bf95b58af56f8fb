"""Exception types shared across the package."""


class NotInvertibleError(ValueError):
    """A residue has no multiplicative inverse for the given modulus."""

    def __init__(self, a: int, m: int, g: int):
        super().__init__(f"{a} is not invertible mod {m}: gcd({a}, {m}) = {g}")
        self.a = a
        self.m = m
        self.gcd = g


class NotIdempotentError(ValueError):
    """An operand was required to be idempotent but is not."""


class IncomparableError(ValueError):
    """A homomorphism was requested between incomparable components."""


class ClosureError(ValueError):
    """A purported group is not closed under multiplication mod m."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured size budget."""
