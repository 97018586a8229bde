"""Exception types shared across the package."""


class SkewbraceError(Exception):
    """Base class for all package errors."""


class GroupValidationError(SkewbraceError):
    """A multiplication table failed one of the group axioms."""


class NotClosed(GroupValidationError):
    def __init__(self, a, b, value):
        super().__init__(f"entry table[{a}][{b}] = {value} is out of range")
        self.witness = (a, b)


class NoIdentity(GroupValidationError):
    def __init__(self):
        super().__init__("no two-sided identity element")


class NotAssociative(GroupValidationError):
    def __init__(self, a, b, c):
        super().__init__(f"(a b) c != a (b c) for (a, b, c) = ({a}, {b}, {c})")
        self.witness = (a, b, c)


class NoInverse(GroupValidationError):
    def __init__(self, a):
        super().__init__(f"element {a} has no two-sided inverse")
        self.witness = a


class NotABrace(SkewbraceError):
    def __init__(self, a, b, c):
        super().__init__(
            f"compatibility fails: a o (b c) != (a o b) a^-1 (a o c) "
            f"for (a, b, c) = ({a}, {b}, {c})"
        )
        self.witness = (a, b, c)


class NotAHomomorphism(SkewbraceError):
    """An image array does not respect the multiplication tables."""


class OrderOutOfCatalog(SkewbraceError):
    def __init__(self, n, lo, hi):
        super().__init__(f"order {n} is outside the shipped catalog range {lo}..{hi}")
        self.order = n


class StretchRequired(SkewbraceError):
    def __init__(self, n, mode):
        super().__init__(
            f"order {n} in {mode} mode is a long-running target; pass the stretch flag to run it"
        )
        self.order = n


class HolomorphTooLarge(SkewbraceError):
    def __init__(self, size, limit):
        super().__init__(
            f"holomorph of order {size} exceeds the materialization limit {limit}"
        )


class InvalidAssignment(SkewbraceError):
    """An automorphism assignment does not encode a regular subgroup."""


class NotUniqueFactorization(SkewbraceError):
    """The two subgroups do not factor the group uniquely."""


class NotAnIdeal(SkewbraceError):
    """The subset is not an ideal of the brace."""


class NotClassical(SkewbraceError):
    """Operation requires an abelian dot group."""


class NotTwoSided(SkewbraceError):
    """Operation requires a two-sided brace."""


class NotClosedSubset(SkewbraceError):
    """A subset fails the invariance condition needed to restrict a solution."""

    def __init__(self, x, a, b):
        super().__init__(f"subset not invariant: witness (x, a, b) = ({x}, {a}, {b})")
        self.witness = (x, a, b)


class OutOfBudget(SkewbraceError):
    """A scan parameter leads past the configured size budget."""


class UnknownRecord(SkewbraceError):
    def __init__(self, record_id):
        super().__init__(f"no record with id {record_id}")


class CorruptDatabase(SkewbraceError):
    """A database file failed structural or checksum validation."""
