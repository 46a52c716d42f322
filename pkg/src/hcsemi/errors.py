"""Exception hierarchy shared by every module."""


class SemigroupError(Exception):
    """Base class for all library errors."""


class AssociativityViolation(SemigroupError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"table is not associative at ({i},{j},{k})")


class IndexOutOfRange(SemigroupError):
    pass


class BadLabels(SemigroupError):
    pass


class EmptySeed(SemigroupError):
    pass


class UnsupportedOrder(SemigroupError):
    pass


class OrderOverflow(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    pass


class NotACongruence(SemigroupError):
    pass


class NotHCommutative(SemigroupError):
    pass


class NoCofactor(SemigroupError):
    """Internal consistency failure: a proven-to-exist cofactor was not found."""


class InconsistentOrder(SemigroupError):
    pass


class NotClosedSubset(SemigroupError):
    pass


class PreconditionFailed(SemigroupError):
    pass


class CostGuard(SemigroupError):
    """Requested search exceeds the configured cost limits."""


class BudgetExceeded(CostGuard):
    pass
