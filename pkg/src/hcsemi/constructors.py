"""Named constructions and the fixture semigroups used throughout the tests."""
from __future__ import annotations

from itertools import permutations
from typing import Optional, Sequence

from .core import Semigroup, adjoin_identity
from .errors import OrderOverflow, UnsupportedOrder

DEFAULT_PRODUCT_CAP = 4096

FIXTURES = ("ex33_S", "ex35_U", "ex35_T", "ex36_etaclass")


def monogenic(index: int, period: int) -> Semigroup:
    """<a | a^index = a^(index+period)>; element i stands for a^(i+1)."""
    if index < 1 or period < 1:
        raise ValueError("index and period must be positive")
    n = index + period - 1

    def reduce(e: int) -> int:
        # e is an exponent >= 1
        if e <= n:
            return e
        return index + (e - index) % period

    table = tuple(tuple(reduce(i + j + 2) - 1 for j in range(n)) for i in range(n))
    labels = tuple("a" if e == 1 else f"a{e}" for e in range(1, n + 1))
    return Semigroup(table, labels)


def cyclic_group(n: int) -> Semigroup:
    return monogenic(1, n)


def _perm_table(perms: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    pos = {p: i for i, p in enumerate(perms)}
    # p*q: apply p first, then q
    return tuple(tuple(pos[tuple(q[p[x]] for x in range(len(p)))] for q in perms) for p in perms)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen: set[int] = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "id"


def symmetric_group(n: int) -> Semigroup:
    """All permutations of {1..n}, lexicographic by one-line notation.

    The product ``p*q`` applies ``p`` first and then ``q``.
    """
    if not 1 <= n <= 5:
        raise UnsupportedOrder(f"symmetric_group supports 1 <= n <= 5, got {n}")
    perms = sorted(permutations(range(n)))
    return Semigroup(_perm_table(perms), tuple(_cycle_label(p) for p in perms))


# S3 in the labelling used by the fixtures: t_i is the transposition fixing i.
_S3_NAMED = (
    ("e", (0, 1, 2)),
    ("t1", (0, 2, 1)),
    ("t2", (2, 1, 0)),
    ("t3", (1, 0, 2)),
    ("c", (1, 2, 0)),
    ("c2", (2, 0, 1)),
)


def s3_named() -> Semigroup:
    """S3 ordered e, t1=(2 3), t2=(3 1), t3=(1 2), c=(1 2 3), c2=(1 3 2)."""
    perms = [p for _, p in _S3_NAMED]
    return Semigroup(_perm_table(perms), tuple(name for name, _ in _S3_NAMED))


def _pair_labels(S: Semigroup, T: Semigroup) -> Optional[tuple[str, ...]]:
    if S.labels is None and T.labels is None:
        return None
    return tuple(f"({S.label(i)},{T.label(j)})" for i in S for j in T)


def direct_product(S: Semigroup, T: Semigroup, cap: int = DEFAULT_PRODUCT_CAP) -> Semigroup:
    """Componentwise product; the pair (i, j) has index ``i*|T| + j``."""
    m, n = S.order, T.order
    if m * n > cap:
        raise OrderOverflow(f"direct product of order {m * n} exceeds cap {cap}")
    s, t = S.table, T.table
    table = tuple(
        tuple(s[i1][i2] * n + t[j1][j2] for i2 in range(m) for j2 in range(n))
        for i1 in range(m)
        for j1 in range(n)
    )
    return Semigroup(table, _pair_labels(S, T))


def zero_direct_union(S: Semigroup, T: Semigroup) -> Semigroup:
    """Disjoint union of S and T plus a new zero; cross products are zero.

    Layout: S occupies 0..|S|-1, T the next |T| indices, the zero is last.
    """
    m, n = S.order, T.order
    z = m + n
    table = [[z] * (z + 1) for _ in range(z + 1)]
    for i in range(m):
        for j in range(m):
            table[i][j] = S.table[i][j]
    for i in range(n):
        for j in range(n):
            table[m + i][m + j] = m + T.table[i][j]
    labels = None
    if S.labels is not None or T.labels is not None:
        left = [S.label(i) for i in S]
        right = [T.label(j) for j in T]
        clash = set(left) & set(right)
        if clash:
            left = [f"{x}_1" for x in left]
            right = [f"{x}_2" for x in right]
        zero = "0"
        while zero in left or zero in right:
            zero += "'"
        labels = tuple(left + right + [zero])
    return Semigroup(tuple(map(tuple, table)), labels)


def fixture(name: str) -> Semigroup:
    """One of the named fixtures in ``FIXTURES``."""
    if name == "ex33_S":
        return zero_direct_union(monogenic(3, 1), s3_named())
    if name == "ex35_U":
        return zero_direct_union(adjoin_identity(monogenic(3, 1)), s3_named())
    if name == "ex35_T":
        U = fixture("ex35_U")
        return direct_product(U, U)
    if name == "ex36_etaclass":
        return direct_product(monogenic(3, 1), s3_named())
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
