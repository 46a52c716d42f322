"""Exhaustive generation of small semigroups, subsemigroups and extensions.

Tables are filled cell by cell in row-major order.  After each assignment every
associativity triple that has just become fully determined is checked, so no
partial table with a violated triple is ever extended.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence, Union

from .core import Semigroup, SubsetHandle, classify, is_closed_subset
from .errors import BudgetExceeded, CostGuard

FILTERS = ("none", "hc", "monoid", "commutative", "regular")
DEFAULT_BUDGET = 10**7
# order 5 visits about 1.26e8 nodes; the default leaves room for it
ENUMERATION_BUDGET = 2 * 10**8
MAX_ORDER = 5
MAX_SUBSET_ORDER = 12

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EnumerationSpec:
    order: int
    filter: str = "none"
    budget: Optional[int] = ENUMERATION_BUDGET
    allow_large: bool = False

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be positive")
        if self.order > MAX_ORDER and not self.allow_large:
            raise CostGuard(f"order {self.order} > {MAX_ORDER} needs allow_large=True")
        if self.filter not in FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}; choose from {FILTERS}")


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget: Optional[int]) -> None:
        self.nodes = 0
        self.budget = budget

    def tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded budget of {self.budget} nodes")


def _consistent(t: list[list[int]], n: int, i: int, j: int, v: int) -> bool:
    """Check the triples completed by setting t[i][j] = v (already written)."""
    ti, tj, tv = t[i], t[j], t[v]
    # (i j) z = i (j z)
    for z in range(n):
        jz = tj[z]
        if jz >= 0:
            left, right = tv[z], ti[jz]
            if left >= 0 and right >= 0 and left != right:
                return False
    # (x i) j = x (i j)
    for x in range(n):
        tx = t[x]
        xi = tx[i]
        if xi >= 0:
            left, right = t[xi][j], tx[v]
            if left >= 0 and right >= 0 and left != right:
                return False
    # (x y) j with x y = i
    for x in range(n):
        tx = t[x]
        for y in range(n):
            if tx[y] == i:
                yj = t[y][j]
                if yj >= 0:
                    right = tx[yj]
                    if right >= 0 and right != v:
                        return False
    # i (y z) with y z = j
    for y in range(n):
        iy = ti[y]
        if iy < 0:
            continue
        ty, tiy = t[y], t[iy]
        for z in range(n):
            if ty[z] == j:
                left = tiy[z]
                if left >= 0 and left != v:
                    return False
    return True


def _fill(
    t: list[list[int]],
    n: int,
    cells: Sequence[tuple[int, int]],
    counter: _Counter,
    values: Optional[Sequence[int]] = None,
    rng: Optional[random.Random] = None,
) -> Iterator[Table]:
    """Depth-first completion of ``t`` over ``cells``; yields tables in lexicographic order."""
    depth = len(cells)
    order = list(values) if values is not None else list(range(n))

    def rec(k: int) -> Iterator[Table]:
        if k == depth:
            yield tuple(tuple(row) for row in t)
            return
        i, j = cells[k]
        vals = order
        if rng is not None:
            vals = order[:]
            rng.shuffle(vals)
        for v in vals:
            counter.tick()
            t[i][j] = v
            if _consistent(t, n, i, j, v):
                yield from rec(k + 1)
        t[i][j] = -1

    yield from rec(0)


def _passes(S: Semigroup, name: str) -> bool:
    if name == "none":
        return True
    if name == "hc":
        from .hcomm import is_h_commutative

        return bool(is_h_commutative(S))
    flags = classify(S)
    return {"monoid": flags.is_monoid, "commutative": flags.is_commutative, "regular": flags.is_regular}[name]


def _tables_from_prefix(args: tuple[int, tuple[int, ...], Optional[int]]) -> tuple[list[Table], int]:
    n, first_row, budget = args
    t = [[-1] * n for _ in range(n)]
    t[0] = list(first_row)
    cells = [(i, j) for i in range(1, n) for j in range(n)]
    counter = _Counter(budget)
    return list(_fill(t, n, cells, counter)), counter.nodes


def first_row_partitions(n: int, counter: Optional[_Counter] = None) -> list[tuple[int, ...]]:
    """Consistent first rows; the partitions of the search space, in order."""
    t = [[-1] * n for _ in range(n)]
    cells = [(0, j) for j in range(n)]
    return [table[0] for table in _fill(t, n, cells, counter or _Counter(None))]


def all_tables(order: int, budget: Optional[int] = ENUMERATION_BUDGET, workers: int = 1) -> Iterator[Table]:
    """Every associative table of the given order, lexicographically.

    ``budget`` caps the search nodes of the whole run, also when it is split
    across worker processes.
    """
    n = order
    if workers > 1:
        head = _Counter(budget)
        rows = first_row_partitions(n, head)
        spent = head.nodes
        parts = [(n, row, budget) for row in rows]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for tables, nodes in pool.map(_tables_from_prefix, parts):
                spent += nodes
                if budget is not None and spent > budget:
                    raise BudgetExceeded(f"search exceeded budget of {budget} nodes")
                yield from tables
        return
    t = [[-1] * n for _ in range(n)]
    cells = [(i, j) for i in range(n) for j in range(n)]
    yield from _fill(t, n, cells, _Counter(budget))


def all_semigroups(spec: Union[EnumerationSpec, int], workers: int = 1) -> Iterator[Semigroup]:
    """Every labelled semigroup of ``spec.order`` passing ``spec.filter``, in table order."""
    if isinstance(spec, int):
        spec = EnumerationSpec(spec)
    for table in all_tables(spec.order, spec.budget, workers):
        S = Semigroup(table)
        if _passes(S, spec.filter):
            yield S


def all_tables_bruteforce(order: int) -> Iterator[Table]:
    """Unpruned reference generator: filter every table by a full triple check."""
    n = order
    if n > 3:
        raise CostGuard("brute-force generation is limited to order <= 3")
    rng = range(n)
    for flat in product(rng, repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in rng]
        if all(t[t[i][j]][k] == t[i][t[j][k]] for i in rng for j in rng for k in rng):
            yield tuple(tuple(row) for row in t)


def all_subsemigroups(S: Semigroup) -> list[SubsetHandle]:
    """Every non-empty closed subset, ascending by (size, members)."""
    n = S.order
    if n > MAX_SUBSET_ORDER:
        raise CostGuard(f"subset scan limited to order <= {MAX_SUBSET_ORDER}")
    found = []
    for mask in range(1, 1 << n):
        members = [x for x in range(n) if mask >> x & 1]
        if is_closed_subset(S, members):
            found.append(tuple(members))
    found.sort(key=lambda m: (len(m), m))
    return [SubsetHandle(S, m) for m in found]


def extension_cells(n: int, total: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(total) for j in range(total) if i >= n or j >= n]


def extensions(
    S: Semigroup, extra: int, budget: Optional[int] = DEFAULT_BUDGET
) -> Iterator[Semigroup]:
    """Associative tables of order |S|+extra whose leading block is S's table."""
    if extra not in (1, 2):
        raise CostGuard(f"extra must be 1 or 2, got {extra}")
    n = S.order
    total = n + extra
    t = [[-1] * total for _ in range(total)]
    for i in range(n):
        t[i][:n] = S.table[i]
    for table in _fill(t, total, extension_cells(n, total), _Counter(budget)):
        yield Semigroup(table)


def random_semigroup(order: int, rng: random.Random, attempt_budget: int = 2000) -> Semigroup:
    """Some associative table of the given order, found by randomised backtracking.

    Each attempt shuffles the value order per cell and gives up after
    ``attempt_budget`` nodes; a fresh attempt then starts from scratch.
    """
    n = order
    cells = [(i, j) for i in range(n) for j in range(n)]
    while True:
        t = [[-1] * n for _ in range(n)]
        try:
            table = next(_fill(t, n, cells, _Counter(attempt_budget), rng=rng))
        except BudgetExceeded:
            continue
        return Semigroup(table)
