"""Finite semigroups given by Cayley tables.

Elements are the integers ``0..n-1``; ``table[i][j]`` is the product ``i*j``.
Every table is checked for associativity when the semigroup is built, so the
rest of the package can rely on it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence, TypeVar

import numpy as np

from .errors import (
    AssociativityViolation,
    BadLabels,
    EmptySeed,
    IndexOutOfRange,
    NotClosedSubset,
)

T = TypeVar("T")

# Above this order associativity is checked with numpy instead of a triple loop.
_VECTOR_CHECK_FROM = 24


def _first_associativity_failure(table: tuple[tuple[int, ...], ...]) -> Optional[tuple[int, int, int]]:
    n = len(table)
    if n >= _VECTOR_CHECK_FROM:
        t = np.asarray(table, dtype=np.intp)
        left = t[t]  # left[i, j, k] = (i*j)*k
        right = t[:, t]  # right[i, j, k] = i*(j*k)
        bad = np.argwhere(left != right)
        if len(bad):
            i, j, k = bad[0]
            return int(i), int(j), int(k)
        return None
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            row_ij = table[row_i[j]]
            row_j = table[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    return i, j, k
    return None


@dataclass(frozen=True)
class Semigroup:
    """An associative Cayley table, optionally with display labels.

    Equality and hashing look at the table only; labels are cosmetic.
    """

    table: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)
    identity: Optional[int] = field(init=False, compare=False)
    zero: Optional[int] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(table)
        if n == 0:
            raise IndexOutOfRange("a semigroup needs at least one element")
        for i, row in enumerate(table):
            if len(row) != n:
                raise IndexOutOfRange(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise IndexOutOfRange(f"entry ({i},{j})={v} outside [0,{n})")
        labels = self.labels
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n or any(
                not isinstance(s, str) or not s or any(c.isspace() for c in s) for s in labels
            ):
                raise BadLabels(f"need {n} distinct non-empty labels without whitespace")
        failure = _first_associativity_failure(table)
        if failure is not None:
            raise AssociativityViolation(*failure)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "identity", _find_identity(table))
        object.__setattr__(self, "zero", _find_zero(table))
        object.__setattr__(self, "_memo", {})

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.table)))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label: str) -> int:
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def memo(self, key: str, compute: Callable[[], T]) -> T:
        """Cache a derived structure on this (immutable) semigroup."""
        cache = self.__dict__["_memo"]
        if key not in cache:
            cache[key] = compute()
        return cache[key]

    def check(self, *elements: int) -> None:
        n = len(self.table)
        for e in elements:
            if not isinstance(e, (int, np.integer)) or not 0 <= e < n:
                raise IndexOutOfRange(f"element {e!r} not in [0,{n})")

    def __repr__(self) -> str:
        return f"Semigroup(order={self.order})"


def _find_identity(table: tuple[tuple[int, ...], ...]) -> Optional[int]:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def _find_zero(table: tuple[tuple[int, ...], ...]) -> Optional[int]:
    n = len(table)
    for z in range(n):
        if all(table[z][x] == z and table[x][z] == z for x in range(n)):
            return z
    return None


def new_semigroup(order: int, table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> Semigroup:
    if order < 1 or len(table) != order:
        raise IndexOutOfRange(f"table has {len(table)} rows but order is {order}")
    return Semigroup(tuple(tuple(row) for row in table), tuple(labels) if labels is not None else None)


@dataclass(frozen=True)
class SubsetHandle:
    """A non-empty, multiplication-closed subset of ``parent``."""

    parent: Semigroup
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(int(m) for m in self.members)))
        if not members:
            raise EmptySeed("subset handle must be non-empty")
        self.parent.check(*members)
        mset = set(members)
        t = self.parent.table
        for a in members:
            for b in members:
                if t[a][b] not in mset:
                    raise NotClosedSubset(f"{a}*{b}={t[a][b]} leaves the subset")
        object.__setattr__(self, "members", members)

    def __contains__(self, x: object) -> bool:
        return x in self.member_set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def materialize(self) -> Semigroup:
        """The induced semigroup, re-indexed ascending; ``members[i]`` is new element ``i``."""
        pos = {m: i for i, m in enumerate(self.members)}
        t = self.parent.table
        table = tuple(tuple(pos[t[a][b]] for b in self.members) for a in self.members)
        labels = None
        if self.parent.labels is not None:
            labels = tuple(self.parent.labels[m] for m in self.members)
        return Semigroup(table, labels)


def multiply(S: Semigroup, a: int, b: int) -> int:
    S.check(a, b)
    return S.table[a][b]


def power(S: Semigroup, a: int, n: int) -> int:
    """``a**n`` for ``n >= 1`` by repeated multiplication."""
    S.check(a)
    if n < 1:
        raise ValueError("semigroups have no empty product; power needs n >= 1")
    row = S.table
    x = a
    for _ in range(n - 1):
        x = row[x][a]
    return x


def distinct_powers(S: Semigroup, a: int) -> tuple[int, ...]:
    """``a, a^2, ...`` up to the first repeat."""
    seen: list[int] = []
    seen_set: set[int] = set()
    x = a
    while x not in seen_set:
        seen.append(x)
        seen_set.add(x)
        x = S.table[x][a]
    return tuple(seen)


def adjoin_identity(S: Semigroup) -> Semigroup:
    """S with a new identity at index n, or S itself when it already has one."""
    if S.identity is not None:
        return S
    n = S.order
    table = [list(row) + [i] for i, row in enumerate(S.table)]
    table.append(list(range(n + 1)))
    labels = None
    if S.labels is not None:
        labels = S.labels + (_fresh_label(S.labels, "1"),)
    return Semigroup(tuple(map(tuple, table)), labels)


def adjoin_zero(S: Semigroup) -> Semigroup:
    """S with a new two-sided zero at index n (always added)."""
    n = S.order
    table = [list(row) + [n] for row in S.table]
    table.append([n] * (n + 1))
    labels = None
    if S.labels is not None:
        labels = S.labels + (_fresh_label(S.labels, "0"),)
    return Semigroup(tuple(map(tuple, table)), labels)


def _fresh_label(existing: Iterable[str], base: str) -> str:
    taken = set(existing)
    label = base
    while label in taken:
        label += "'"
    return label


def subsemigroup_closure(S: Semigroup, seed: Iterable[int]) -> SubsetHandle:
    members = set(seed)
    if not members:
        raise EmptySeed("closure of the empty set is not a subsemigroup")
    S.check(*members)
    t = S.table
    frontier = list(members)
    while frontier:
        new: list[int] = []
        current = list(members)
        for a in frontier:
            for b in current:
                for p in (t[a][b], t[b][a]):
                    if p not in members:
                        members.add(p)
                        new.append(p)
        frontier = new
    return SubsetHandle(S, tuple(sorted(members)))


def is_closed_subset(S: Semigroup, members: Iterable[int]) -> bool:
    mset = set(members)
    t = S.table
    return bool(mset) and all(t[a][b] in mset for a in mset for b in mset)


def idempotents(S: Semigroup) -> tuple[int, ...]:
    return S.memo("idempotents", lambda: tuple(e for e in S if S.table[e][e] == e))


@dataclass(frozen=True)
class StructureFlags:
    is_commutative: bool
    is_monoid: bool
    is_group: bool
    is_band: bool
    is_semilattice: bool
    is_regular: bool


def is_commutative(S: Semigroup) -> bool:
    t = S.table
    return all(t[a][b] == t[b][a] for a in S for b in range(a + 1, S.order))


def is_regular_element(S: Semigroup, a: int) -> bool:
    t = S.table
    ta = t[a]
    return any(t[ta[x]][a] == a for x in S)


def is_group(S: Semigroup) -> bool:
    if S.identity is None:
        return False
    e = S.identity
    return all(e in S.table[a] for a in S)


def classify(S: Semigroup) -> StructureFlags:
    comm = is_commutative(S)
    band = len(idempotents(S)) == S.order
    return StructureFlags(
        is_commutative=comm,
        is_monoid=S.identity is not None,
        is_group=is_group(S),
        is_band=band,
        is_semilattice=band and comm,
        is_regular=all(is_regular_element(S, a) for a in S),
    )
