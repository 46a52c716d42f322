"""Divisibility, Green's relations and archimedean structure."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence, Union

from .core import Semigroup, SubsetHandle, distinct_powers, idempotents, is_regular_element
from .errors import NotIdempotent
from .unionfind import UnionFind


@dataclass(frozen=True)
class Partition:
    """Blocks numbered densely in order of their least member."""

    class_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_keys(cls, keys: Sequence[Hashable]) -> "Partition":
        ids: dict[Hashable, int] = {}
        class_of = []
        for k in keys:
            if k not in ids:
                ids[k] = len(ids)
            class_of.append(ids[k])
        blocks: list[list[int]] = [[] for _ in ids]
        for x, b in enumerate(class_of):
            blocks[b].append(x)
        return cls(tuple(class_of), tuple(tuple(b) for b in blocks))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        keys: list[Optional[int]] = [None] * n
        for bid, block in enumerate(blocks):
            for x in block:
                keys[x] = bid
        if any(k is None for k in keys):
            raise ValueError("blocks do not cover every element")
        return cls.from_keys(keys)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls.from_keys(range(n))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls.from_keys([0] * n)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        return len(self.class_of)

    def same(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def block_of(self, a: int) -> tuple[int, ...]:
        return self.blocks[self.class_of[a]]

    def refines(self, other: "Partition") -> bool:
        return all(len({other.class_of[x] for x in block}) == 1 for block in self.blocks)

    def meet(self, other: "Partition") -> "Partition":
        return Partition.from_keys(list(zip(self.class_of, other.class_of)))

    def is_trivial(self) -> bool:
        return len(self.blocks) == len(self.class_of)


@dataclass(frozen=True)
class GreenProfile:
    L: Partition
    R: Partition
    H: Partition
    D: Partition
    J: Partition


@dataclass(frozen=True)
class BinaryRelation:
    matrix: tuple[tuple[bool, ...], ...]

    def __call__(self, a: int, b: int) -> bool:
        return self.matrix[a][b]

    def is_reflexive(self) -> bool:
        return all(self.matrix[a][a] for a in range(len(self.matrix)))

    def is_transitive(self) -> bool:
        m = self.matrix
        n = len(m)
        return all(
            m[a][c] for a in range(n) for b in range(n) if m[a][b] for c in range(n) if m[b][c]
        )


# Principal ideals ---------------------------------------------------------


def right_ideals(S: Semigroup) -> tuple[frozenset[int], ...]:
    """``aS^1`` for every a."""
    return S.memo("right_ideals", lambda: tuple(frozenset(S.table[a]) | {a} for a in S))


def left_ideals(S: Semigroup) -> tuple[frozenset[int], ...]:
    """``S^1 a`` for every a."""

    def compute():
        t = S.table
        return tuple(frozenset(t[x][a] for x in S) | {a} for a in S)

    return S.memo("left_ideals", compute)


def two_sided_ideals(S: Semigroup) -> tuple[frozenset[int], ...]:
    """``S^1 a S^1`` for every a."""

    def compute():
        right = right_ideals(S)
        return tuple(frozenset().union(*(right[c] for c in left)) for left in left_ideals(S))

    return S.memo("two_sided_ideals", compute)


def left_divides(S: Semigroup, a: int, b: int) -> bool:
    """b in aS^1."""
    S.check(a, b)
    return b in right_ideals(S)[a]


def right_divides(S: Semigroup, a: int, b: int) -> bool:
    """b in S^1 a."""
    S.check(a, b)
    return b in left_ideals(S)[a]


def divides(S: Semigroup, a: int, b: int) -> bool:
    """b in S^1 a S^1."""
    S.check(a, b)
    return b in two_sided_ideals(S)[a]


def green(S: Semigroup) -> GreenProfile:
    def compute() -> GreenProfile:
        L = Partition.from_keys(left_ideals(S))
        R = Partition.from_keys(right_ideals(S))
        H = L.meet(R)
        J = Partition.from_keys(two_sided_ideals(S))
        uf = UnionFind(S.order)
        for part in (L, R):
            for block in part.blocks:
                for x in block[1:]:
                    uf.union(block[0], x)
        D = Partition.from_keys(uf.labels())
        assert H.refines(L) and H.refines(R) and L.refines(D) and R.refines(D)
        assert D == J, "D and J differ on a finite semigroup"
        return GreenProfile(L, R, H, D, J)

    return S.memo("green", compute)


def green_coincide(S: Semigroup) -> bool:
    g = green(S)
    return g.L == g.R == g.H == g.D == g.J


class UnclosedSet(frozenset):
    """Regular elements that do not form a subsemigroup."""

    closed = False


def regular_elements(S: Semigroup) -> Union[SubsetHandle, UnclosedSet, None]:
    """Reg(S) as a handle when closed, an ``UnclosedSet`` otherwise, None if empty."""
    members = [a for a in S if is_regular_element(S, a)]
    if not members:
        return None
    mset = set(members)
    t = S.table
    if all(t[a][b] in mset for a in members for b in members):
        return SubsetHandle(S, tuple(members))
    return UnclosedSet(members)


def natural_leq(S: Semigroup, e: int, f: int) -> bool:
    """e <= f in the natural order on idempotents: ef = fe = e."""
    S.check(e, f)
    t = S.table
    for x in (e, f):
        if t[x][x] != x:
            raise NotIdempotent(f"{S.label(x)} is not idempotent")
    return t[e][f] == e and t[f][e] == e


def lambda_relation(S: Semigroup) -> BinaryRelation:
    """a ~ b iff a divides some power of b (two-sided)."""

    def compute() -> BinaryRelation:
        ideals = two_sided_ideals(S)
        powers = [distinct_powers(S, b) for b in S]
        return BinaryRelation(
            tuple(tuple(any(p in ideals[a] for p in powers[b]) for b in S) for a in S)
        )

    return S.memo("lambda", compute)


def power_bound(S: Semigroup) -> int:
    """Largest count of distinct powers of any element; exponents beyond it add nothing."""
    return max(len(distinct_powers(S, a)) for a in S)


def is_archimedean(S: Semigroup) -> bool:
    """For all a, b: some power of b lies in aS^1 and some (maybe other) power in S^1 a."""
    right, left = right_ideals(S), left_ideals(S)
    for b in S:
        powers = distinct_powers(S, b)
        for a in S:
            if not any(p in right[a] for p in powers):
                return False
            if not any(p in left[a] for p in powers):
                return False
    return True


def is_archimedean_common_exponent(S: Semigroup) -> bool:
    """As ``is_archimedean`` but one exponent must serve both sides."""
    right, left = right_ideals(S), left_ideals(S)
    for b in S:
        powers = distinct_powers(S, b)
        for a in S:
            if not any(p in right[a] and p in left[a] for p in powers):
                return False
    return True


def central_idempotents(S: Semigroup) -> bool:
    t = S.table
    return all(t[e][a] == t[a][e] for e in idempotents(S) for a in S)


def left_equals_right_multiples(S: Semigroup) -> bool:
    """aS == Sa for every a (without adjoined identity)."""
    t = S.table
    return all(set(t[a]) == {t[x][a] for x in S} for a in S)
