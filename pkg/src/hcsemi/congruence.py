"""Congruences: closure, quotients and the distinguished congruences."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Semigroup, SubsetHandle, classify, idempotents
from .errors import NotACongruence
from .relations import Partition, green, is_archimedean, lambda_relation
from .unionfind import UnionFind


def is_congruence(S: Semigroup, p: Partition) -> bool:
    if p.size != S.order:
        raise ValueError("partition size does not match the semigroup")
    t = S.table
    cls = p.class_of
    for block in p.blocks:
        rep = block[0]
        row_rep = t[rep]
        for a in block[1:]:
            row_a = t[a]
            for c in S:
                if cls[row_a[c]] != cls[row_rep[c]] or cls[t[c][a]] != cls[t[c][rep]]:
                    return False
    return True


@dataclass(frozen=True)
class Congruence:
    parent: Semigroup
    partition: Partition

    def __post_init__(self) -> None:
        if not is_congruence(self.parent, self.partition):
            raise NotACongruence("partition is not compatible with multiplication")

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self.partition.blocks

    def __len__(self) -> int:
        return len(self.partition)

    def pairs(self) -> list[tuple[int, int]]:
        """Generating pairs: each block member linked to the block's least element."""
        return [(b[0], x) for b in self.partition.blocks for x in b[1:]]

    def contains(self, other: "Congruence") -> bool:
        return other.partition.refines(self.partition)


def congruence_closure(S: Semigroup, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence containing ``pairs`` (union-find with a translate worklist)."""
    t = S.table
    n = S.order
    uf = UnionFind(n)
    work = deque(pairs)
    while work:
        a, b = work.popleft()
        if uf.union(a, b):
            row_a, row_b = t[a], t[b]
            for c in range(n):
                work.append((row_a[c], row_b[c]))
                row_c = t[c]
                work.append((row_c[a], row_c[b]))
    return Congruence(S, Partition.from_keys(uf.labels()))


def join(S: Semigroup, k1: Congruence, k2: Congruence) -> Congruence:
    return congruence_closure(S, k1.pairs() + k2.pairs())


def identity_congruence(S: Semigroup) -> Congruence:
    return Congruence(S, Partition.identity(S.order))


def universal_congruence(S: Semigroup) -> Congruence:
    return Congruence(S, Partition.universal(S.order))


def quotient(S: Semigroup, k: Congruence | Partition) -> tuple[Semigroup, tuple[int, ...]]:
    """S/k with blocks as elements, plus the projection element -> block index."""
    p = k.partition if isinstance(k, Congruence) else k
    if not is_congruence(S, p):
        raise NotACongruence("cannot form a quotient by a non-congruence")
    t = S.table
    cls = p.class_of
    table = tuple(tuple(cls[t[bi[0]][bj[0]]] for bj in p.blocks) for bi in p.blocks)
    return Semigroup(table), cls


def least_semilattice_congruence(S: Semigroup) -> Congruence:
    """eta: closure of all (a, a^2) and (ab, ba)."""

    def compute() -> Congruence:
        t = S.table
        pairs = [(a, t[a][a]) for a in S]
        pairs += [(t[a][b], t[b][a]) for a in S for b in S if a < b]
        eta = congruence_closure(S, pairs)
        flags = classify(quotient(S, eta)[0])
        assert flags.is_semilattice, "eta quotient is not a semilattice"
        return eta

    return S.memo("eta", compute)


def rho_partition(S: Semigroup) -> Partition:
    """a ~ b iff each divides a power of the other."""
    lam = lambda_relation(S)
    n = S.order
    # Block key: the set of elements mutually power-divisible with a.
    keys = [frozenset(b for b in range(n) if lam(a, b) and lam(b, a)) for a in range(n)]
    return Partition.from_keys(keys)


def least_combinatorial_congruence(S: Semigroup) -> Congruence:
    """Least congruence whose quotient is H-trivial, by repeated H-collapse."""
    current = identity_congruence(S)
    while True:
        Q, proj = quotient(S, current)
        H = green(Q).H
        if H.is_trivial():
            return current
        # Pull H-related quotient pairs back to S.
        reps = [current.blocks[b][0] for b in range(Q.order)]
        extra = [(reps[blk[0]], reps[x]) for blk in H.blocks for x in blk[1:]]
        current = congruence_closure(S, current.pairs() + extra)


@dataclass(frozen=True)
class EtaClassRecord:
    members: tuple[int, ...]
    is_archimedean: bool
    idempotent_count: int
    is_group: bool
    is_hc: bool


def eta_class_semigroups(S: Semigroup) -> list[tuple[tuple[int, ...], Semigroup]]:
    out = []
    for block in least_semilattice_congruence(S).blocks:
        out.append((block, SubsetHandle(S, block).materialize()))
    return out


def eta_class_report(S: Semigroup) -> list[EtaClassRecord]:
    from .hcomm import is_h_commutative

    records = []
    for members, C in eta_class_semigroups(S):
        records.append(
            EtaClassRecord(
                members=members,
                is_archimedean=is_archimedean(C),
                idempotent_count=len(idempotents(C)),
                is_group=classify(C).is_group,
                is_hc=bool(is_h_commutative(C)),
            )
        )
    return records


def principal_congruences(S: Semigroup) -> list[Congruence]:
    """Distinct closures of single pairs (a, b), a < b, in first-seen order."""
    seen: dict[Partition, Congruence] = {}
    for a in S:
        for b in range(a + 1, S.order):
            k = congruence_closure(S, [(a, b)])
            seen.setdefault(k.partition, k)
    return list(seen.values())


def principal_joins(S: Semigroup) -> list[Congruence]:
    """Principal congruences together with all their pairwise joins, deduplicated."""
    base = principal_congruences(S)
    seen: dict[Partition, Congruence] = {k.partition: k for k in base}
    for i, k1 in enumerate(base):
        for k2 in base[i + 1:]:
            k = join(S, k1, k2)
            seen.setdefault(k.partition, k)
    return list(seen.values())
