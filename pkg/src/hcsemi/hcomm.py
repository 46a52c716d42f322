"""H-commutativity: witnesses, verdicts and the structure results built on them."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .congruence import eta_class_semigroups, is_congruence, least_semilattice_congruence, quotient
from .core import Semigroup, classify, idempotents, is_commutative, is_regular_element, power
from .errors import InconsistentOrder, NoCofactor, NotHCommutative
from .relations import green, natural_leq, right_ideals


@dataclass(frozen=True)
class HcVerdict:
    holds: bool
    counterexample: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        if self.holds == (self.counterexample is not None):
            raise ValueError("a verdict holds exactly when it has no counterexample")

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class PowerWitness:
    base: int
    exponent: int
    cofactor: int


def unit_index(S: Semigroup) -> int:
    """Index of the identity of S^1: the existing identity, or n for an adjoined one."""
    return S.identity if S.identity is not None else S.order


def hc_witness(S: Semigroup, a: int, b: int) -> Optional[int]:
    """Least x in S^1 with ab = bxa; the identity is tried first.

    An adjoined identity is reported as index ``S.order``.
    """
    S.check(a, b)
    t = S.table
    ab = t[a][b]
    if t[b][a] == ab:
        return unit_index(S)
    row_b = t[b]
    for x in S:
        if t[row_b[x]][a] == ab:
            return x
    return None


def _bxa_sets(S: Semigroup) -> list[set[int]]:
    t = S.table
    return [set(t[b]) for b in S]


def is_h_commutative(S: Semigroup) -> HcVerdict:
    """Every ab equals some bxa with x in S^1; first failing (a, b) otherwise."""

    def compute() -> HcVerdict:
        t = S.table
        n = S.order
        bS = _bxa_sets(S)
        cols = [[t[r][a] for r in range(n)] for a in range(n)]
        for a in range(n):
            col_a = cols[a]
            row_a = t[a]
            for b in range(n):
                ab = row_a[b]
                if t[b][a] == ab:
                    continue
                if not any(col_a[r] == ab for r in bS[b]):
                    return HcVerdict(False, (a, b))
        return HcVerdict(True)

    return S.memo("hc", compute)


def is_h_commutative_tully(S: Semigroup) -> HcVerdict:
    """ab H ba for all a, b."""
    H = green(S).H
    t = S.table
    for a in S:
        for b in S:
            if not H.same(t[a][b], t[b][a]):
                return HcVerdict(False, (a, b))
    return HcVerdict(True)


@dataclass(frozen=True)
class HQuotientCheck:
    h_is_congruence: bool
    quotient_commutative: Optional[bool]


def h_congruence_commutative_quotient(S: Semigroup) -> HQuotientCheck:
    H = green(S).H
    if not is_congruence(S, H):
        return HQuotientCheck(False, None)
    Q, _ = quotient(S, H)
    return HQuotientCheck(True, is_commutative(Q))


@dataclass(frozen=True)
class CliffordProfile:
    """Five conditions, each computed on its own, that characterise semilattices of groups."""

    regular_equations: bool
    hc_and_regular: bool
    hc_and_regular_h_quotient: bool
    semilattice_of_groups: bool
    h_equals_eta: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.regular_equations,
            self.hc_and_regular,
            self.hc_and_regular_h_quotient,
            self.semilattice_of_groups,
            self.h_equals_eta,
        )

    def all_equal(self) -> bool:
        return len(set(self.as_tuple())) == 1


def clifford_profile(S: Semigroup) -> CliffordProfile:
    t = S.table
    regular = all(is_regular_element(S, a) for a in S)

    # for all a, b there are x, y in S (not S^1) with a = axa and ab = bya
    bS = _bxa_sets(S)
    eqs = regular and all(
        any(t[r][a] == t[a][b] for r in bS[b]) for a in S for b in S
    )

    hc = bool(is_h_commutative(S))
    hc_reg = hc and regular

    H = green(S).H
    hc_reg_quot = False
    if hc and is_congruence(S, H):
        Q, _ = quotient(S, H)
        hc_reg_quot = classify(Q).is_regular

    sog = all(classify(C).is_group for _, C in eta_class_semigroups(S))
    h_eta = H == least_semilattice_congruence(S).partition
    return CliffordProfile(eqs, hc_reg, hc_reg_quot, sog, h_eta)


def right_ideal_chain_index(S: Semigroup, a: int) -> int:
    """Least k with a^k S^1 = a^(k+1) S^1."""
    right = right_ideals(S)
    k, x = 1, a
    while True:
        nxt = S.table[x][a]
        if right[x] == right[nxt]:
            return k
        k, x = k + 1, nxt


def power_idempotent_witness(S: Semigroup, a: int) -> PowerWitness:
    """Least r with a^r S^1 = a^2r S^1, then least c with a^r = a^2r c.

    For H-commutative S, a^r c is idempotent and H-related to a^r.
    """
    S.check(a)
    if not is_h_commutative(S):
        raise NotHCommutative("power_idempotent_witness needs an H-commutative semigroup")
    right = right_ideals(S)
    t = S.table
    r = 1
    while True:
        ar = power(S, a, r)
        a2r = t[ar][ar]
        if right[ar] == right[a2r]:
            break
        r += 1
    row = t[a2r]
    for c in S:
        if row[c] == ar:
            return PowerWitness(a, r, c)
    raise NoCofactor(f"no c with a^{r} = a^{2 * r} c for a={a}")


def check_power_witness(S: Semigroup, w: PowerWitness) -> bool:
    t = S.table
    ar = power(S, w.base, w.exponent)
    e = t[ar][w.cofactor]
    return t[e][e] == e and green(S).H.same(ar, e)


def minimal_idempotent_divisor(S: Semigroup, b: int) -> Optional[int]:
    """Least idempotent e (natural order) with b = be = eb, if any."""
    S.check(b)
    t = S.table
    cands = [e for e in idempotents(S) if t[b][e] == b and t[e][b] == b]
    if not cands:
        return None
    for e in cands:
        if all(natural_leq(S, e, f) for f in cands):
            return e
    raise InconsistentOrder(f"idempotent divisors of {S.label(b)} have no least element")
