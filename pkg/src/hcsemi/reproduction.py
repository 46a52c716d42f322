"""Reproduction of the worked H-commutativity examples on the named fixtures.

Each claim is a small check returning ``(passed, detail)``.  ``run_claims``
evaluates all of them; a claim that raises counts as failed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .congruence import least_semilattice_congruence
from .constructors import direct_product, monogenic, s3_named, zero_direct_union
from .core import Semigroup, SubsetHandle, adjoin_identity, is_commutative
from .hcomm import hc_witness, is_h_commutative
from .relations import is_archimedean


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str


class World:
    """The fixtures, built once.  ``mutate`` swaps S3 for a cyclic group of order 6."""

    def __init__(self, mutate: bool = False) -> None:
        group = s3_named()
        if mutate:
            group = Semigroup(monogenic(1, 6).table, group.labels)
        self.C3 = monogenic(3, 1)
        self.S3 = group
        self.S = zero_direct_union(self.C3, group)
        self.U = zero_direct_union(adjoin_identity(self.C3), group)
        self.SxS = direct_product(self.S, self.S)
        self.T = direct_product(self.U, self.U)
        self.C3xS3 = direct_product(self.C3, group)
        # S sits inside U: everything except the adjoined identity (index 3).
        self.S_in_U = tuple(i if i < 3 else i + 1 for i in range(self.S.order))

    def pair_S(self, x: str, y: str) -> int:
        return self.S.index(x) * self.S.order + self.S.index(y)

    def pair_T(self, x: str, y: str) -> int:
        return self.U.index(x) * self.U.order + self.U.index(y)


def claim_order_10(w: World):
    return w.S.order == 10, f"|S| = {w.S.order}"


def claim_parts_hc(w: World):
    ok = is_commutative(w.C3) and bool(is_h_commutative(w.S3))
    return ok, "C3 commutative, S3 H-commutative"


def claim_S_hc(w: World):
    v = is_h_commutative(w.S)
    return v.holds, f"is_hc={v.holds}"


def claim_t1_t2(w: World):
    G = w.S3
    t1, t2 = G.index("t1"), G.index("t2")
    p12, p21 = G.table[t1][t2], G.table[t2][t1]
    ok = G.label(p12) == "c2" and G.label(p21) == "c" and p12 != p21
    return ok, f"t1t2={G.label(p12)} (1 3 2), t2t1={G.label(p21)} (1 2 3)"


def claim_aua_is_z(w: World):
    C = w.C3
    a, z = 0, 2
    ok = all(C.table[C.table[a][u]][a] == z for u in C)
    return ok, "a u a = z for every u in C3"


def claim_SxS_not_hc(w: World):
    v = is_h_commutative(w.SxS)
    expected = (w.pair_S("a", "t1"), w.pair_S("a", "t2"))
    ok = not v.holds and v.counterexample == expected
    shown = "none" if v.counterexample is None else "(%s,%s)" % tuple(w.SxS.label(i) for i in v.counterexample)
    return ok, f"first failing pair {shown}"


def claim_equation_unsolvable(w: World):
    P = w.SxS
    p, q = w.pair_S("a", "t1"), w.pair_S("a", "t2")
    t = P.table
    target = t[p][q]
    candidates = [None] + list(P)  # None is the adjoined identity
    solutions = [x for x in candidates if (t[q][p] if x is None else t[t[q][x]][p]) == target]
    ok = len(candidates) == 101 and not solutions
    return ok, f"{len(candidates)} candidates in (SxS)^1, {len(solutions)} solutions"


def claim_U_order(w: World):
    # the adjoined "1" is the identity of the C3 part only, not of all of U
    ok = w.U.order == 11 and w.U.label(3) == "1"
    ok = ok and all(
        w.U.table[w.S_in_U[i]][w.S_in_U[j]] == w.S_in_U[w.S.table[i][j]] for i in w.S for j in w.S
    )
    return ok, f"|U| = {w.U.order}, U = S plus identity"


def claim_T_hc(w: World):
    v = is_h_commutative(w.T)
    return w.T.order == 121 and v.holds, f"|T| = {w.T.order}, is_hc={v.holds}"


def claim_T_witness_recipe(w: World):
    U, T = w.U, w.T
    n = U.order
    group = {U.index(name) for name in ("e", "t1", "t2", "t3", "c", "c2")}
    e = U.index("e")
    one = U.index("1")
    inv = {g: next(h for h in group if U.table[g][h] == e) for g in group}

    def factor(p: int, u: int) -> int:
        if p in group and u in group:
            return U.table[U.table[U.table[inv[u]][p]][u]][inv[p]]
        return one

    t = T.table
    for a in T:
        p, q = divmod(a, n)
        for b in T:
            u, v = divmod(b, n)
            x = factor(p, u) * n + factor(q, v)
            if t[a][b] != t[t[b][x]][a]:
                return False, f"recipe fails at ({T.label(a)},{T.label(b)})"
    return True, "x=(y,z) with y=u^-1 p u p^-1 solves every pair"


def claim_SxS_inside_T(w: World):
    n = w.U.order
    members = tuple(w.S_in_U[i] * n + w.S_in_U[j] for i in w.S for j in w.S)
    H = SubsetHandle(w.T, members)
    v = is_h_commutative(H.materialize())
    return len(H) == 100 and not v.holds, f"embedded SxS has order {len(H)}, is_hc={v.holds}"


def _eta_class_of(w: World, element: int) -> tuple[int, ...]:
    eta = least_semilattice_congruence(w.T)
    return eta.partition.block_of(element)


def claim_eta_class(w: World):
    n = w.U.order
    block = _eta_class_of(w, w.pair_T("a", "t1"))
    c3 = [w.U.index(x) for x in ("a", "a2", "a3")]
    g = [w.U.index(x) for x in ("e", "t1", "t2", "t3", "c", "c2")]
    expected = tuple(sorted(u * n + v for u in c3 for v in g))
    return block == expected, f"eta-class of (a,t1) has {len(block)} elements"


def claim_eta_class_archimedean(w: World):
    C = SubsetHandle(w.T, _eta_class_of(w, w.pair_T("a", "t1"))).materialize()
    return is_archimedean(C), "each element divides a power of every other, both sides"


def claim_eta_class_not_hc(w: World):
    C = SubsetHandle(w.T, _eta_class_of(w, w.pair_T("a", "t1"))).materialize()
    p, q = C.index("(a,t1)"), C.index("(a,t2)")
    v = is_h_commutative(C)
    ok = not v.holds and hc_witness(C, p, q) is None and C.table == w.C3xS3.table
    return ok, f"standalone class is_hc={v.holds}; equals C3xS3: {C.table == w.C3xS3.table}"


CLAIMS: tuple[tuple[str, Callable[[World], tuple[bool, str]]], ...] = (
    ("S.order", claim_order_10),
    ("S.parts_hc", claim_parts_hc),
    ("S.hc", claim_S_hc),
    ("S3.t1t2_ne_t2t1", claim_t1_t2),
    ("C3.aua_is_zero", claim_aua_is_z),
    ("SxS.not_hc", claim_SxS_not_hc),
    ("SxS.equation_unsolvable", claim_equation_unsolvable),
    ("U.is_S_plus_identity", claim_U_order),
    ("T.hc", claim_T_hc),
    ("T.witness_recipe", claim_T_witness_recipe),
    ("T.contains_SxS_not_hc", claim_SxS_inside_T),
    ("T.eta_class_is_C3xS3", claim_eta_class),
    ("T.eta_class_archimedean", claim_eta_class_archimedean),
    ("T.eta_class_not_hc", claim_eta_class_not_hc),
)


def run_claims(mutate: bool = False) -> list[ClaimResult]:
    world = World(mutate)
    results = []
    for name, check in CLAIMS:
        try:
            passed, detail = check(world)
        except Exception as exc:  # a crashing claim is a failed claim
            passed, detail = False, f"error: {exc}"
        results.append(ClaimResult(name, bool(passed), detail))
    return results
