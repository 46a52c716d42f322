import pytest
from hypothesis import given, settings, strategies as st

from hcsemi import (
    Partition,
    Semigroup,
    congruence_closure,
    cyclic_group,
    eta_class_report,
    green,
    least_combinatorial_congruence,
    least_semilattice_congruence,
    quotient,
    rho_partition,
)
from hcsemi.congruence import (
    Congruence,
    identity_congruence,
    is_congruence,
    join,
    principal_congruences,
    principal_joins,
    universal_congruence,
)
from hcsemi.core import classify
from hcsemi.enumeration import all_semigroups
from hcsemi.errors import NotACongruence

import oracles

ORDER_3 = list(all_semigroups(3))


def _blocks(p):
    return frozenset(frozenset(b) for b in p.blocks)


def test_identity_and_universal_are_congruences(ex33):
    assert is_congruence(ex33, Partition.identity(10))
    assert is_congruence(ex33, Partition.universal(10))


def test_h_is_not_always_a_congruence():
    # H is compatible in every semigroup of order 3; the first failures appear at order 4
    assert all(is_congruence(S, green(S).H) for S in ORDER_3)
    order4 = list(all_semigroups(4))
    ours = [not is_congruence(S, green(S).H) for S in order4]
    theirs = [not oracles.is_congruence_blocks(S, oracles.h_classes(S)) for S in order4]
    assert ours == theirs
    assert sum(ours) == 24


@pytest.mark.parametrize("S", ORDER_3[::7], ids=lambda S: str(S.table))
def test_is_congruence_matches_definition(S):
    for part in oracles.set_partitions(range(S.order)):
        p = Partition.from_blocks(S.order, part)
        assert is_congruence(S, p) == oracles.is_congruence_blocks(S, [frozenset(b) for b in part])


def test_congruence_rejects_incompatible_partition(c31):
    with pytest.raises(NotACongruence):
        Congruence(c31, Partition.from_blocks(3, [[0, 1], [2]]))


def test_closure_examples(c31):
    assert congruence_closure(c31, []) == identity_congruence(c31)
    C2 = cyclic_group(2)
    assert congruence_closure(C2, [(0, 1)]) == universal_congruence(C2)
    assert len(congruence_closure(c31, [(0, 1)])) == 1


def test_closure_is_least():
    for S in ORDER_3[::5]:
        for a in S:
            for b in S:
                k = congruence_closure(S, [(a, b)])
                for part in oracles.set_partitions(range(S.order)):
                    blocks = [frozenset(x) for x in part]
                    cls = oracles.block_map(blocks)
                    if b in cls[a] and oracles.is_congruence_blocks(S, blocks):
                        assert all(y in cls[x] for x, y in k.pairs())


def test_join(c31):
    k1 = congruence_closure(c31, [(1, 2)])
    k2 = congruence_closure(c31, [(0, 1)])
    assert join(c31, k1, k2) == universal_congruence(c31)
    assert join(c31, k1, k2).contains(k1)


def test_quotients(ex33):
    Q, proj = quotient(ex33, universal_congruence(ex33))
    assert Q.order == 1 and set(proj) == {0}
    eta = least_semilattice_congruence(ex33)
    Q, _ = quotient(ex33, eta)
    assert Q.order == 3 and classify(Q).is_semilattice
    with pytest.raises(NotACongruence):
        quotient(Semigroup(((0, 1, 2), (1, 2, 2), (2, 2, 2))), Partition.from_blocks(3, [[0, 1], [2]]))


def test_eta_examples(s3, semilattice2, ex33):
    assert least_semilattice_congruence(semilattice2).partition.is_trivial
    assert len(least_semilattice_congruence(s3)) == 1
    blocks = [[ex33.label(i) for i in b] for b in least_semilattice_congruence(ex33).blocks]
    assert blocks == [["a", "a2", "a3"], ["e", "t1", "t2", "t3", "c", "c2"], ["0"]]


@pytest.mark.parametrize("S", ORDER_3, ids=lambda S: str(S.table))
def test_eta_matches_partition_meet(S):
    assert _blocks(least_semilattice_congruence(S).partition) == oracles.least_semilattice_congruence(S)


def test_rho(s3, semilattice2, ex33):
    assert len(rho_partition(s3)) == 1
    assert rho_partition(semilattice2).is_trivial
    assert rho_partition(ex33) == least_semilattice_congruence(ex33).partition


def test_least_combinatorial(s3, semilattice2, ex33):
    assert least_combinatorial_congruence(semilattice2).partition.is_trivial
    assert len(least_combinatorial_congruence(s3)) == 1
    k = least_combinatorial_congruence(ex33)
    assert k.partition == green(ex33).H
    Q, _ = quotient(ex33, k)
    assert green(Q).H.is_trivial


def test_eta_class_report(ex33, semilattice2):
    recs = eta_class_report(ex33)
    assert [len(r.members) for r in recs] == [3, 6, 1]
    assert recs[0].is_archimedean and recs[0].idempotent_count == 1 and not recs[0].is_group
    assert recs[1].is_group and recs[2].is_group
    for r in eta_class_report(semilattice2):
        assert len(r.members) == 1 and r.is_group


def test_principal_congruences(c31):
    assert principal_congruences(Semigroup(((0,),))) == []
    assert len(principal_congruences(cyclic_group(2))) == 1
    ks = principal_congruences(c31)
    assert [k.blocks for k in ks] == [((0, 1, 2),), ((0,), (1, 2))]
    assert all(isinstance(k, Congruence) for k in principal_joins(c31))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ORDER_3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_join_is_commutative_and_contains_both(S, a, b, c, d):
    k1 = congruence_closure(S, [(a, b)])
    k2 = congruence_closure(S, [(c, d)])
    j = join(S, k1, k2)
    assert j == join(S, k2, k1)
    assert j.contains(k1) and j.contains(k2)
