import random
from itertools import product

import pytest

from hcsemi import EnumerationSpec, Semigroup, all_semigroups, all_subsemigroups, cyclic_group, extensions, monogenic
from hcsemi.enumeration import (
    all_tables,
    all_tables_bruteforce,
    first_row_partitions,
    random_semigroup,
)
from hcsemi.errors import BudgetExceeded, CostGuard

import oracles


@pytest.mark.parametrize("n,count", [(1, 1), (2, 8), (3, 113)])
def test_counts_small(n, count):
    assert sum(1 for _ in all_semigroups(n)) == count


def test_pruned_equals_unpruned():
    for n in (1, 2, 3):
        assert list(all_tables(n)) == list(all_tables_bruteforce(n))


def test_stream_is_sorted_and_valid():
    tables = list(all_tables(3))
    assert tables == sorted(tables)
    assert all(oracles.associative(t) for t in tables)


def test_parallel_matches_sequential():
    assert list(all_tables(3, workers=2)) == list(all_tables(3))


def test_partitions_cover_the_stream():
    rows = first_row_partitions(3)
    firsts = sorted({t[0] for t in all_tables(3)})
    assert rows == firsts


def test_filters():
    assert sum(1 for _ in all_semigroups(EnumerationSpec(2, "commutative"))) == 6
    monoids = list(all_semigroups(EnumerationSpec(2, "monoid")))
    assert all(S.identity is not None for S in monoids) and len(monoids) == 4


def test_spec_guards():
    with pytest.raises(CostGuard):
        EnumerationSpec(6)
    assert EnumerationSpec(6, allow_large=True).order == 6
    with pytest.raises(ValueError):
        EnumerationSpec(3, "nope")


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(all_semigroups(EnumerationSpec(4, budget=100)))
    with pytest.raises(CostGuard):
        list(all_semigroups(EnumerationSpec(4, budget=100)))


def test_bruteforce_is_limited():
    with pytest.raises(CostGuard):
        next(all_tables_bruteforce(4))


def test_subsemigroups():
    assert [h.members for h in all_subsemigroups(Semigroup(((0,),)))] == [(0,)]
    C2 = cyclic_group(2)
    assert [h.members for h in all_subsemigroups(C2)] == [(C2.identity,), (0, 1)]
    assert [h.members for h in all_subsemigroups(monogenic(3, 1))] == [(2,), (1, 2), (0, 1, 2)]


def test_subsemigroups_match_bitmask_scan():
    for S in list(all_semigroups(3))[::4]:
        ours = sorted(h.members for h in all_subsemigroups(S))
        assert ours == sorted(oracles.closed_subsets(S))


def _extension_oracle(S, extra):
    n, total = S.order, S.order + extra
    cells = [(i, j) for i in range(total) for j in range(total) if i >= n or j >= n]
    out = []
    for vals in product(range(total), repeat=len(cells)):
        t = [list(row) + [0] * extra for row in S.table] + [[0] * total for _ in range(extra)]
        for (i, j), v in zip(cells, vals):
            t[i][j] = v
        if oracles.associative(t):
            out.append(tuple(map(tuple, t)))
    return sorted(out)


def test_extensions_of_trivial():
    ours = [T.table for T in extensions(Semigroup(((0,),)), 1)]
    order2 = [S.table for S in all_semigroups(2) if S.table[0][0] == 0]
    assert ours == order2 == _extension_oracle(Semigroup(((0,),)), 1)


def test_extensions_of_monogenic_2_1():
    S = monogenic(2, 1)
    ours = [T.table for T in extensions(S, 1)]
    assert ours == _extension_oracle(S, 1)  # the 3^5 = 243 candidate tables
    assert len(ours) == 10


def test_extension_guard():
    with pytest.raises(CostGuard):
        next(extensions(cyclic_group(2), 3))


def test_random_semigroup_is_deterministic_per_seed():
    a = random_semigroup(5, random.Random(3))
    b = random_semigroup(5, random.Random(3))
    assert a == b and oracles.associative(a.table)


@pytest.mark.slow
def test_order_5_count():
    assert sum(1 for _ in all_tables(5, workers=4)) == 183732


def test_budget_covers_the_whole_parallel_run():
    # order 4 visits exactly this many nodes in either mode
    assert sum(1 for _ in all_tables(4, budget=136152)) == 3492
    assert sum(1 for _ in all_tables(4, budget=136152, workers=2)) == 3492
    for workers in (1, 2):
        with pytest.raises(BudgetExceeded):
            list(all_tables(4, budget=136151, workers=workers))
