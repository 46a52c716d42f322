import pytest

from hcsemi import (
    FIXTURES,
    Semigroup,
    cyclic_group,
    direct_product,
    fixture,
    idempotents,
    is_h_commutative,
    monogenic,
    s3_named,
    symmetric_group,
    zero_direct_union,
)
from hcsemi.core import is_group
from hcsemi.enumeration import all_semigroups
from hcsemi.errors import OrderOverflow, UnsupportedOrder


def test_monogenic_shapes():
    C = monogenic(3, 1)
    assert C.labels == ("a", "a2", "a3")
    assert C.table[2][0] == 2
    assert monogenic(1, 5).table == cyclic_group(5).table
    M = monogenic(2, 1)
    assert M.order == 2 and M.table[1][1] == 1


def test_monogenic_is_generated_by_a():
    for m in range(1, 4):
        for r in range(1, 4):
            S = monogenic(m, r)
            x, seen = 0, {0}
            for _ in range(S.order + 2):
                x = S.table[x][0]
                seen.add(x)
            assert seen == set(range(m + r - 1))
            # a^(m+r) = a^m
            assert S.table[m + r - 2][0] == m - 1


def test_symmetric_groups():
    assert symmetric_group(1).order == 1
    assert is_group(symmetric_group(2))
    for n in range(1, 5):
        G = symmetric_group(n)
        assert is_group(G)
    with pytest.raises(UnsupportedOrder):
        symmetric_group(6)


def test_s3_named_products():
    G = s3_named()
    assert G.labels == ("e", "t1", "t2", "t3", "c", "c2")
    t = G.table
    t1, t2, c, c2 = (G.index(x) for x in ("t1", "t2", "c", "c2"))
    assert t[t1][t2] == c2 and t[t2][t1] == c
    assert t[t1][t1] == G.index("e")
    assert t[c][c] == c2


def test_direct_product(ex33):
    P = direct_product(ex33, ex33)
    assert P.order == 100
    assert P.label(0) == "(a,a)"
    with pytest.raises(OrderOverflow):
        direct_product(P, P)


def test_zero_direct_union_of_trivials():
    T = Semigroup(((0,),))
    Z = zero_direct_union(T, T)
    assert Z.order == 3 and len(idempotents(Z)) == 3 and Z.zero == 2
    assert Z.table[0][1] == 2


def test_zero_direct_union_preserves_hc():
    small = [S for n in (1, 2) for S in all_semigroups(n)]
    hc = [S for S in small if is_h_commutative(S)]
    for A in hc:
        for B in hc:
            assert is_h_commutative(zero_direct_union(A, B))


def test_fixture_orders():
    orders = {name: fixture(name).order for name in FIXTURES}
    assert orders == {"ex33_S": 10, "ex35_U": 11, "ex35_T": 121, "ex36_etaclass": 18}
    with pytest.raises(KeyError):
        fixture("nope")


def test_fixture_layout(ex33):
    assert ex33.labels == ("a", "a2", "a3", "e", "t1", "t2", "t3", "c", "c2", "0")
    assert fixture("ex35_U").labels[3] == "1"
