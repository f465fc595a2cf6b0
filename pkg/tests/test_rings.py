import pytest

from crext.catalog import (RINGS, catalog_bimodules, catalog_pairs,
                           cyclic_ring, dual_numbers_f2, product_ring)
from crext.groups import FiniteAbelianGroup
from crext.rings import Bimodule, FiniteRing, validate_bimodule, validate_ring


def test_catalog_rings_valid():
    for name, ring in RINGS.items():
        assert validate_ring(ring) == [], name


def test_catalog_bimodules_valid():
    for name, ring, bname, bim in catalog_pairs():
        assert bim.ring == ring
        assert validate_bimodule(bim) == [], (name, bname)


def test_catalog_size_bounds():
    for name, ring, bname, bim in catalog_pairs():
        assert ring.size <= 4
        assert bim.group.order <= 4
    assert len(catalog_pairs()) == 9
    assert len(catalog_pairs(max_ring=2)) == 2


def test_cyclic_ring_tables():
    r = cyclic_ring(4)
    assert r.zero == 0 and r.one == 1
    assert r.add(3, 2) == 1
    assert r.mul(3, 3) == 1
    assert r.neg(1) == 3
    assert r.index("2") == 2


def test_dual_numbers():
    r = dual_numbers_f2()
    x = r.index("x")
    assert r.mul(x, x) == r.zero
    one_plus_x = r.index("1+x")
    assert r.mul(one_plus_x, one_plus_x) == r.one
    assert r.add(r.one, x) == one_plus_x


def test_product_ring():
    r = product_ring(cyclic_ring(2), cyclic_ring(2))
    assert r.size == 4
    assert validate_ring(r) == []
    # idempotents multiply coordinatewise
    e1 = r.labels.index("(1,0)")
    assert r.mul(e1, e1) == e1


def test_validate_ring_witnesses():
    r = cyclic_ring(2)
    broken = FiniteRing(labels=r.labels, add_table=r.add_table,
                        mul_table=((0, 0), (0, 0)), neg_table=r.neg_table,
                        zero=r.zero, one=r.one)
    report = validate_ring(broken)
    assert any("unit" in w for w in report)


def test_validate_bimodule_witnesses():
    ring = cyclic_ring(2)
    G = FiniteAbelianGroup((2,))
    # action of 1 is not the identity
    bad = Bimodule.from_matrices(ring, G, [[[0]], [[0]]], [[[0]], [[0]]])
    report = validate_bimodule(bad)
    assert any("identity" in w for w in report)


def test_bimodule_actions():
    bims = catalog_bimodules("z4")
    b = bims["self"]
    assert b.act_left(3, (2,)) == (2,)
    assert b.act_right((3,), 2) == (2,)
    b2 = bims["mod2"]
    assert b2.act_left(2, (1,)) == (0,)
    assert b2.act_left(3, (1,)) == (1,)
