"""Skeletal categorical rings: coherence, pi0/pi1, obstruction, 2-homs."""

import pytest

from crext.catalog import regular_bimodule_cyclic
from crext.catgroup import make_catgroup
from crext.catring import (
    check_2hom,
    check_ring_coherence,
    induced_maps,
    make_catring,
    obstruction,
    pi0_ring,
    pi1_bimodule,
)
from crext.cochains import Cochain3, random_cocycle
from crext.correspondence import realize, roundtrip_2hom


def _strict_catring(ring, bim):
    G = make_catgroup(obj_add=ring.add_table, obj_neg=ring.neg_table,
                      obj_zero=ring.zero, pi1=bim.group)
    mor_mul = {}
    for x in range(ring.size):
        for y in range(ring.size):
            for al in bim.group.elements():
                for be in bim.group.elements():
                    mor_mul[(x, y, al, be)] = bim.group.add(
                        bim.act_right(al, y), bim.act_left(x, be))
    return make_catring(additive=G, obj_mul=ring.mul_table,
                        obj_one=ring.one,
                        mor_mul=lambda x, y, al, be: mor_mul[(x, y, al, be)])


def test_strict_catring_is_coherent():
    bim = regular_bimodule_cyclic(4)
    M = _strict_catring(bim.ring, bim)
    assert check_ring_coherence(M, structure=True) == []


def test_realized_models_are_coherent(pair_map, rng):
    for key in ("z4/self", "f2x/quot2", "z3/self"):
        ring, bim = pair_map[key]
        phi = random_cocycle(ring, bim, rng)
        M = realize(phi, ring, bim)
        assert check_ring_coherence(M, structure=True) == []


def test_broken_multiplicator_is_detected(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    phi = random_cocycle(ring, bim, rng)
    M = realize(phi, ring, bim)
    m_table = dict(M.m_table)
    m_table[(1, 1, 1)] = bim.group.add(m_table[(1, 1, 1)], (1,))
    N = M.__class__(additive=M.additive, obj_mul=M.obj_mul,
                    obj_one=M.obj_one, mor_mul=M.mor_mul, m_table=m_table,
                    lunit_table=M.lunit_table, runit_table=M.runit_table,
                    l_table=M.l_table, r_table=M.r_table)
    assert check_ring_coherence(N) != []


def test_pi0_pi1_recover_ring_and_bimodule(pair_map, rng):
    for key in ("z4/mod2", "f2x/self"):
        ring, bim = pair_map[key]
        phi = random_cocycle(ring, bim, rng)
        M = realize(phi, ring, bim)
        r2 = pi0_ring(M, labels=ring.labels)
        assert r2.add_table == ring.add_table
        assert r2.mul_table == ring.mul_table
        assert (r2.zero, r2.one) == (ring.zero, ring.one)
        b2 = pi1_bimodule(M, ring=r2)
        assert b2.group.cyclic_orders == bim.group.cyclic_orders
        for r in range(ring.size):
            for v in bim.group.elements():
                assert b2.act_left(r, v) == bim.act_left(r, v)
                assert b2.act_right(v, r) == bim.act_right(v, r)


def test_obstruction_vanishes_on_realized_models(pair_map, rng):
    for key in ("z2/self", "z4/self", "z2z2/proj2"):
        ring, bim = pair_map[key]
        phi = random_cocycle(ring, bim, rng)
        M = realize(phi, ring, bim)
        assert obstruction(M, assert_invariants=True) == bim.group.zero()


def test_obstruction_invariant_assertions(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    M = realize(Cochain3(group=bim.group), ring, bim)
    G = M.additive
    c_table = dict(G.c_table)
    c_table[(0, 0)] = (1,)  # order 4: not 2-torsion
    H = G.__class__(obj_add=G.obj_add, obj_neg=G.obj_neg,
                    obj_zero=G.obj_zero, pi1=G.pi1, mor_add=G.mor_add,
                    a_table=G.a_table, c_table=c_table,
                    lambda_table=G.lambda_table, rho_table=G.rho_table,
                    iota_table=G.iota_table)
    N = M.__class__(additive=H, obj_mul=M.obj_mul, obj_one=M.obj_one,
                    mor_mul=M.mor_mul, m_table=M.m_table,
                    lunit_table=M.lunit_table, runit_table=M.runit_table,
                    l_table=M.l_table, r_table=M.r_table)
    assert obstruction(N) == (1,)
    with pytest.raises(ValueError):
        obstruction(N, assert_invariants=True)


def test_identity_2hom_on_realized_models(pair_map, rng):
    for key in ("z4/self", "z2z2/self"):
        ring, bim = pair_map[key]
        phi = random_cocycle(ring, bim, rng)
        M = realize(phi, ring, bim)
        F = roundtrip_2hom(M, ring=ring, bim=bim)
        assert check_2hom(F, symmetry=True) == []
        obj_map, pi1_map = induced_maps(F)
        assert tuple(obj_map) == tuple(range(ring.size))
        for b in bim.group.elements():
            assert pi1_map.apply(b) == b


def test_2hom_with_wrong_fdot_is_rejected(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    phi = random_cocycle(ring, bim, rng)
    M = realize(phi, ring, bim)
    F = roundtrip_2hom(M, ring=ring, bim=bim)
    fdot = dict(F.fdot)
    fdot[(1, 1)] = bim.group.add(fdot[(1, 1)], (1,))
    bad = F.__class__(source=F.source, target=F.target, obj_map=F.obj_map,
                      mor_map=F.mor_map, fplus=F.fplus, fdot=fdot, f1=F.f1)
    assert check_2hom(bad) != []
