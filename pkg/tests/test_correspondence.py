"""Realization and extraction: the two directions of the correspondence."""

import pytest

from crext.cochains import (
    Cochain3,
    cocycle_defect,
    coboundary,
    cohomologous,
    compute_h3,
    random_cocycle,
)
from crext.catring import check_2hom, check_ring_coherence, induced_maps
from crext.correspondence import (
    canonical_choices,
    coma_defects,
    equiv_from_coboundary,
    extract,
    random_choices,
    realize,
)
from crext.rings import Bimodule


def test_realize_zero_is_strict(pair_map):
    ring, bim = pair_map["z4/self"]
    M = realize(Cochain3(group=bim.group), ring, bim)
    zero = bim.group.zero()
    assert all(v == zero for v in M.additive.a_table.values())
    assert all(v == zero for v in M.m_table.values())
    assert all(v == zero for v in M.l_table.values())
    assert all(v == zero for v in M.r_table.values())


def test_realize_rejects_unnormalized(pair_map):
    ring, bim = pair_map["z2/self"]
    c = Cochain3(group=bim.group, dot={(0, 1, 1): (1,)})
    with pytest.raises(ValueError):
        realize(c, ring, bim)


def test_realize_of_non_cocycle_is_incoherent(pair_map):
    ring, bim = pair_map["z2/self"]
    c = Cochain3(group=bim.group, dot={(1, 1, 1): (1,)})
    assert cocycle_defect(c, ring, bim) != []
    M = realize(c, ring, bim)
    assert check_ring_coherence(M) != []


def test_canonical_roundtrip_is_exact(pairs, rng):
    for name, ring, bname, bim in pairs:
        for _ in range(5):
            phi = random_cocycle(ring, bim, rng)
            M = realize(phi, ring, bim)
            assert extract(M, canonical_choices(M)) == phi
            assert coma_defects(M, phi) == []


def test_random_choice_extraction_is_cohomologous(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    phi = random_cocycle(ring, bim, rng)
    M = realize(phi, ring, bim)
    for _ in range(3):
        ch = random_choices(M, rng)
        psi = extract(M, ch)
        assert cocycle_defect(psi, ring, bim) == []
        gamma = cohomologous(phi, psi, ring, bim)
        assert gamma is not None
        assert coboundary(gamma, ring, bim) == (psi - phi)


def test_equiv_from_coboundary_checks(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    phi = random_cocycle(ring, bim, rng)
    psi = random_cocycle(ring, bim, rng)
    gamma = cohomologous(phi, psi, ring, bim)
    if gamma is None:  # distinct classes: shift psi into phi's class
        psi = psi + compute_h3(ring, bim).h3_representatives[0]
        gamma = cohomologous(phi, psi, ring, bim)
    assert gamma is not None
    F = equiv_from_coboundary(phi, psi, gamma, ring, bim)
    assert check_2hom(F, symmetry=True) == []
    obj_map, pi1_map = induced_maps(F)
    assert tuple(obj_map) == tuple(range(ring.size))
    for b in bim.group.elements():
        assert pi1_map.apply(b) == b


def test_equiv_from_coboundary_rejects_wrong_gamma(pair_map, rng):
    ring, bim = pair_map["z4/self"]
    res = compute_h3(ring, bim)
    rep = res.h3_representatives[0]  # nontrivial class
    zero = Cochain3(group=bim.group)
    assert cohomologous(zero, rep, ring, bim) is None
    gamma = cohomologous(zero, zero, ring, bim)
    with pytest.raises(ValueError):
        equiv_from_coboundary(zero, rep, gamma, ring, bim)


def test_class_distinction_through_models(pair_map, rng):
    # desk-scale form of the bijection: on z4/self H3 has order 2, and
    # models realized from representatives of distinct classes have
    # characteristic cochains in distinct classes no matter which
    # representative choices are used to extract them.
    ring, bim = pair_map["z4/self"]
    res = compute_h3(ring, bim)
    assert res.h3_invariants == (2,)
    zero = Cochain3(group=bim.group)
    rep = res.h3_representatives[0]
    M0 = realize(zero, ring, bim)
    M1 = realize(rep, ring, bim)
    for _ in range(3):
        psi0 = extract(M0, random_choices(M0, rng))
        psi1 = extract(M1, random_choices(M1, rng))
        assert cohomologous(psi0, zero, ring, bim) is not None
        assert cohomologous(psi1, rep, ring, bim) is not None
        assert cohomologous(psi0, psi1, ring, bim) is None


def test_trivial_h3_realizes_single_class(pair_map, rng):
    # on z2z2/self H3 is trivial: every cocycle's model extracts back
    # into the zero class.
    ring, bim = pair_map["z2z2/self"]
    res = compute_h3(ring, bim)
    assert res.h3_invariants == ()
    zero = Cochain3(group=bim.group)
    phi = random_cocycle(ring, bim, rng)
    M = realize(phi, ring, bim)
    psi = extract(M, random_choices(M, rng))
    assert cohomologous(psi, zero, ring, bim) is not None


def test_realized_model_pi_matches_input(pair_map, rng):
    from crext.catring import pi0_ring, pi1_bimodule
    ring, bim = pair_map["f2x/self"]
    phi = random_cocycle(ring, bim, rng)
    M = realize(phi, ring, bim)
    r2 = pi0_ring(M, labels=ring.labels)
    assert r2.mul_table == ring.mul_table
    b2 = pi1_bimodule(M, ring=r2)
    assert b2.group.cyclic_orders == bim.group.cyclic_orders
