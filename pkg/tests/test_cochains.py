import random

import pytest

from crext.cochains import (CapacityError, Cochain2, Cochain3,
                            all_positions, check_normalized, coboundary,
                            cochain2_from_vector, cochain2_to_vector,
                            cochain3_from_vector, cochain3_to_vector,
                            cocycle_defect, cohomologous, compute_h3,
                            cross_effect, equation_defect, free_positions,
                            gamma_positions, is_cocycle,
                            plus_position_forced, random_cocycle,
                            z3_generators)


def _random_gamma(ring, bim, rng, normalized=True):
    vec = []
    for comp, key in gamma_positions(ring):
        for j in range(bim.group.rank):
            if normalized and 0 in key:
                vec.append(0)
            else:
                vec.append(rng.randrange(bim.group.cyclic_orders[j]))
    return cochain2_from_vector(tuple(vec), ring, bim.group)


def test_free_positions_z2(pair_map):
    ring, bim = pair_map["z2/self"]
    pos = free_positions(ring)
    # 1 free triple per dot-type component, 16 phi_plus positions minus
    # the 7 forced by the five vanishing patterns
    assert sum(1 for comp, _ in pos if comp != "plus") == 3
    assert sum(1 for comp, _ in pos if comp == "plus") == 6
    assert len(pos) == 9


def test_plus_patterns():
    # zero row, zero column and zero anti-diagonal force the value
    assert plus_position_forced((0, 0, 1, 1), 0)   # top row
    assert plus_position_forced((1, 1, 0, 0), 0)   # bottom row
    assert plus_position_forced((0, 1, 0, 1), 0)   # left column
    assert plus_position_forced((1, 0, 1, 0), 0)   # right column
    assert plus_position_forced((1, 0, 0, 1), 0)   # anti-diagonal
    assert not plus_position_forced((1, 1, 1, 1), 0)
    assert not plus_position_forced((0, 1, 1, 0), 0)


def test_check_normalized_witnesses(pair_map):
    ring, bim = pair_map["z2/self"]
    G = bim.group
    c = Cochain3(group=G, dot={(0, 1, 1): (1,)})
    assert check_normalized(c, ring)
    c = Cochain3(group=G, plus={(1, 0, 0, 1): (1,)})
    assert check_normalized(c, ring)
    c = Cochain3(group=G, plus={(1, 1, 1, 1): (1,)})
    assert check_normalized(c, ring) == []


def test_cochain_arithmetic(pair_map):
    ring, bim = pair_map["z3/self"]
    rng = random.Random(0)
    a = random_cocycle(ring, bim, rng)
    b = random_cocycle(ring, bim, rng)
    assert (a + b) - b == a
    assert a - a == Cochain3(group=bim.group)
    assert (a - a).is_zero()


def test_vector_roundtrip(pair_map, rng):
    for key in ("z3/self", "f2x/self"):
        ring, bim = pair_map[key]
        pos = free_positions(ring)
        c = random_cocycle(ring, bim, rng)
        vec = cochain3_to_vector(c, pos, bim.group)
        assert cochain3_from_vector(vec, pos, bim.group) == c
        g = _random_gamma(ring, bim, rng, normalized=False)
        gv = cochain2_to_vector(g, ring, bim.group)
        g2 = cochain2_from_vector(gv, ring, bim.group)
        assert g2.gdot == g.gdot and g2.gplus == g.gplus


def test_cross_effect(pair_map):
    ring, bim = pair_map["z4/self"]
    G = bim.group
    f = lambda x: G.reduce((x * x,))
    # cref f(x,y) = f(x) + f(y) - f(x+y)
    assert cross_effect(f, 1, 2, ring.add, G) == G.reduce((1 + 4 - 9,))


def test_equation_defect_arity(pair_map):
    ring, bim = pair_map["z2/self"]
    c = Cochain3(group=bim.group)
    assert equation_defect(c, ring, bim, "E1", (1, 1, 1, 1)) == (0,)
    with pytest.raises(ValueError):
        equation_defect(c, ring, bim, "E8", (1, 1))


def test_zero_cochain_is_cocycle(pairs):
    for name, ring, bname, bim in pairs:
        c = Cochain3(group=bim.group)
        assert is_cocycle(c, ring, bim), (name, bname)
        assert cocycle_defect(c, ring, bim) == []


def test_random_cocycles_are_cocycles(pairs, rng):
    for name, ring, bname, bim in pairs:
        for _ in range(3):
            c = random_cocycle(ring, bim, rng)
            assert check_normalized(c, ring) == []
            assert is_cocycle(c, ring, bim), (name, bname)


def test_coboundary_of_normalized_gamma(pair_map, rng):
    for key in ("z3/self", "z4/self", "f2x/quot2"):
        ring, bim = pair_map[key]
        for _ in range(5):
            g = _random_gamma(ring, bim, rng)
            img = coboundary(g, ring, bim)
            assert check_normalized(img, ring) == []
            assert is_cocycle(img, ring, bim)


def test_cocycle_defect_rejects_unnormalized(pair_map):
    ring, bim = pair_map["z2/self"]
    c = Cochain3(group=bim.group, dot={(0, 1, 1): (1,)})
    with pytest.raises(ValueError):
        cocycle_defect(c, ring, bim)
    assert cocycle_defect(c, ring, bim, skip_normalization=True) != []


def test_cocycle_defect_localizes(pair_map):
    ring, bim = pair_map["z3/self"]
    gens = z3_generators(ring, bim)
    pos = free_positions(ring)
    # perturb a cocycle off the kernel: some equation must fire
    c = cochain3_from_vector(gens[0], pos, bim.group)
    bad = c + Cochain3(group=bim.group, dot={(1, 1, 1): (1,)})
    defects = (cocycle_defect(bad, ring, bim)
               if check_normalized(bad, ring) == [] else [])
    if check_normalized(bad, ring) == []:
        assert defects
        assert all(d.value != bim.group.zero() for d in defects)


def test_cohomologous_difference_is_coboundary(pair_map, rng):
    ring, bim = pair_map["z3/self"]
    c = random_cocycle(ring, bim, rng)
    g = _random_gamma(ring, bim, rng)
    c2 = c + coboundary(g, ring, bim)
    found = cohomologous(c, c2, ring, bim)
    assert found is not None
    assert coboundary(found, ring, bim) == c2 - c


def test_cohomologous_distinguishes_classes(pair_map):
    ring, bim = pair_map["z4/self"]
    res = compute_h3(ring, bim)
    assert res.h3_invariants == (2,)
    rep = res.h3_representatives[0]
    zero = Cochain3(group=bim.group)
    assert cohomologous(zero, rep, ring, bim) is None


def test_cohomologous_rejects_non_cocycle(pair_map):
    ring, bim = pair_map["z2/self"]
    bad = Cochain3(group=bim.group, dot={(1, 1, 1): (1,)})
    assert cocycle_defect(bad, ring, bim)
    with pytest.raises(ValueError):
        cohomologous(bad, bad, ring, bim)


def test_enumeration_capacity_error(pair_map):
    ring, bim = pair_map["z4/self"]
    with pytest.raises(CapacityError):
        compute_h3(ring, bim, method="enumeration")


def test_positions_partition(pairs):
    for name, ring, bname, bim in pairs:
        free = set(free_positions(ring))
        everything = set(all_positions(ring))
        assert free <= everything
        n = ring.size
        assert len(everything) == 3 * n**3 + n**4
