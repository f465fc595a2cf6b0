import pytest
from hypothesis import given, strategies as st

from crext.groups import FiniteAbelianGroup, GroupHomomorphism

orders = st.lists(st.integers(min_value=1, max_value=6), min_size=1,
                  max_size=3).map(tuple)


@given(orders, st.data())
def test_group_laws(cyc, data):
    G = FiniteAbelianGroup(cyc)
    els = list(G.elements())
    a = data.draw(st.sampled_from(els))
    b = data.draw(st.sampled_from(els))
    c = data.draw(st.sampled_from(els))
    assert G.add(a, b) == G.add(b, a)
    assert G.add(G.add(a, b), c) == G.add(a, G.add(b, c))
    assert G.add(a, G.zero()) == a
    assert G.add(a, G.neg(a)) == G.zero()
    assert G.sub(a, b) == G.add(a, G.neg(b))
    assert G.scale(0, a) == G.zero()
    assert G.scale(3, a) == G.add(a, G.add(a, a))


def test_order_and_elements():
    G = FiniteAbelianGroup((2, 3))
    assert G.order == 6
    assert len(list(G.elements())) == 6
    assert G.element_order((1, 0)) == 2
    assert G.element_order((1, 1)) == 6
    assert G.element_order(G.zero()) == 1


def test_generators():
    G = FiniteAbelianGroup((1, 4, 2))
    gens = G.generators()
    assert gens == [(0, 1, 0), (0, 0, 1)]
    span = {G.zero()}
    frontier = [G.zero()]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.add(x, g)
            if y not in span:
                span.add(y)
                frontier.append(y)
    assert len(span) == G.order


def test_hom_apply_and_compose():
    G = FiniteAbelianGroup((4,))
    H = FiniteAbelianGroup((2,))
    f = GroupHomomorphism(G, H, ((1,),))
    assert f.is_well_defined()
    assert f.apply((3,)) == (1,)
    g = GroupHomomorphism(H, H, ((1,),))
    assert g.compose(f).apply((2,)) == (0,)


def test_hom_not_well_defined():
    G = FiniteAbelianGroup((2,))
    H = FiniteAbelianGroup((4,))
    f = GroupHomomorphism(G, H, ((1,),))
    assert not f.is_well_defined()


def test_hom_shape_errors():
    G = FiniteAbelianGroup((2, 2))
    with pytest.raises(ValueError):
        GroupHomomorphism(G, G, ((1, 0),))
    with pytest.raises(ValueError):
        GroupHomomorphism(G, G, ((1,), (0,)))


def test_str():
    assert str(FiniteAbelianGroup((1,))) == "0"
    assert str(FiniteAbelianGroup((2, 4))) == "Z/2 x Z/4"
