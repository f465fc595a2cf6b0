import numpy as np
import sympy
from hypothesis import given, settings, strategies as st

from crext.groups import FiniteAbelianGroup, GroupHomomorphism
from crext.linalg import (kernel_generators, kernel_mixed, smith_normal_form,
                          solve_linear, solve_mixed, subgroup_contains,
                          subgroup_invariants, subquotient_invariants,
                          _kernel_mod_p, _kernel_mod_q)

small_matrix = st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.integers(min_value=1, max_value=4).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9),
                     min_size=m, max_size=m),
            min_size=n, max_size=n)))


@given(small_matrix)
@settings(max_examples=60, deadline=None)
def test_snf_against_sympy(rows):
    S, U, V = smith_normal_form(rows)
    A = sympy.Matrix(rows)
    Um, Vm = sympy.Matrix([list(r) for r in U]), sympy.Matrix(
        [list(r) for r in V])
    # transforms are unimodular and diagonalize A
    assert abs(Um.det()) == 1
    assert abs(Vm.det()) == 1
    prod = Um * A * Vm
    for i in range(prod.rows):
        for j in range(prod.cols):
            assert prod[i, j] == S[i][j]
    diag = [S[k][k] for k in range(min(len(S), len(S[0])))]
    for d0, d1 in zip(diag, diag[1:]):
        if d1:
            assert d0 and d1 % d0 == 0
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    expected = [abs(int(d)) for d in sympy_snf(A, domain=sympy.ZZ).diagonal()
                if d]
    got = [abs(d) for d in diag if d]
    assert got == expected


def _brute_kernel(M, q, m):
    from itertools import product
    A = np.asarray(M)
    out = set()
    for x in product(range(q), repeat=m):
        if not np.any(A @ np.array(x) % q):
            out.add(x)
    return out


def _span_mod(cols, q, m):
    from itertools import product
    if cols.shape[1] == 0:
        return {(0,) * m}
    out = set()
    for coef in product(range(q), repeat=cols.shape[1]):
        out.add(tuple(int(v) for v in (cols @ np.array(coef)) % q))
    return out


@given(st.sampled_from([2, 3, 4, 8, 9]),
       st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=3),
       st.data())
@settings(max_examples=40, deadline=None)
def test_kernel_mod_q_exhaustive(q, n, m, data):
    rows = data.draw(st.lists(
        st.lists(st.integers(min_value=0, max_value=q - 1),
                 min_size=m, max_size=m),
        min_size=n, max_size=n))
    p = 2 if q in (2, 4, 8) else 3
    e = {2: 1, 3: 1, 4: 2, 8: 3, 9: 2}[q]
    K = _kernel_mod_q(rows, p, e)
    assert _span_mod(K, q, m) == _brute_kernel(rows, q, m)


def test_kernel_mod_p_matches_mod_q():
    rng = np.random.default_rng(0)
    for _ in range(20):
        A = rng.integers(0, 5, size=(6, 4))
        K1 = _kernel_mod_p(A, 5)
        assert not np.any((A @ K1) % 5)
        brute = _brute_kernel(A, 5, 4)
        assert _span_mod(K1 % 5, 5, 4) == brute


def test_tall_system_shortcut():
    # many redundant rows: kernel must match the deduplicated system
    rng = np.random.default_rng(1)
    base = rng.integers(0, 4, size=(3, 4))
    A = np.vstack([base[rng.integers(0, 3)] for _ in range(50)])
    K = _kernel_mod_q(A, 2, 2)
    assert _span_mod(K, 4, 4) == _brute_kernel(base, 4, 4)


def test_solve_mixed_and_kernel_mixed():
    # the system must be a well-defined map of the mixed-modulus groups:
    # M[i][j] * col_orders[j] = 0 mod row_orders[i]
    from itertools import product
    M = [[2, 1, 0], [0, 3, 3]]
    row_orders = [4, 6]
    col_orders = [4, 4, 6]
    gens = kernel_mixed(M, row_orders, col_orders)
    brute = set()
    for x in product(range(4), range(4), range(6)):
        if all(sum(M[i][j] * x[j] for j in range(3)) % row_orders[i] == 0
               for i in range(2)):
            brute.add(x)
    # the generated subgroup equals the brute-force kernel
    G = FiniteAbelianGroup(tuple(col_orders))
    span = {G.zero()}
    frontier = [G.zero()]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = G.add(v, g)
            if w not in span:
                span.add(w)
                frontier.append(w)
    assert span == brute
    for b in brute:
        target = tuple(sum(M[i][j] * b[j] for j in range(3)) % row_orders[i]
                       for i in range(2))
        sol = solve_mixed(M, row_orders, col_orders, list(target))
        assert sol is not None
    assert solve_mixed([[2]], [4], [4], [1]) is None


def test_solve_linear_and_kernel_generators():
    G = FiniteAbelianGroup((4, 2))
    f = GroupHomomorphism(G, G, ((2, 0), (0, 1)))
    res = solve_linear(f, (2, 1))
    assert res.solvable
    assert f.apply(res.solution) == (2, 1)
    gens = kernel_generators(f)
    for g in gens:
        assert f.apply(g) == G.zero()
    assert not solve_linear(f, (1, 0)).solvable


def test_subgroup_membership_and_invariants():
    G = FiniteAbelianGroup((4, 4))
    gens = [(2, 0), (0, 2)]
    assert subgroup_contains(G, gens, (2, 2))
    assert not subgroup_contains(G, gens, (1, 0))
    assert subgroup_invariants(G, gens) == [2, 2]
    assert subgroup_invariants(G, []) == []


def test_subquotient_invariants():
    G = FiniteAbelianGroup((4,))
    res = subquotient_invariants(G, [(1,)], [(2,)])
    assert res.invariant_factors == [2]
    res = subquotient_invariants(G, [(2,)], [(2,)])
    assert res.invariant_factors == []
