"""Exact linear algebra over the integers and over finite abelian groups.

Two layers:

* ``smith_normal_form`` -- classic exact integer Smith normal form with
  unimodular transforms, for desk-scale matrices.

* a per-prime-power engine (numpy, all arithmetic mod p^e) used to solve
  linear systems, compute kernels and subquotient invariant factors over
  finite abelian groups without integer coefficient blowup.  Mixed cyclic
  moduli are handled by scaling each constraint row into a common modulus
  and splitting along primes (CRT).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from .groups import FiniteAbelianGroup, GroupHomomorphism


# ---------------------------------------------------------------------------
# integer Smith normal form
# ---------------------------------------------------------------------------


def smith_normal_form(matrix):
    """Return (S, U, V) with U*A*V = S, S diagonal with divisibility chain.

    U and V are unimodular (built from elementary operations only).  All
    arithmetic is exact; matrices are given as sequences of rows.
    """
    S = [list(map(int, row)) for row in matrix]
    n = len(S)
    m = len(S[0]) if n else 0
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, c):
        S[dst] = [a + c * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def addmul_col(dst, src, c):
        for row in S:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    k = 0
    while k < min(n, m):
        # find a nonzero pivot of minimal absolute value in the trailing block
        piv = None
        best = None
        for i in range(k, n):
            for j in range(k, m):
                a = S[i][j]
                if a and (best is None or abs(a) < best):
                    best = abs(a)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        if S[k][k] < 0:
            negate_row(k)

        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, n):
                if S[i][k]:
                    q = S[i][k] // S[k][k]
                    addmul_row(i, k, -q)
                    if S[i][k]:
                        # remainder smaller than pivot: promote it
                        swap_rows(k, i)
                        if S[k][k] < 0:
                            negate_row(k)
                        dirty = True
            for j in range(k + 1, m):
                if S[k][j]:
                    q = S[k][j] // S[k][k]
                    addmul_col(j, k, -q)
                    if S[k][j]:
                        swap_cols(k, j)
                        dirty = True
        # enforce divisibility of the remaining block by the pivot
        d = S[k][k]
        offender = None
        for i in range(k + 1, n):
            for j in range(k + 1, m):
                if S[i][j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            addmul_row(k, offender, 1)
            continue  # redo pivot k with the merged row
        k += 1

    return (
        tuple(tuple(row) for row in S),
        tuple(tuple(row) for row in U),
        tuple(tuple(row) for row in V),
    )


def _factorint(n: int) -> dict[int, int]:
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Smith form mod a prime power
# ---------------------------------------------------------------------------


def _val_array(A, p, e, q):
    """p-adic valuation of each entry of A mod q=p^e, capped at e."""
    val = np.full(A.shape, e, dtype=np.int64)
    cur = A % q
    for k in range(e):
        mask = (cur % p != 0) & (val == e)
        val[mask] = k
        cur = cur // p
    return val


def _snf_mod_q(M, p, e, track_u=True):
    """Diagonalize M mod q=p^e: returns (dvals, U, V, Uinv).

    (U @ M @ V) % q is diagonal with entries dvals (powers of p).  U, V are
    invertible mod q and Uinv is the inverse of U mod q.  Trailing diagonal
    entries that vanish mod q are not listed in dvals.  With
    ``track_u=False`` the (potentially huge) row-operation matrices are not
    maintained and U, Uinv are returned as None; the kernel computation
    only needs V.
    """
    q = p**e
    A = np.asarray(M, dtype=np.int64) % q
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    A = A.copy()
    n, m = A.shape
    if track_u:
        U = np.eye(n, dtype=np.int64)
        Uinv = np.eye(n, dtype=np.int64)
    else:
        U = Uinv = None
    V = np.eye(m, dtype=np.int64)
    dvals = []
    for k in range(min(n, m)):
        sub = A[k:, k:]
        val = _val_array(sub, p, e, q)
        vmin = int(val.min()) if sub.size else e
        if vmin >= e:
            break
        i, j = np.unravel_index(int(np.argmin(val)), val.shape)
        i += k
        j += k
        if i != k:
            A[[k, i]] = A[[i, k]]
            if track_u:
                U[[k, i]] = U[[i, k]]
                Uinv[:, [k, i]] = Uinv[:, [i, k]]
        if j != k:
            A[:, [k, j]] = A[:, [j, k]]
            V[:, [k, j]] = V[:, [j, k]]
        pv = p**vmin
        unit = int(A[k, k]) // pv % q
        uinv = pow(unit, -1, q)
        A[k, :] = (A[k, :] * uinv) % q
        if track_u:
            U[k, :] = (U[k, :] * uinv) % q
            Uinv[:, k] = (Uinv[:, k] * unit) % q
        if k + 1 < n:
            f = (A[k + 1 :, k] // pv) % q
            A[k + 1 :, :] = (A[k + 1 :, :] - np.outer(f, A[k, :])) % q
            if track_u:
                U[k + 1 :, :] = (U[k + 1 :, :] - np.outer(f, U[k, :])) % q
                Uinv[:, k] = (Uinv[:, k] + Uinv[:, k + 1 :] @ f) % q
        if k + 1 < m:
            g = (A[k, k + 1 :] // pv) % q
            A[:, k + 1 :] = (A[:, k + 1 :] - np.outer(A[:, k], g)) % q
            V[:, k + 1 :] = (V[:, k + 1 :] - np.outer(V[:, k], g)) % q
        dvals.append(pv)
    return dvals, U, V, Uinv


def _kernel_mod_p(M, p):
    """Kernel basis mod a prime via row echelon reduction (row ops only)."""
    A = (np.asarray(M, dtype=np.int64) % p).copy()
    n, m = A.shape
    pivots = []
    r = 0
    for j in range(m):
        if r == n:
            break
        nz = np.nonzero(A[r:, j])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, j]), -1, p)
        if inv != 1:
            A[r, j:] = (A[r, j:] * inv) % p
        if r + 1 < n:
            A[r + 1 :, j:] = (
                A[r + 1 :, j:] - np.outer(A[r + 1 :, j], A[r, j:])
            ) % p
        pivots.append(j)
        r += 1
    for ri in range(len(pivots) - 1, -1, -1):
        j = pivots[ri]
        if ri:
            A[:ri, j:] = (A[:ri, j:] - np.outer(A[:ri, j], A[ri, j:])) % p
    pset = set(pivots)
    free = [j for j in range(m) if j not in pset]
    K = np.zeros((m, len(free)), dtype=np.int64)
    for idx, j in enumerate(free):
        K[j, idx] = 1
        if pivots:
            K[pivots, idx] = (-A[: len(pivots), j]) % p
    return K


def _kernel_mod_q(M, p, e):
    """Generators (columns) of {x in (Z/q)^m : Mx = 0 mod q}."""
    q = p**e
    A = np.asarray(M, dtype=np.int64)
    n, m = A.shape
    if n > 3 * m:
        # Tall system: the kernel of any row subset contains the full
        # kernel, so diagonalize only a slice and refine the candidate
        # generators against the remaining rows in one matrix product.
        K = _kernel_mod_q(A[: 3 * m] % q, p, e)
        if K.shape[1] == 0:
            return K
        B = (A % q) @ K % q
        B = B[np.any(B, axis=1)]
        if B.size == 0:
            return K
        B = np.unique(B, axis=0)
        K2 = _kernel_mod_q(B, p, e)
        return (K @ K2) % q
    if e == 1:
        return _kernel_mod_p(A, p)
    dvals, _U, V, _Ui = _snf_mod_q(A, p, e, track_u=False)
    cols = []
    for k in range(m):
        d = dvals[k] if k < len(dvals) else q
        mult = q // d
        if mult % q == 0:
            continue  # d == 1: kernel contribution is trivial
        cols.append((V[:, k] * mult) % q)
    if not cols:
        return np.zeros((m, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def _solve_mod_q(M, b, p, e):
    """One x with Mx = b mod q, or None."""
    q = p**e
    A = np.asarray(M, dtype=np.int64)
    n, m = A.shape
    dvals, U, V, _Ui = _snf_mod_q(A, p, e)
    c = (U @ (np.asarray(b, dtype=np.int64) % q)) % q
    y = np.zeros(m, dtype=np.int64)
    for k in range(n):
        if k < len(dvals) and k < m:
            d = dvals[k]
            if c[k] % d:
                return None
            y[k] = (c[k] // d) % q
        else:
            if c[k] % q:
                return None
    return (V @ y) % q


# ---------------------------------------------------------------------------
# systems over finite abelian groups (mixed cyclic moduli)
# ---------------------------------------------------------------------------


def _exponent(orders) -> int:
    out = 1
    for d in orders:
        out = lcm(out, d)
    return out


def _row_scales(row_orders, p, e):
    """Scale factor turning a row mod c into a row mod p^e; None if trivial.

    A constraint mod c is equivalent, at the prime p, to the constraint
    p^(e - v_p(c)) * row = ... mod p^e.  Rows whose modulus has no p-part
    impose nothing mod p^e.
    """
    out = []
    for c in row_orders:
        vp = 0
        while c % p == 0:
            c //= p
            vp += 1
        out.append(p ** (e - vp) if vp else None)
    return out


def _crt_coef(L, q):
    """The mod-L element that is 1 mod q and 0 mod L/q (q a prime power of L)."""
    Mq = L // q
    return (Mq * pow(Mq % q, -1, q)) % L


def solve_mixed(M, row_orders, col_orders, b):
    """Solve M x = b where row i holds mod row_orders[i], x_j lives mod col_orders[j].

    Returns a tuple solution or None.  M is a dense integer matrix
    (len(row_orders) rows by len(col_orders) columns).
    """
    n = len(row_orders)
    m = len(col_orders)
    L = _exponent(list(row_orders) + list(col_orders))
    if L == 1:
        return (0,) * m
    x = [0] * m
    for p, e in _factorint(L).items():
        q = p**e
        scales = _row_scales(row_orders, p, e)
        rows = [[(s * v) % q for v in M[i]] for i, s in enumerate(scales) if s is not None]
        rhs = [(s * b[i]) % q for i, s in enumerate(scales) if s is not None]
        if rows:
            xp = _solve_mod_q(rows, rhs, p, e)
            if xp is None:
                return None
        else:
            xp = np.zeros(m, dtype=np.int64)
        coef = _crt_coef(L, q)
        x = [(xi + int(v) * coef) % L for xi, v in zip(x, xp)]
    sol = tuple(xi % d for xi, d in zip(x, col_orders))
    for i in range(n):
        if (sum(M[i][j] * sol[j] for j in range(m)) - b[i]) % row_orders[i]:
            raise AssertionError("internal solver error")
    return sol


def kernel_mixed(M, row_orders, col_orders):
    """Generators of {x : Mx = 0 mod row_orders}, x_j taken mod col_orders[j]."""
    m = len(col_orders)
    L = _exponent(list(row_orders) + list(col_orders))
    if L == 1:
        return []
    gens = []
    A = np.asarray(M, dtype=np.int64)
    for p, e in _factorint(L).items():
        q = p**e
        scales = _row_scales(row_orders, p, e)
        keep = [i for i, s in enumerate(scales) if s is not None]
        if keep:
            svec = np.array([scales[i] for i in keep], dtype=np.int64)
            rows = (A[keep] * svec[:, None]) % q
            K = _kernel_mod_q(rows, p, e)
        else:
            K = np.eye(m, dtype=np.int64)
        coef = _crt_coef(L, q)
        for j in range(K.shape[1]):
            g = tuple((int(K[i, j]) * coef) % d for i, d in enumerate(col_orders))
            if any(g):
                gens.append(g)
    return gens


# ---------------------------------------------------------------------------
# group-level API
# ---------------------------------------------------------------------------


@dataclass
class LinearSolution:
    solvable: bool
    solution: tuple[int, ...] | None
    kernel_generators: list[tuple[int, ...]]


def solve_linear(f: GroupHomomorphism, target) -> LinearSolution:
    """Solve f(x) = target; 'no solution' is reported as a value."""
    M = [list(row) for row in f.matrix]
    rows = f.target.cyclic_orders
    cols = f.source.cyclic_orders
    sol = solve_mixed(M, rows, cols, list(target))
    kgens = kernel_mixed(M, rows, cols)
    if sol is None:
        return LinearSolution(False, None, kgens)
    return LinearSolution(True, sol, kgens)


def kernel_generators(f: GroupHomomorphism) -> list[tuple[int, ...]]:
    return kernel_mixed([list(r) for r in f.matrix], f.target.cyclic_orders, f.source.cyclic_orders)


def image_generators(f: GroupHomomorphism) -> list[tuple[int, ...]]:
    out = []
    for j in range(f.source.rank):
        g = tuple(row[j] % d for row, d in zip(f.matrix, f.target.cyclic_orders))
        if any(g):
            out.append(g)
    return out


def subgroup_contains(ambient: FiniteAbelianGroup, gens, x) -> bool:
    """Is x in the subgroup of ambient generated by gens?"""
    if not gens:
        return not any(xi % d for xi, d in zip(x, ambient.cyclic_orders))
    L = _exponent(ambient.cyclic_orders)
    M = [[g[i] for g in gens] for i in range(ambient.rank)]
    return solve_mixed(M, ambient.cyclic_orders, [L] * len(gens), list(x)) is not None


def subgroup_coefficients(ambient: FiniteAbelianGroup, gens, x):
    """Coefficients expressing x over gens, or None."""
    if not gens:
        ok = not any(xi % d for xi, d in zip(x, ambient.cyclic_orders))
        return () if ok else None
    L = _exponent(ambient.cyclic_orders)
    M = [[g[i] for g in gens] for i in range(ambient.rank)]
    return solve_mixed(M, ambient.cyclic_orders, [L] * len(gens), list(x))


@dataclass
class SubquotientResult:
    invariant_factors: list[int]  # ascending divisibility chain, 1s dropped
    representatives: list[tuple[int, ...]]  # ambient elements, one per factor


def subquotient_invariants(
    ambient: FiniteAbelianGroup, sub_gens, modulo_gens, check: bool = True
) -> SubquotientResult:
    """Invariant factors of <sub_gens>/<modulo_gens> inside ambient.

    Requires <modulo_gens> <= <sub_gens> (verified when check=True).
    Representatives are ambient elements whose classes generate the cyclic
    factors, aligned with the invariant factor list.
    """
    if check:
        for mg in modulo_gens:
            if not subgroup_contains(ambient, sub_gens, mg):
                raise ValueError("modulo subgroup is not contained in sub")
    s = len(sub_gens)
    if s == 0:
        return SubquotientResult([], [])
    L = _exponent(ambient.cyclic_orders)
    if L == 1:
        return SubquotientResult([], [])
    # relation lattice: coefficient vectors v with sum v_j*sub_gens[j] in <modulo_gens>
    allg = list(sub_gens) + list(modulo_gens)
    M = [[g[i] for g in allg] for i in range(ambient.rank)]
    rel = kernel_mixed(M, ambient.cyclic_orders, [L] * len(allg))
    rel = [r[:s] for r in rel]

    per_prime = []
    for p, e in _factorint(L).items():
        q = p**e
        if rel:
            C = np.array([[r[j] % q for r in rel] for j in range(s)], dtype=np.int64)
        else:
            C = np.zeros((s, 0), dtype=np.int64)
        dvals, _U, _V, Uinv, = _snf_mod_q(C, p, e)
        facs = []
        for i in range(s):
            d = dvals[i] if i < len(dvals) else q
            if d > 1:
                coeffs = Uinv[:, i] % q
                rep = ambient.zero()
                for j in range(s):
                    rep = ambient.add(rep, ambient.scale(int(coeffs[j]), sub_gens[j]))
                facs.append((d, rep))
        facs.sort(key=lambda t: -t[0])
        if facs:
            per_prime.append(facs)

    if not per_prime:
        return SubquotientResult([], [])
    width = max(len(f) for f in per_prime)
    merged = []
    for k in range(width):
        order = 1
        rep = ambient.zero()
        for facs in per_prime:
            if k < len(facs):
                order *= facs[k][0]
                rep = ambient.add(rep, facs[k][1])
        merged.append((order, rep))
    merged.reverse()  # ascending divisibility chain
    return SubquotientResult([o for o, _ in merged], [r for _, r in merged])


def subgroup_invariants(ambient: FiniteAbelianGroup, gens) -> list[int]:
    return subquotient_invariants(ambient, gens, [], check=False).invariant_factors
