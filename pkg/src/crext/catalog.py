"""Bundled desk-scale rings and bimodules used by the tests and the CLI."""

from __future__ import annotations

from .groups import FiniteAbelianGroup
from .rings import Bimodule, FiniteRing


def cyclic_ring(n: int) -> FiniteRing:
    labels = tuple(str(i) for i in range(n))
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return FiniteRing.from_tables(labels, add, mul)


def product_ring(a: FiniteRing, b: FiniteRing) -> FiniteRing:
    pairs = [(i, j) for i in a.elements() for j in b.elements()]
    idx = {p: k for k, p in enumerate(pairs)}
    labels = tuple(f"({a.labels[i]},{b.labels[j]})" for i, j in pairs)
    add = tuple(
        tuple(idx[(a.add(i, k), b.add(j, l))] for k, l in pairs) for i, j in pairs
    )
    mul = tuple(
        tuple(idx[(a.mul(i, k), b.mul(j, l))] for k, l in pairs) for i, j in pairs
    )
    return FiniteRing.from_tables(labels, add, mul)


def dual_numbers_f2() -> FiniteRing:
    """Z/2[x]/(x^2): elements 0, 1, x, 1+x."""
    labels = ("0", "1", "x", "1+x")
    # encode a+bx as (a, b) in F2^2
    dec = [(0, 0), (1, 0), (0, 1), (1, 1)]
    idx = {p: k for k, p in enumerate(dec)}
    add = tuple(
        tuple(idx[((p[0] + q[0]) % 2, (p[1] + q[1]) % 2)] for q in dec) for p in dec
    )
    mul = tuple(
        tuple(idx[((p[0] * q[0]) % 2, (p[0] * q[1] + p[1] * q[0]) % 2)] for q in dec)
        for p in dec
    )
    return FiniteRing.from_tables(labels, add, mul)


def cyclic_bimodule(ring: FiniteRing, n: int, reduce_map) -> Bimodule:
    """Bimodule Z/n where each ring element acts by multiplication by reduce_map(r)."""
    G = FiniteAbelianGroup((n,))
    mats = [[[reduce_map(r) % n]] for r in ring.elements()]
    return Bimodule.from_matrices(ring, G, mats, mats)


def regular_bimodule_cyclic(n: int) -> Bimodule:
    return cyclic_bimodule(cyclic_ring(n), n, int)


def regular_bimodule_dual_numbers() -> Bimodule:
    """The ring Z/2[x]/(x^2) acting on itself; group coordinates (1, x)."""
    ring = dual_numbers_f2()
    G = FiniteAbelianGroup((2, 2))
    dec = [(0, 0), (1, 0), (0, 1), (1, 1)]
    mats = []
    for a, b in dec:
        # (a+bx)(c+dx) = ac + (ad+bc)x
        mats.append([[a, 0], [b, a]])
    return Bimodule.from_matrices(ring, G, mats, mats)


def regular_bimodule_product_f2() -> Bimodule:
    """Z/2 x Z/2 acting on itself coordinatewise."""
    ring = product_ring(cyclic_ring(2), cyclic_ring(2))
    G = FiniteAbelianGroup((2, 2))
    dec = [(0, 0), (0, 1), (1, 0), (1, 1)]
    pairs = [(i, j) for i in range(2) for j in range(2)]
    mats = [[[i, 0], [0, j]] for i, j in pairs]
    del dec
    return Bimodule.from_matrices(ring, G, mats, mats)


def square_bimodule_f2() -> Bimodule:
    """Z/2 acting diagonally on Z/2 x Z/2."""
    ring = cyclic_ring(2)
    G = FiniteAbelianGroup((2, 2))
    mats = [[[r, 0], [0, r]] for r in ring.elements()]
    return Bimodule.from_matrices(ring, G, mats, mats)


RINGS = {
    "z2": cyclic_ring(2),
    "z3": cyclic_ring(3),
    "z4": cyclic_ring(4),
    "f2x": dual_numbers_f2(),
    "z2z2": product_ring(cyclic_ring(2), cyclic_ring(2)),
}


def catalog_bimodules(name: str) -> dict[str, Bimodule]:
    """Bimodules of order <= 4 shipped for each catalog ring."""
    ring = RINGS[name]
    if name == "z2":
        return {
            "self": cyclic_bimodule(ring, 2, int),
            "square": square_bimodule_f2(),
        }
    if name == "z3":
        return {"self": cyclic_bimodule(ring, 3, int)}
    if name == "z4":
        return {
            "self": cyclic_bimodule(ring, 4, int),
            "mod2": cyclic_bimodule(ring, 2, int),
        }
    if name == "f2x":
        # x acts as zero on the quotient Z/2
        reduce_to_f2 = lambda r: 1 if r in (1, 3) else 0
        return {
            "self": regular_bimodule_dual_numbers(),
            "quot2": cyclic_bimodule(ring, 2, reduce_to_f2),
        }
    if name == "z2z2":
        # first projection gives a Z/2 bimodule
        proj = lambda r: 1 if r in (2, 3) else 0
        return {
            "self": regular_bimodule_product_f2(),
            "proj2": cyclic_bimodule(ring, 2, proj),
        }
    raise KeyError(name)


def catalog_pairs(max_ring=4, max_bim=4):
    """All (name, ring, bimodule-name, bimodule) pairs within the size bounds."""
    out = []
    for name, ring in RINGS.items():
        if ring.size > max_ring:
            continue
        for bname, bim in catalog_bimodules(name).items():
            if bim.group.order > max_bim:
                continue
            out.append((name, ring, bname, bim))
    return out
