"""Table-presented finite rings and finite bimodules over them.

Ring elements are opaque labels addressed by index; addition, multiplication
and negation are dense tables.  A bimodule is a finite abelian group in
product-of-cyclics form together with one left-action and one right-action
homomorphism per ring element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import FiniteAbelianGroup, GroupHomomorphism


@dataclass(frozen=True)
class FiniteRing:
    labels: tuple[str, ...]
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    neg_table: tuple[int, ...]
    zero: int
    one: int

    @property
    def size(self) -> int:
        return len(self.labels)

    def elements(self):
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @staticmethod
    def from_tables(labels, add_table, mul_table) -> "FiniteRing":
        """Build a ring, inferring zero, one and negation from the tables."""
        labels = tuple(labels)
        add = tuple(tuple(row) for row in add_table)
        mul = tuple(tuple(row) for row in mul_table)
        n = len(labels)
        zero = next(z for z in range(n) if all(add[z][a] == a for a in range(n)))
        one = next(u for u in range(n) if all(mul[u][a] == a == mul[a][u] for a in range(n)))
        neg = tuple(next(b for b in range(n) if add[a][b] == zero) for a in range(n))
        return FiniteRing(labels, add, mul, neg, zero, one)


def validate_ring(ring: FiniteRing) -> list[str]:
    """Check all ring axioms on the tables; returns witness strings, [] if valid."""
    out = []
    n = ring.size
    lab = ring.labels
    for a in range(n):
        if ring.add(ring.zero, a) != a:
            out.append(f"zero is not additively neutral at {lab[a]}")
        if ring.add(a, ring.neg(a)) != ring.zero:
            out.append(f"negation fails at {lab[a]}")
        if ring.mul(ring.one, a) != a or ring.mul(a, ring.one) != a:
            out.append(f"one is not a unit at {lab[a]}")
        for b in range(n):
            if ring.add(a, b) != ring.add(b, a):
                out.append(f"addition not commutative at ({lab[a]},{lab[b]})")
            for c in range(n):
                if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
                    out.append(f"addition not associative at ({lab[a]},{lab[b]},{lab[c]})")
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
                    out.append(f"multiplication not associative at ({lab[a]},{lab[b]},{lab[c]})")
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
                    out.append(f"left distributivity fails at ({lab[a]},{lab[b]},{lab[c]})")
                if ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c)):
                    out.append(f"right distributivity fails at ({lab[a]},{lab[b]},{lab[c]})")
    return out


@dataclass(frozen=True)
class Bimodule:
    ring: FiniteRing
    group: FiniteAbelianGroup
    left_action: tuple[GroupHomomorphism, ...]  # indexed by ring element
    right_action: tuple[GroupHomomorphism, ...]

    def act_left(self, r: int, b) -> tuple[int, ...]:
        return self.left_action[r].apply(b)

    def act_right(self, b, r: int) -> tuple[int, ...]:
        return self.right_action[r].apply(b)

    @staticmethod
    def from_matrices(ring, group, left, right) -> "Bimodule":
        mk = lambda m: GroupHomomorphism(group, group, tuple(tuple(row) for row in m))
        return Bimodule(ring, group, tuple(mk(m) for m in left), tuple(mk(m) for m in right))


def validate_bimodule(bim: Bimodule) -> list[str]:
    """Check the unital bimodule axioms; returns witness strings, [] if valid."""
    out = []
    ring = bim.ring
    G = bim.group
    lab = ring.labels
    for r in ring.elements():
        for f, side in ((bim.left_action[r], "left"), (bim.right_action[r], "right")):
            if f.source != G or f.target != G:
                out.append(f"{side} action at {lab[r]} is not an endomorphism of the group")
            elif not f.is_well_defined():
                out.append(f"{side} action matrix at {lab[r]} is not well defined")
    if out:
        return out
    gens = G.generators()
    for b in gens:
        if bim.act_left(ring.one, b) != b:
            out.append(f"left action of 1 is not the identity at {b}")
        if bim.act_right(b, ring.one) != b:
            out.append(f"right action of 1 is not the identity at {b}")
        for r in ring.elements():
            for s in ring.elements():
                if bim.act_left(ring.add(r, s), b) != G.add(
                    bim.act_left(r, b), bim.act_left(s, b)
                ):
                    out.append(f"left action not additive in the ring at ({lab[r]},{lab[s]})")
                if bim.act_right(b, ring.add(r, s)) != G.add(
                    bim.act_right(b, r), bim.act_right(b, s)
                ):
                    out.append(f"right action not additive in the ring at ({lab[r]},{lab[s]})")
                if bim.act_left(ring.mul(r, s), b) != bim.act_left(r, bim.act_left(s, b)):
                    out.append(f"left action not multiplicative at ({lab[r]},{lab[s]})")
                if bim.act_right(b, ring.mul(r, s)) != bim.act_right(bim.act_right(b, r), s):
                    out.append(f"right action not multiplicative at ({lab[r]},{lab[s]})")
                if bim.act_right(bim.act_left(r, b), s) != bim.act_left(
                    r, bim.act_right(b, s)
                ):
                    out.append(f"left and right actions do not commute at ({lab[r]},{lab[s]})")
    return out
