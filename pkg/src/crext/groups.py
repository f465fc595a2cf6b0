"""Finite abelian groups in product-of-cyclics form, and their homomorphisms.

A group is a tuple of cyclic orders (d1, ..., dk); elements are k-tuples
of residues, component i taken mod di.  Homomorphisms are integer matrices
acting on column vectors of residues.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm, prod


@dataclass(frozen=True)
class FiniteAbelianGroup:
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        if any(d < 1 for d in self.cyclic_orders):
            raise ValueError("cyclic orders must be positive")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def reduce(self, vec) -> tuple[int, ...]:
        return tuple(int(v) % d for v, d in zip(vec, self.cyclic_orders))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.cyclic_orders))

    def sub(self, a, b) -> tuple[int, ...]:
        return tuple((x - y) % d for x, y, d in zip(a, b, self.cyclic_orders))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(a, self.cyclic_orders))

    def scale(self, n: int, a) -> tuple[int, ...]:
        return tuple((n * x) % d for x, d in zip(a, self.cyclic_orders))

    def contains(self, a) -> bool:
        return (
            isinstance(a, tuple)
            and len(a) == self.rank
            and all(isinstance(x, int) and 0 <= x < d for x, d in zip(a, self.cyclic_orders))
        )

    def elements(self):
        """All elements, in lexicographic order of residue tuples."""
        return itertools.product(*(range(d) for d in self.cyclic_orders))

    def generators(self) -> list[tuple[int, ...]]:
        gens = []
        for i, d in enumerate(self.cyclic_orders):
            if d > 1:
                gens.append(tuple(1 if j == i else 0 for j in range(self.rank)))
        return gens

    def element_order(self, a) -> int:
        o = 1
        for x, d in zip(a, self.cyclic_orders):
            if x % d:
                o = lcm(o, d // gcd(x, d))
        return o

    def __str__(self):
        if not any(d > 1 for d in self.cyclic_orders):
            return "0"
        return " x ".join(f"Z/{d}" for d in self.cyclic_orders if d > 1)


@dataclass(frozen=True)
class GroupHomomorphism:
    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    matrix: tuple[tuple[int, ...], ...]  # k_target rows, k_source columns

    def __post_init__(self):
        if len(self.matrix) != self.target.rank:
            raise ValueError("matrix row count must equal target rank")
        for row in self.matrix:
            if len(row) != self.source.rank:
                raise ValueError("matrix column count must equal source rank")

    def is_well_defined(self) -> bool:
        """matrix[i][j] * source_order[j] must vanish mod target_order[i]."""
        for i, di in enumerate(self.target.cyclic_orders):
            for j, dj in enumerate(self.source.cyclic_orders):
                if (self.matrix[i][j] * dj) % di:
                    return False
        return True

    def apply(self, a) -> tuple[int, ...]:
        return tuple(
            sum(mij * x for mij, x in zip(row, a)) % d
            for row, d in zip(self.matrix, self.target.cyclic_orders)
        )

    def compose(self, inner: "GroupHomomorphism") -> "GroupHomomorphism":
        """self o inner."""
        if inner.target != self.source:
            raise ValueError("composition mismatch")
        rows = []
        for i in range(self.target.rank):
            rows.append(
                tuple(
                    sum(self.matrix[i][k] * inner.matrix[k][j] for k in range(self.source.rank))
                    % self.target.cyclic_orders[i]
                    for j in range(inner.source.rank)
                )
            )
        return GroupHomomorphism(inner.source, self.target, tuple(rows))

    @staticmethod
    def identity(group: FiniteAbelianGroup) -> "GroupHomomorphism":
        m = tuple(
            tuple(1 if i == j else 0 for j in range(group.rank)) for i in range(group.rank)
        )
        return GroupHomomorphism(group, group, m)

    @staticmethod
    def zero_map(source: FiniteAbelianGroup, target: FiniteAbelianGroup) -> "GroupHomomorphism":
        m = tuple((0,) * source.rank for _ in range(target.rank))
        return GroupHomomorphism(source, target, m)

    @staticmethod
    def from_images(source, target, images) -> "GroupHomomorphism":
        """Build from images of the standard coordinate generators."""
        if len(images) != source.rank:
            raise ValueError("need one image per source coordinate")
        rows = tuple(
            tuple(images[j][i] % target.cyclic_orders[i] for j in range(source.rank))
            for i in range(target.rank)
        )
        return GroupHomomorphism(source, target, rows)
