"""Exact workbench for third Mac Lane cohomology of finite rings and
categorical ring extensions, at desk scale.

The package computes H^3 of a table-presented finite ring with finite
bimodule coefficients by exact linear algebra, realizes normalized
3-cocycles as skeletal categorical rings, machine-checks every
coherence diagram, and extracts characteristic classes back out of
models.
"""

from .groups import FiniteAbelianGroup, GroupHomomorphism
from .rings import FiniteRing, Bimodule, validate_ring, validate_bimodule
from .cochains import (Cochain2, Cochain3, check_normalized, coboundary,
                       cocycle_defect, cohomologous, compute_h3, is_cocycle,
                       random_cocycle, z3_generators)
from .catgroup import (SkeletalSymCatGroup, check_sym_coherence, coma,
                       deviation, make_catgroup, pi0_pi1)
from .catring import (SkeletalCatRing, TwoHomomorphism, check_2hom,
                      check_ring_coherence, induced_maps, make_catring,
                      obstruction, pi0_ring, pi1_bimodule)
from .correspondence import (RepresentativeChoices, canonical_choices,
                             choices_from_tables, coma_defects,
                             equiv_from_coboundary, extract, random_choices,
                             realize, roundtrip_2hom)

__version__ = "0.1.0"

__all__ = [
    "FiniteAbelianGroup", "GroupHomomorphism",
    "FiniteRing", "Bimodule", "validate_ring", "validate_bimodule",
    "Cochain2", "Cochain3", "check_normalized", "coboundary",
    "cocycle_defect", "cohomologous", "compute_h3", "is_cocycle",
    "random_cocycle", "z3_generators",
    "SkeletalSymCatGroup", "check_sym_coherence", "coma", "deviation",
    "make_catgroup", "pi0_pi1",
    "SkeletalCatRing", "TwoHomomorphism", "check_2hom",
    "check_ring_coherence", "induced_maps", "make_catring", "obstruction",
    "pi0_ring", "pi1_bimodule",
    "RepresentativeChoices", "canonical_choices", "choices_from_tables",
    "coma_defects", "equiv_from_coboundary", "extract", "random_choices",
    "realize", "roundtrip_2hom",
]
