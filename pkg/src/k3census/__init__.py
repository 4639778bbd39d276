"""Exact verification toolkit for lattice actions on K3-type 4-manifolds.

Modules:
  cyclotomic  exact arithmetic in Q(zeta_n) and decimal embeddings
  e8          the 240-root system, reflections, subsystem detection
  sgnperm     the signed-permutation subgroup of Aut(E8), involution
              classes, obstruction searches
  reps        integral Z_p-representation decompositions and liftings
  kummer      symbolic Kummer-surface homology and its -E8 bases
  gindex      Lefschetz/signature/Dirac fixed-point formulas and filters
  census      fixed-point data censuses with the full audit trail
  cli         command-line entry points
"""

from .cyclotomic import CycNum, cyc_make, cot_product, csc_squared, embed_real
from .e8 import LatticeVec, enumerate_roots, inner, reflect, standard_basis
from .gindex import FixedPointData, SpinVector
from .reps import RepDecomp, lemma45_census
from .sgnperm import SignedPerm

__version__ = "0.1.0"

__all__ = [
    "CycNum", "cyc_make", "cot_product", "csc_squared", "embed_real",
    "LatticeVec", "enumerate_roots", "inner", "reflect", "standard_basis",
    "FixedPointData", "SpinVector", "RepDecomp", "lemma45_census",
    "SignedPerm", "__version__",
]
