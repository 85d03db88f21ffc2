"""Sperner-type counts, degrees and Hopf invariants of labeled triangulations."""

from __future__ import annotations

from .complex import Complex, barycentric_subdivision, boundary_of, build_complex, orient
from .degree import DegreeReport, check_index_bound, sphere_map_degree
from .homology import homology, smith_normal_form, solve_boundary
from .hopf import HopfReport, hopf_invariant, mapping_cone
from .labeling import LabeledTriangulation, fully_labeled, make_labeled, signed_count
from .preimage import Word, chain_word, components, extract_preimage, mu_count, word_degree

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "DegreeReport",
    "HopfReport",
    "LabeledTriangulation",
    "Word",
    "barycentric_subdivision",
    "boundary_of",
    "build_complex",
    "chain_word",
    "check_index_bound",
    "components",
    "extract_preimage",
    "fully_labeled",
    "homology",
    "hopf_invariant",
    "make_labeled",
    "mapping_cone",
    "mu_count",
    "orient",
    "signed_count",
    "smith_normal_form",
    "solve_boundary",
    "sphere_map_degree",
    "word_degree",
]
