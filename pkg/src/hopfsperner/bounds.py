"""Closed-form bounds on the number of internal faces μ(d) and the
bound checks on labeled 4-discs."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import Complex
from .errors import DimensionMismatch, HypothesisViolated, UnsupportedSignature
from .homology import homology_all
from .labeling import (
    LabeledTriangulation,
    boundary_labeling,
    fully_labeled,
)
from .reports import Report


def mu_lower(d: int) -> int:
    d = abs(d)
    if d == 0:
        return 0
    if d == 1:
        return 9
    return 3 * d + 3


def mu_upper(d: int) -> int:
    d = abs(d)
    return 9 * ((d + 1) // 2)


def mu_exact(d: int) -> int | None:
    d = abs(d)
    if d == 0:
        return 0
    if d in (1, 2):
        return 9
    return None


@dataclass(frozen=True)
class MuBounds:
    d: int
    lower: int
    upper: int | None
    exact: int | None

    def to_dict(self) -> dict:
        return {"d": self.d, "lower": self.lower, "upper": self.upper, "exact": self.exact}


def mu_bounds(d: int) -> MuBounds:
    return MuBounds(d, mu_lower(d), mu_upper(d), mu_exact(d))


def _is_homology_3_sphere(c: Complex) -> bool:
    h = homology_all(c)
    return [(g.betti, g.torsion) for g in h] == [(1, ()), (0, ()), (0, ()), (1, ())]


def check_mu_bound(lt: LabeledTriangulation, *, strict: bool = True) -> Report:
    """Fully labeled tetrahedra of a labeled 4-disc versus μ of its boundary class.

    The boundary-sphere hypothesis is checked by homology only.  With
    ``strict`` a failing hypothesis raises :class:`HypothesisViolated`;
    otherwise it is recorded and the report does not pass.
    """
    from .hopf import hopf_invariant

    if tuple(sorted(lt.alphabet)) != ("A", "B", "C", "D") or len(lt.alphabet) != 4:
        raise UnsupportedSignature(f"alphabet must be A, B, C, D; got {lt.alphabet}")
    if lt.complex.dimension != 4:
        raise DimensionMismatch(f"expected a 4-disc, got dimension {lt.complex.dimension}")
    boundary = boundary_labeling(lt)
    sphere = _is_homology_3_sphere(boundary.complex)
    clean = len(fully_labeled(boundary)) == 0
    hypotheses = [("boundary is a homology 3-sphere", sphere), ("no fully labeled tetrahedron on the boundary", clean)]
    for name, ok in hypotheses:
        if not ok and strict:
            raise HypothesisViolated(name)
    observed = len(fully_labeled(lt))
    if not (sphere and clean):
        return Report("mu-bound", hypotheses, None, observed, None)
    H = hopf_invariant(boundary, check_homology=False).H
    return Report(
        "mu-bound",
        hypotheses,
        invariant=H,
        observed=observed,
        required=mu_lower(H),
        details={"mu_upper": mu_upper(H), "mu_exact": mu_exact(H)},
    )


def check_mu_bound_general(lt: LabeledTriangulation, *, n: int = 2, k: int = 1, strict: bool = True) -> Report:
    """The general μ([∂f_L]) bound, available only for maps S³ -> S²."""
    if (n, k) == (2, 0):
        raise UnsupportedSignature("use the degree module for k = 0")
    if (n, k) != (2, 1):
        raise UnsupportedSignature(f"(n, k) = ({n}, {k}) is not supported; only (2, 1)")
    report = check_mu_bound(lt, strict=strict)
    report.theorem = "mu-bound (n, k) = (2, 1)"
    return report


def count_via_preimage(lt: LabeledTriangulation) -> int:
    """Fully labeled tetrahedra of a 4-disc counted a second way: internal
    faces of the four-letter preimage plus those lying on the boundary."""
    from .preimage import extract_preimage

    p = extract_preimage(lt, lt.alphabet)
    on_boundary = len(fully_labeled(boundary_labeling(lt)))
    # a fully labeled tetrahedron inside the disc lies in two 4-simplices,
    # both carrying all four letters, so it is internal to the preimage
    return p.mu + on_boundary
