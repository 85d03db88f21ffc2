"""Degree of a boundary labeling S^n -> ∂Δ^{n+1} and the index check on discs.

The target sphere is oriented as the boundary of the positively ordered
simplex on the alphabet, so the facet missing the j-th letter carries sign
(-1)^j against ascending label order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    FullyLabeledSimplexPresent,
    HypothesisViolated,
    NotClosed,
    NotOriented,
)
from .labeling import (
    LabeledTriangulation,
    boundary_labeling,
    count_fully_labeled_top,
    fully_labeled,
    has_fully_labeled_simplex,
    label_sign,
    signed_count,
)
from .reports import Report


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    per_facet: dict[str, tuple[int, int]] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len({signed for _, signed in self.per_facet.values()}) <= 1

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "consistent": self.consistent,
            "per_facet": {k: {"count": c, "signed": s} for k, (c, s) in sorted(self.per_facet.items())},
        }


def facet_key(labels) -> str:
    return "".join(labels) if all(len(x) == 1 for x in labels) else ",".join(labels)


def sphere_map_degree(lt: LabeledTriangulation) -> DegreeReport:
    """Degree read off every facet of the target sphere separately."""
    c = lt.complex
    n = len(lt.alphabet) - 2
    if n < 0 or c.dimension != n:
        raise DimensionMismatch(
            f"alphabet of {len(lt.alphabet)} letters needs a closed {n}-manifold, got dimension {c.dimension}"
        )
    if not c.is_closed:
        raise NotClosed("degree needs a closed pseudomanifold")
    if not c.oriented:
        raise NotOriented("degree needs an oriented complex")
    if has_fully_labeled_simplex(lt):
        raise FullyLabeledSimplexPresent("labeling hits the missing top cell")
    per_facet: dict[str, tuple[int, int]] = {}
    buckets: dict[frozenset, list] = {}
    for s in c.simplices:
        buckets.setdefault(lt.label_set(s), []).append(s)
    first = None
    for j, missing in enumerate(lt.alphabet):
        facet = tuple(x for x in lt.alphabet if x != missing)
        hits = buckets.get(frozenset(facet), [])
        signed = (-1) ** j * sum(label_sign(lt, s) for s in hits)
        per_facet[facet_key(facet)] = (len(hits), signed)
        if first is None:
            first = signed
    return DegreeReport(first or 0, per_facet)


def check_index_bound(lt: LabeledTriangulation) -> Report:
    """Fully labeled top simplices of a labeled disc versus the boundary degree."""
    c = lt.complex
    n = len(lt.alphabet) - 2
    if c.dimension != n + 1:
        raise DimensionMismatch(
            f"alphabet of {len(lt.alphabet)} letters needs dimension {n + 1}, got {c.dimension}"
        )
    if not c.oriented:
        raise NotOriented("the index check needs an oriented disc")
    boundary = boundary_labeling(lt)
    clean = len(fully_labeled(boundary)) == 0
    if not clean:
        raise HypothesisViolated("no fully labeled simplex on the boundary")
    deg = sphere_map_degree(boundary)
    count = count_fully_labeled_top(lt)
    signed = signed_count(lt)
    report = Report(
        theorem="index-bound",
        hypotheses=[
            ("no fully labeled simplex on the boundary", clean),
            ("boundary degree well defined", deg.consistent),
        ],
        invariant=deg.degree,
        observed=count,
        required=abs(deg.degree),
        details={
            "signed_count": signed,
            "signed_count_equals_degree": signed == deg.degree,
            "per_facet": deg.to_dict()["per_facet"],
        },
    )
    return report
