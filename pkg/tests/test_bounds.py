from __future__ import annotations

import pytest

from hopfsperner.bounds import (
    check_mu_bound,
    check_mu_bound_general,
    count_via_preimage,
    mu_bounds,
    mu_exact,
    mu_lower,
    mu_upper,
)
from hopfsperner.constructions import cone, connected_sum, labeled_simplex
from hopfsperner.errors import DimensionMismatch, HypothesisViolated, UnsupportedSignature
from hopfsperner.labeling import LabeledTriangulation, fully_labeled


def test_lower_examples():
    assert [mu_lower(d) for d in (0, 1, 2, 5)] == [0, 9, 9, 18]


def test_upper_examples():
    assert [mu_upper(d) for d in (0, 1, 2, 3, 5)] == [0, 9, 9, 18, 27]


def test_exact_examples():
    assert [mu_exact(d) for d in (0, 1, 2, 3)] == [0, 9, 9, None]


def test_bounds_record():
    assert mu_bounds(2).to_dict() == {"d": 2, "lower": 9, "upper": 9, "exact": 9}
    assert mu_bounds(-3).to_dict() == {"d": -3, "lower": 12, "upper": 18, "exact": None}


def test_mu_bound_on_cones(h1):
    rep = check_mu_bound(cone(h1, "A"))
    assert rep.invariant == 1 and rep.observed >= 9 and rep.passes
    rep = check_mu_bound(cone(connected_sum(h1, h1), "B"))
    assert rep.invariant == 2 and rep.observed >= 9 and rep.passes


def test_mu_bound_missing_label(h1):
    lt = LabeledTriangulation(h1.complex, tuple("A" if x == "D" else x for x in h1.labels), h1.alphabet)
    rep = check_mu_bound(cone(lt, "A"))
    assert rep.invariant == 0 and rep.required == 0 and rep.passes


def test_mu_bound_violations(h1):
    with pytest.raises(DimensionMismatch):
        check_mu_bound(labeled_simplex(3))
    with pytest.raises(UnsupportedSignature):
        check_mu_bound(labeled_simplex(4))
    # a single 4-simplex labeled ABCDA has a fully labeled boundary tetrahedron
    bad = labeled_simplex(4, labels="ABCDA", alphabet="ABCD")
    with pytest.raises(HypothesisViolated) as err:
        check_mu_bound(bad)
    assert "boundary" in str(err.value)
    rep = check_mu_bound(bad, strict=False)
    assert not rep.passes


def test_mu_bound_general(h1):
    assert check_mu_bound_general(cone(h1, "C")).passes
    with pytest.raises(UnsupportedSignature):
        check_mu_bound_general(cone(h1, "C"), n=3, k=1)


def test_two_counts_agree(h1):
    disc = cone(h1, "A")
    assert count_via_preimage(disc) == len(fully_labeled(disc))
