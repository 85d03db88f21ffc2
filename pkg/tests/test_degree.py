from __future__ import annotations

import pytest

from hopfsperner.complex import build_complex
from hopfsperner.constructions import (
    boundary_simplex_sphere,
    labeled_simplex,
    random_labeled_disc,
)
from hopfsperner.errors import (
    DimensionMismatch,
    NotClosed,
    NotOriented,
)
from hopfsperner.labeling import LabeledTriangulation, make_labeled
from hopfsperner.degree import check_index_bound, sphere_map_degree


def circle(word: str) -> LabeledTriangulation:
    m = len(word)
    c = build_complex([(i, (i + 1) % m) for i in range(m)], oriented=True)
    return make_labeled(c, word, alphabet="ABC")


@pytest.mark.parametrize("n", [1, 2, 3])
def test_identity_sphere_has_degree_one(n):
    rep = sphere_map_degree(boundary_simplex_sphere(n))
    assert rep.degree == 1 and rep.consistent
    assert all(signed == 1 for _, signed in rep.per_facet.values())


def test_missing_label_gives_zero():
    lt = boundary_simplex_sphere(2)
    lt = make_labeled(lt.complex, "AABC", alphabet="ABCD")
    assert sphere_map_degree(lt).degree == 0


def test_circle_words():
    assert sphere_map_degree(circle("ABCABCABC")).degree == 3
    assert sphere_map_degree(circle("ABCBACABC")).degree == 1
    assert sphere_map_degree(circle("CBACBA")).degree == -2


def test_degree_errors():
    with pytest.raises(NotClosed):
        sphere_map_degree(labeled_simplex(2, alphabet="ABCD"))
    with pytest.raises(DimensionMismatch):
        sphere_map_degree(labeled_simplex(3))
    unoriented = make_labeled(build_complex([(0, 1), (1, 2), (2, 0)]), "ABC")
    with pytest.raises(NotOriented):
        sphere_map_degree(unoriented)


def test_sperner_triangle():
    # subdivided triangle with Sperner boundary labels: degree 1, odd count
    disc = random_labeled_disc(1, "ABC", seed=5, steps=30)
    rep = check_index_bound(disc)
    assert rep.invariant == 1 and rep.passes
    assert rep.observed % 2 == 1
    assert rep.details["signed_count"] == 1


def test_degree_three_disc():
    rep = check_index_bound(random_labeled_disc(1, "ABCABCABC", seed=1, steps=40))
    assert rep.invariant == 3 and rep.observed >= 3 and rep.passes


def test_degree_zero_disc_passes():
    disc = random_labeled_disc(1, "ABAB", seed=0, steps=0)
    disc = LabeledTriangulation(disc.complex, disc.labels[:-1] + ("A",), disc.alphabet)
    rep = check_index_bound(disc)
    assert rep.invariant == 0 and rep.required == 0 and rep.passes


def test_index_bound_boundary_hypothesis_reported():
    # boundary faces have n+1 vertices, so they never carry all n+2 letters
    rep = check_index_bound(random_labeled_disc(1, "ABCBCA", seed=2, steps=10))
    assert dict(rep.hypotheses)["no fully labeled simplex on the boundary"] is True


def test_index_bound_wrong_dimension():
    with pytest.raises(DimensionMismatch):
        check_index_bound(labeled_simplex(2, alphabet="ABCD"))
