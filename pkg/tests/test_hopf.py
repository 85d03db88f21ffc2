from __future__ import annotations

import pytest

from hopfsperner.constructions import boundary_simplex_sphere, connected_sum, mirror, subdivide_labeled
from hopfsperner.errors import DimensionMismatch, FullyLabeledSimplexPresent, NotASphere
from hopfsperner.homology import homology_all
from hopfsperner.hopf import (
    hopf_consistency,
    hopf_invariant,
    hopf_under_random_orders,
    hopf_whitehead,
    mapping_cone,
)
from hopfsperner.labeling import LabeledTriangulation, make_labeled
from hopfsperner.complex import Complex


def drop_label(lt, letter, into="A"):
    return LabeledTriangulation(lt.complex, tuple(into if x == letter else x for x in lt.labels), lt.alphabet)


def test_reference_values(h1, h2):
    assert hopf_invariant(h1).H == 1
    assert hopf_invariant(h2).H == 2


def test_mirror_negates(h1, h2):
    assert hopf_invariant(mirror(h1)).H == -1
    assert hopf_invariant(mirror(h2)).H == -2


def test_whitehead_route_agrees(h1, h2):
    # independent formula on the sphere itself; must agree including sign
    assert hopf_whitehead(h1) == hopf_invariant(h1).H
    assert hopf_whitehead(h2) == hopf_invariant(h2).H
    assert hopf_whitehead(mirror(h1)) == -1


def test_unused_label_gives_zero(h1):
    lt = drop_label(h1, "D")
    assert hopf_invariant(lt).H == 0
    assert hopf_whitehead(lt) == 0


def test_cone_of_h1_looks_like_cp2(h1):
    mc = mapping_cone(h1)
    assert mc.complex.euler_characteristic() == 3
    assert [g.betti for g in homology_all(mc.complex)] == [1, 0, 1, 0, 1]
    assert all(g.torsion == () for g in homology_all(mc.complex))


def test_cone_guards(h1):
    with pytest.raises(DimensionMismatch):
        mapping_cone(boundary_simplex_sphere(2))
    tet = make_labeled(Complex(((0, 1, 2, 3),), 4, True), "ABCD")
    with pytest.raises(FullyLabeledSimplexPresent):
        mapping_cone(tet)
    c = h1.complex
    V = c.vertex_count
    two = Complex(c.simplices + tuple(tuple(v + V for v in s) for s in c.simplices), 2 * V, True)
    with pytest.raises(NotASphere):
        mapping_cone(LabeledTriangulation(two, h1.labels * 2, h1.alphabet))


def test_order_independence(h1):
    assert set(hopf_under_random_orders(h1, count=5, seed=11)) == {1}


def test_connected_sums(h1, h2):
    assert hopf_invariant(connected_sum(h1, h1)).H == 2
    assert hopf_invariant(connected_sum(h1, mirror(h1))).H == 0
    assert hopf_invariant(connected_sum(h1, h2)).H == 3


def test_subdivision_invariance(h1):
    sd = subdivide_labeled(h1, 1)
    assert len(sd.complex.simplices) == 24 * len(h1.complex.simplices)
    assert hopf_invariant(sd).H == 1


def test_consistency_report(h1):
    diag = hopf_consistency(h1)
    assert diag["H"] == diag["H_oracle"] == 1
    assert diag["facets"]["ABC"]["mu"] == 9
    assert all(diag["flags"].values())


def test_consistency_empty_preimage(h1):
    diag = hopf_consistency(drop_label(h1, "D"))
    assert diag["H"] == 0
    assert all(f["mu"] == 0 for k, f in diag["facets"].items() if "D" in k)
    assert all(diag["flags"].values())


@pytest.mark.parametrize("build", ["hd3", "mirror_hd3", "h1#h2", "h2#mirror_h1"])
def test_both_routes_on_larger_inputs(build, h1, h2):
    from hopfsperner.constructions import load_reference

    h3 = load_reference("hd", 3).triangulation
    lt = {
        "hd3": lambda: h3,
        "mirror_hd3": lambda: mirror(h3),
        "h1#h2": lambda: connected_sum(h1, h2),
        "h2#mirror_h1": lambda: connected_sum(h2, mirror(h1)),
    }[build]()
    want = {"hd3": 3, "mirror_hd3": -3, "h1#h2": 3, "h2#mirror_h1": 1}[build]
    assert hopf_invariant(lt).H == want
    assert hopf_whitehead(lt) == want
