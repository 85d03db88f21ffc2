from __future__ import annotations

import pytest

from conftest import RP2, sphere
from hopfsperner.complex import (
    barycentric_subdivision,
    boundary_of,
    build_complex,
    canonical,
    link,
    orient,
    permutation_sign,
    star,
)
from hopfsperner.errors import (
    DuplicateSimplex,
    IncoherentOrientation,
    NonOrientable,
    NonPure,
    RepeatedVertex,
    UnknownVertex,
)


def test_single_tetra_face_counts():
    c = build_complex([[0, 1, 2, 3]])
    assert c.dimension == 3
    assert c.f_vector == (4, 6, 4, 1)
    assert c.euler_characteristic() == 1


def test_build_errors():
    with pytest.raises(DuplicateSimplex):
        build_complex([[0, 1, 2], [0, 1, 2]])
    with pytest.raises(DuplicateSimplex):
        build_complex([[0, 1, 2], [2, 1, 0]])
    with pytest.raises(NonPure):
        build_complex([[0, 1, 2], [2, 3]])
    with pytest.raises(RepeatedVertex):
        build_complex([[0, 1, 1]])
    with pytest.raises(UnknownVertex):
        build_complex([[0, 1, 5]], vertex_count=3)


def test_sphere_euler_characteristics():
    assert sphere(2).euler_characteristic() == 2
    assert sphere(3).euler_characteristic() == 0
    assert sphere(4).euler_characteristic() == 2


def test_orient_spheres_coherent():
    for n in (1, 2, 3, 4):
        c = sphere(n)
        assert c.oriented and c.is_coherent() and c.is_closed


def test_orient_rejects_rp2():
    with pytest.raises(NonOrientable):
        orient(build_complex(RP2))


def test_incoherent_tuple_orders_rejected():
    with pytest.raises(IncoherentOrientation):
        build_complex([(0, 1, 2), (0, 1, 3)], oriented=True)


def test_boundary_of_tetra_and_closed_sphere():
    tet = build_complex([(0, 1, 2, 3)], oriented=True)
    b = boundary_of(tet)
    assert len(b.simplices) == 4 and b.is_closed and b.is_coherent()
    assert boundary_of(sphere(2)).simplices == ()


def test_boundary_of_cone_is_base():
    base = sphere(2)
    cone = orient(build_complex([(4,) + s for s in base.simplices]))
    b = boundary_of(cone)
    assert sorted(map(canonical, b.simplices)) == sorted(map(canonical, base.simplices))


def test_boundary_orientation_is_induced():
    # ∂[0123] = [123] - [023] + [013] - [012]
    b = boundary_of(build_complex([(0, 1, 2, 3)], oriented=True))
    signs = {canonical(s): permutation_sign(s) for s in b.simplices}
    assert signs == {(1, 2, 3): 1, (0, 2, 3): -1, (0, 1, 3): 1, (0, 1, 2): -1}


def test_subdivision_counts():
    sd, prov = barycentric_subdivision(build_complex([(0, 1, 2)]))
    assert len(sd.simplices) == 6
    assert prov[6] == (0, 1, 2)
    sd, _ = barycentric_subdivision(build_complex([(0, 1, 2, 3)]))
    assert len(sd.simplices) == 24
    sd, _ = barycentric_subdivision(sphere(2))
    assert sd.euler_characteristic() == 2 and sd.is_closed


def test_subdivision_keeps_orientation():
    sd, _ = barycentric_subdivision(sphere(3))
    assert sd.oriented and sd.is_coherent()


def test_link_and_star():
    c = sphere(2)
    lk = link(c, 0)
    assert sorted(map(canonical, lk.simplices)) == [(1, 2), (1, 3), (2, 3)]
    assert sorted(map(canonical, link(build_complex([(0, 1, 2, 3)]), 0).simplices)) == [(1, 2, 3)]
    cone = build_complex([(4,) + s for s in c.simplices])
    assert len(star(cone, 4).simplices) == len(cone.simplices)
    with pytest.raises(UnknownVertex):
        link(c, 9)


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1
