from __future__ import annotations

import pytest

from hopfsperner.complex import build_complex, orient
from hopfsperner.constructions import load_reference

# six-vertex real projective plane (ten triangles)
RP2 = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
]


def sphere(n: int):
    """Oriented boundary of the (n+1)-simplex on vertices 0..n+1."""
    verts = range(n + 2)
    return orient(build_complex([tuple(v for v in verts if v != i) for i in verts]))


@pytest.fixture(scope="session")
def h1():
    return load_reference("h1").triangulation


@pytest.fixture(scope="session")
def h2():
    return load_reference("h2").triangulation
