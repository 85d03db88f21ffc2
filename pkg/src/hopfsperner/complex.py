"""Abstract simplicial complexes, orientation, boundaries and subdivision.

Simplices are tuples of vertex ids.  A face is keyed by its sorted tuple; the
order of a maximal simplex's tuple carries its orientation when the complex
is flagged ``oriented``.  Nothing here uses coordinates.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import (
    DuplicateSimplex,
    IncoherentOrientation,
    NonOrientable,
    NonPure,
    NotPseudomanifold,
    NotStronglyConnected,
    RepeatedVertex,
    UnknownVertex,
)

Simplex = tuple[int, ...]


def canonical(simplex: Iterable[int]) -> Simplex:
    return tuple(sorted(simplex))


def permutation_sign(seq: Sequence) -> int:
    """Sign of the permutation that sorts ``seq`` (entries must be distinct)."""
    sign = 1
    items = list(seq)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
    return sign


def oriented_as(face: Sequence[int], sign: int) -> Simplex:
    """Return a tuple on the vertices of ``face`` whose orientation relative to
    the sorted order is ``sign``."""
    c = canonical(face)
    if sign > 0 or len(c) < 2:
        return c
    return (c[1], c[0]) + c[2:]


def induced_faces(simplex: Sequence[int]) -> list[tuple[Simplex, int]]:
    """Codimension-one faces of an oriented simplex with their induced sign
    relative to sorted order."""
    out = []
    for i in range(len(simplex)):
        face = tuple(simplex[:i]) + tuple(simplex[i + 1:])
        out.append((canonical(face), (-1) ** i * permutation_sign(face)))
    return out


@dataclass(frozen=True)
class Complex:
    """A finite simplicial complex given by its maximal simplices.

    ``vertex_count`` fixes the id range ``[0, vertex_count)``; not every id has
    to occur (boundaries and links keep the ids of their host).
    """

    simplices: tuple[Simplex, ...]
    vertex_count: int
    oriented: bool = False
    name: str = field(default="", compare=False)

    @cached_property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @cached_property
    def is_pure(self) -> bool:
        return len({len(s) for s in self.simplices}) <= 1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for s in self.simplices for v in s}))

    @cached_property
    def _faces_by_dim(self) -> dict[int, list[Simplex]]:
        found: dict[int, set[Simplex]] = defaultdict(set)
        for s in self.simplices:
            c = canonical(s)
            for k in range(1, len(c) + 1):
                found[k - 1].update(combinations(c, k))
        return {k: sorted(v) for k, v in found.items()}

    def faces(self, k: int) -> list[Simplex]:
        """Sorted list of canonical k-faces."""
        return self._faces_by_dim.get(k, [])

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dimension + 1))

    @cached_property
    def face_index(self) -> dict[Simplex, tuple[int, ...]]:
        """Map from each canonical face to the indices of the maximal simplices
        that contain it."""
        index: dict[Simplex, list[int]] = defaultdict(list)
        for i, s in enumerate(self.simplices):
            c = canonical(s)
            for k in range(1, len(c) + 1):
                for face in combinations(c, k):
                    index[face].append(i)
        return {f: tuple(v) for f, v in index.items()}

    @cached_property
    def ridges(self) -> dict[Simplex, tuple[int, ...]]:
        """Codimension-one faces of maximal simplices with their incident
        maximal simplices (top-dimensional simplices only)."""
        d = self.dimension
        out: dict[Simplex, list[int]] = defaultdict(list)
        for i, s in enumerate(self.simplices):
            if len(s) != d + 1:
                continue
            for face in combinations(canonical(s), d):
                out[face].append(i)
        return {f: tuple(v) for f, v in out.items()}

    @property
    def is_pseudomanifold(self) -> bool:
        return self.is_pure and all(len(v) <= 2 for v in self.ridges.values())

    @property
    def boundary_ridges(self) -> list[Simplex]:
        return sorted(f for f, inc in self.ridges.items() if len(inc) == 1)

    @property
    def is_closed(self) -> bool:
        return self.is_pseudomanifold and not self.boundary_ridges

    @cached_property
    def is_strongly_connected(self) -> bool:
        if not self.simplices:
            return True
        seen = {0}
        queue = deque([0])
        adjacency = self._dual_adjacency()
        while queue:
            i = queue.popleft()
            for j, _ in adjacency[i]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return len(seen) == len(self.simplices)

    def _dual_adjacency(self) -> list[list[tuple[int, Simplex]]]:
        adjacency: list[list[tuple[int, Simplex]]] = [[] for _ in self.simplices]
        for face, inc in self.ridges.items():
            for i in inc:
                for j in inc:
                    if i != j:
                        adjacency[i].append((j, face))
        return adjacency

    @cached_property
    def orientation(self) -> tuple[int, ...]:
        """Sign of each maximal simplex's tuple relative to sorted order."""
        return tuple(permutation_sign(s) for s in self.simplices)

    def is_coherent(self) -> bool:
        """True if every interior ridge receives cancelling induced signs."""
        induced: dict[Simplex, int] = defaultdict(int)
        for s in self.simplices:
            for face, sign in induced_faces(s):
                induced[face] += sign
        return all(
            induced[f] == 0 for f, inc in self.ridges.items() if len(inc) == 2
        )

    def euler_characteristic(self) -> int:
        return euler_characteristic(self)

    def with_name(self, name: str) -> "Complex":
        return Complex(self.simplices, self.vertex_count, self.oriented, name)

    def reversed(self) -> "Complex":
        """Same complex with every maximal simplex's orientation flipped."""
        flipped = tuple(oriented_as(s, -permutation_sign(s)) for s in self.simplices)
        return Complex(flipped, self.vertex_count, self.oriented, self.name)


def build_complex(
    maximal: Iterable[Sequence[int]],
    vertex_count: int | None = None,
    *,
    oriented: bool = False,
    name: str = "",
) -> Complex:
    """Validate maximal simplices and build a pure :class:`Complex`.

    With ``oriented=True`` the tuple order is taken as the orientation and
    must be coherent across shared ridges.
    """
    tuples = [tuple(int(v) for v in s) for s in maximal]
    if any(len(s) == 0 for s in tuples):
        raise NonPure("empty simplex")
    if len({len(s) for s in tuples}) > 1:
        raise NonPure(f"mixed arities {sorted({len(s) for s in tuples})}")
    seen: set[Simplex] = set()
    for s in tuples:
        if len(set(s)) != len(s):
            raise RepeatedVertex(f"repeated vertex in {s}")
        if any(v < 0 for v in s):
            raise UnknownVertex(f"negative vertex id in {s}")
        c = canonical(s)
        if c in seen:
            raise DuplicateSimplex(f"duplicate simplex {c}")
        seen.add(c)
    top = max((v for s in tuples for v in s), default=-1)
    if vertex_count is None:
        vertex_count = top + 1
    elif top >= vertex_count:
        raise UnknownVertex(f"vertex {top} outside [0, {vertex_count})")
    c = Complex(tuple(tuples), vertex_count, oriented, name)
    if oriented and not c.is_coherent():
        raise IncoherentOrientation("tuple orders do not induce a coherent orientation")
    return c


def orient(c: Complex) -> Complex:
    """Return ``c`` with a coherent orientation.

    The maximal simplex with the lowest sorted tuple is oriented positively
    (its sorted order); the sign then propagates across the dual graph.
    """
    if not c.is_pseudomanifold:
        raise NotPseudomanifold("orientation needs a pure pseudomanifold")
    if not c.is_strongly_connected:
        raise NotStronglyConnected("orientation needs a strongly connected complex")
    if not c.simplices:
        return Complex((), c.vertex_count, True, c.name)
    canon = [canonical(s) for s in c.simplices]
    seed = min(range(len(canon)), key=lambda i: canon[i])
    sign = [0] * len(canon)
    sign[seed] = 1
    queue = deque([seed])
    # sign[i] is the orientation of simplex i relative to its sorted tuple;
    # the sorted face obtained by dropping position p has induced sign (-1)^p.
    pos_cache = [
        {f: (-1) ** p for p, f in enumerate(_drop_each(cs))} for cs in canon
    ]
    adjacency = c._dual_adjacency()
    while queue:
        i = queue.popleft()
        for j, face in adjacency[i]:
            want = -sign[i] * pos_cache[i][face] * pos_cache[j][face]
            if sign[j] == 0:
                sign[j] = want
                queue.append(j)
            elif sign[j] != want:
                raise NonOrientable("orientation conflict on the dual graph")
    simplices = tuple(oriented_as(cs, s) for cs, s in zip(canon, sign))
    return Complex(simplices, c.vertex_count, True, c.name)


def _drop_each(simplex: Simplex) -> list[Simplex]:
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


def boundary_of(c: Complex) -> Complex:
    """Ridges lying in exactly one maximal simplex, with induced orientation
    when ``c`` is oriented.  A closed complex has an empty boundary."""
    if not c.is_pseudomanifold:
        raise NotPseudomanifold("boundary needs a pure pseudomanifold")
    if c.dimension <= 0:
        return Complex((), c.vertex_count, c.oriented, c.name)
    ridge_sign: dict[Simplex, int] = {}
    for s in c.simplices:
        for face, sign in induced_faces(s):
            if len(c.ridges[face]) == 1:
                ridge_sign[face] = sign
    faces = sorted(ridge_sign)
    if c.oriented:
        simplices = tuple(oriented_as(f, ridge_sign[f]) for f in faces)
    else:
        simplices = tuple(faces)
    name = f"boundary({c.name})" if c.name else ""
    return Complex(simplices, c.vertex_count, c.oriented, name)


def euler_characteristic(c: Complex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(c.f_vector))


def star(c: Complex, v: int) -> Complex:
    """Closed star of ``v``: the maximal simplices containing it."""
    if v not in set(c.vertices):
        raise UnknownVertex(f"vertex {v} not in complex")
    simplices = tuple(s for s in c.simplices if v in s)
    return Complex(simplices, c.vertex_count, c.oriented)


def link(c: Complex, v: int) -> Complex:
    """Link of ``v``.  Orientation follows the convention that ``v * link``
    reproduces the star's orientation."""
    if v not in set(c.vertices):
        raise UnknownVertex(f"vertex {v} not in complex")
    out = []
    for s in c.simplices:
        if v not in s:
            continue
        i = s.index(v)
        rest = s[:i] + s[i + 1:]
        if not rest:
            continue
        out.append(oriented_as(rest, (-1) ** i * permutation_sign(rest)))
    return Complex(tuple(out), c.vertex_count, c.oriented)


def barycentric_subdivision(c: Complex) -> tuple[Complex, dict[int, Simplex]]:
    """First barycentric subdivision.

    Original vertices keep their ids; the barycenter of every face of
    dimension >= 1 gets a fresh id, assigned in (dimension, sorted tuple)
    order.  Returns the subdivided complex and the provenance map from each
    vertex id of the result to the face it subdivides.  Orientation is carried
    over when ``c`` is oriented.
    """
    provenance: dict[int, Simplex] = {v: (v,) for v in range(c.vertex_count)}
    bary: dict[Simplex, int] = {(v,): v for v in range(c.vertex_count)}
    next_id = c.vertex_count
    for k in range(1, c.dimension + 1):
        for face in c.faces(k):
            bary[face] = next_id
            provenance[next_id] = face
            next_id += 1
    out: list[Simplex] = []
    for s in c.simplices:
        sign = permutation_sign(s) if c.oriented else 1
        base = canonical(s)
        for perm in permutations(base):
            flag = tuple(bary[canonical(perm[: k + 1])] for k in range(len(perm)))
            psign = permutation_sign(perm) * sign
            out.append(oriented_as(flag, psign * permutation_sign(flag)))
    name = f"sd({c.name})" if c.name else ""
    return Complex(tuple(out), next_id, c.oriented, name), provenance
