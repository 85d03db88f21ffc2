"""Preimage complexes of a target facet, internal-face counts and chain words.

For a labeled closed 3-manifold over four letters, the preimage of a facet
(three letters) is the set of tetrahedra whose labels are exactly those three
letters.  Each such tetrahedron has one repeated letter and hence exactly two
fully labeled triangles, so the preimage splits into closed chains of
tetrahedra glued along fully labeled triangles.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .complex import Complex, Simplex, boundary_of, canonical, permutation_sign
from .errors import (
    BadAlphabet,
    BadFacet,
    DimensionMismatch,
    NotASimpleChain,
    NotASolidTorus,
    NotOriented,
    UnknownLabel,
)
from .homology import HomologyGroup, homology_all
from .labeling import Label, LabeledTriangulation, parse_label_set


@dataclass(frozen=True)
class PreimageComplex:
    host: LabeledTriangulation
    facet: tuple[Label, ...]
    simplices: tuple[Simplex, ...]
    internal_faces: tuple[Simplex, ...]
    boundary_faces: tuple[Simplex, ...]

    @property
    def complex(self) -> Complex:
        c = self.host.complex
        return Complex(self.simplices, c.vertex_count, c.oriented)

    @property
    def mu(self) -> int:
        return len(self.internal_faces)

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    @property
    def all_vertices_on_boundary(self) -> bool:
        """Whether every vertex of the preimage lies on its boundary.

        Reported as a flag rather than raised, so malformed inputs can still
        be inspected.
        """
        if not self.simplices:
            return True
        pi = self.complex
        on_boundary = {v for f in pi.boundary_ridges for v in f}
        return set(pi.vertices) <= on_boundary


def extract_preimage(lt: LabeledTriangulation, S: str | Iterable[Label]) -> PreimageComplex:
    """Maximal simplices whose label set is exactly ``S``, with internal faces.

    ``S`` is normally a facet (all letters but one); the full alphabet is also
    accepted, which turns the same construction into the fully labeled
    codimension-one faces of a labeled disc.
    """
    try:
        facet = parse_label_set(lt, S)
    except UnknownLabel as exc:
        raise BadFacet(str(exc)) from None
    if len(facet) not in (len(lt.alphabet) - 1, len(lt.alphabet)) or not facet:
        raise BadFacet(
            f"facet {facet} must have {len(lt.alphabet) - 1} letters of {lt.alphabet}"
        )
    want = frozenset(facet)
    k = len(facet)
    labels = lt.labels
    top = lt.complex.dimension + 1
    simplices = []
    incidence: dict[Simplex, int] = defaultdict(int)
    for s in lt.complex.simplices:
        if len(s) != top or lt.label_set(s) != want:
            continue
        simplices.append(s)
        for face in combinations(canonical(s), k):
            if len({labels[v] for v in face}) == k:
                incidence[face] += 1
    internal = tuple(sorted(f for f, n in incidence.items() if n >= 2))
    boundary = tuple(sorted(f for f, n in incidence.items() if n == 1))
    return PreimageComplex(lt, facet, tuple(simplices), internal, boundary)


def mu_count(p: PreimageComplex) -> int:
    return p.mu


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Word:
    """Cyclic word over a three-letter alphabet (order fixes the sign)."""

    letters: tuple[Label, ...]
    alphabet: tuple[Label, Label, Label] = ("A", "B", "C")

    def __str__(self) -> str:
        return "".join(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def reversed(self) -> "Word":
        return Word(tuple(reversed(self.letters)), self.alphabet)

    def rotated(self, k: int) -> "Word":
        if not self.letters:
            return self
        k %= len(self.letters)
        return Word(self.letters[k:] + self.letters[:k], self.alphabet)


def make_word(letters: str | Sequence[Label], alphabet: Sequence[Label] | None = None) -> Word:
    items = tuple(letters)
    if alphabet is None:
        used = set(items)
        if used <= {"A", "B", "C"}:
            alphabet = ("A", "B", "C")
        elif len(used) == 3:
            alphabet = tuple(sorted(used))
        else:
            raise BadAlphabet(f"cannot infer a three-letter alphabet from {sorted(used)}")
    alphabet = tuple(alphabet)
    if len(alphabet) != 3 or len(set(alphabet)) != 3:
        raise BadAlphabet(f"word alphabet must have three letters, got {alphabet}")
    stray = set(items) - set(alphabet)
    if stray:
        raise BadAlphabet(f"letters {sorted(stray)} outside {alphabet}")
    return Word(items, alphabet)


def word_degree(M: Word | str, pair: tuple[Label, Label] | None = None) -> int:
    """Cyclic count of ``ab`` pairs minus ``ba`` pairs.

    The default pair is the first two alphabet letters; any cyclically
    consecutive pair of the alphabet gives the same number.
    """
    w = M if isinstance(M, Word) else make_word(M)
    if len(w.alphabet) != 3 or set(w.letters) - set(w.alphabet):
        raise BadAlphabet(f"word {w} not over {w.alphabet}")
    a, b = pair if pair is not None else w.alphabet[:2]
    if a not in w.alphabet or b not in w.alphabet:
        raise BadAlphabet(f"pair {(a, b)} not in {w.alphabet}")
    letters = w.letters
    m = len(letters)
    pos = neg = 0
    for i in range(m):
        x, y = letters[i], letters[(i + 1) % m]
        if (x, y) == (a, b):
            pos += 1
        elif (x, y) == (b, a):
            neg += 1
    return pos - neg


# ---------------------------------------------------------------------------
# components and chains


@dataclass(frozen=True)
class ChainComponent:
    """One connected component of a 3-dimensional preimage."""

    preimage: PreimageComplex
    tetrahedra: tuple[Simplex, ...]
    internal_faces: tuple[Simplex, ...]
    homology: tuple[HomologyGroup, ...]
    boundary: Complex
    boundary_homology: tuple[HomologyGroup, ...]
    chain: tuple[Simplex, ...] | None = None
    vertex_cycle: tuple[int, ...] | None = None
    chain_error: str | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.tetrahedra)

    @property
    def is_simple_chain(self) -> bool:
        return self.chain is not None


def _face_components(simplices: Sequence[Simplex], internal: set[Simplex], k: int) -> list[list[Simplex]]:
    """Group simplices that are linked through shared internal faces.

    These are the components of the preimage of an interior point of the
    facet, which meets the host only in the interiors of fully labeled faces
    and of the simplices around them.
    """
    parent = list(range(len(simplices)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first: dict[Simplex, int] = {}
    for i, s in enumerate(simplices):
        for f in combinations(canonical(s), k):
            if f in internal:
                if f in first:
                    a, b = find(first[f]), find(i)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                else:
                    first[f] = i
    groups: dict[int, list[Simplex]] = defaultdict(list)
    for i, s in enumerate(simplices):
        groups[find(i)].append(s)
    return sorted(groups.values(), key=lambda g: min(canonical(s) for s in g))


def _is_solid_torus(h: Sequence[HomologyGroup], bh: Sequence[HomologyGroup], boundary: Complex) -> str | None:
    if [(g.betti, g.torsion) for g in h] != [(1, ()), (1, ()), (0, ()), (0, ())]:
        return f"homology {[str(g) for g in h]} is not that of a solid torus"
    if boundary.euler_characteristic() != 0:
        return f"boundary Euler characteristic {boundary.euler_characteristic()} != 0"
    if len(bh) < 2 or (bh[1].betti, bh[1].torsion) != (2, ()) or bh[0].betti != 1:
        return f"boundary homology {[str(g) for g in bh]} is not that of a torus"
    return None


def components(p: PreimageComplex, *, check: bool = True) -> list[ChainComponent]:
    """Split a 3-dimensional preimage into components.

    Tetrahedra belong to the same component when they are linked by shared
    internal triangles.  Each component is checked to be a homology solid torus with torus
    boundary (``NotASolidTorus`` otherwise) and, when it is a simple closed
    chain, its tetrahedra are listed in chain order.
    """
    host = p.host
    if host.complex.dimension != 3 or len(host.alphabet) != 4 or len(p.facet) != 3:
        raise DimensionMismatch("chain decomposition needs a labeled 3-manifold over four letters")
    internal = set(p.internal_faces)
    out = []
    for group in _face_components(p.simplices, internal, 3):
        sub = Complex(tuple(group), host.complex.vertex_count, host.complex.oriented)
        h = tuple(homology_all(sub))
        if not sub.is_pseudomanifold:
            raise NotASolidTorus("component is not a pseudomanifold")
        boundary = boundary_of(sub)
        bh = tuple(homology_all(boundary)) if boundary.simplices else ()
        problem = _is_solid_torus(h, bh, boundary)
        if problem and check:
            raise NotASolidTorus(problem)
        faces = tuple(
            sorted({f for s in group for f in combinations(canonical(s), 3) if f in internal})
        )
        chain = cycle = err = None
        if host.complex.oriented:
            try:
                chain, cycle = _walk(p, group, faces, +1)
            except NotASimpleChain as exc:
                err = str(exc)
        out.append(ChainComponent(p, tuple(group), faces, h, boundary, bh, chain, cycle, err))
    return out


def _walk(p: PreimageComplex, group, faces, orientation: int):
    """Follow the chain from its least internal triangle.

    Returns the tetrahedra in visiting order and the cyclic vertex sequence
    (vertex introduced at each step, rotated so the starting triangle comes
    first).
    """
    host = p.host
    labels = host.labels
    rank = host.rank
    internal = set(faces)
    tets_of: dict[Simplex, list[Simplex]] = defaultdict(list)
    sign_of: dict[Simplex, int] = {}
    for s in group:
        cs = canonical(s)
        sign_of[cs] = permutation_sign(s)
        n_int = 0
        for f in combinations(cs, 3):
            if f in internal:
                tets_of[f].append(cs)
                n_int += 1
        if n_int != 2:
            raise NotASimpleChain(f"tetrahedron {cs} has {n_int} internal faces")
    if not faces:
        raise NotASimpleChain("component has no internal faces")
    start = faces[0]
    cur = tuple(sorted(start, key=lambda v: rank[labels[v]]))
    first = [
        t for t in tets_of[start]
        if permutation_sign(cur + tuple(set(t) - set(cur))) == sign_of[t] * orientation
    ]
    if len(first) != 1:
        raise NotASimpleChain(f"cannot pick a direction at {start}")
    tet = first[0]
    chain = []
    seq = []
    seen = set()
    while True:
        if tet in seen:
            raise NotASimpleChain(f"tetrahedron {tet} revisited")
        seen.add(tet)
        chain.append(tet)
        (w,) = set(tet) - set(cur)
        seq.append(w)
        cur = tuple(w if labels[v] == labels[w] else v for v in cur)
        tri = canonical(cur)
        if tri == start:
            break
        nxt = [t for t in tets_of.get(tri, []) if t != tet]
        if len(nxt) != 1:
            raise NotASimpleChain(f"triangle {tri} does not continue the chain")
        tet = nxt[0]
    if len(seen) != len(group):
        raise NotASimpleChain(
            f"chain closes after {len(seen)} of {len(group)} tetrahedra"
        )
    cycle = tuple(seq[-3:] + seq[:-3]) if len(seq) >= 3 else tuple(seq)
    return tuple(chain), cycle


def chain_word(c: ChainComponent, orientation: int = 1) -> Word:
    """Label word of a simple chain, read in the direction ``orientation``.

    The walk starts at the component's least internal triangle with its
    vertices in label order and enters the tetrahedron on the side where
    (triangle, new vertex) matches the host orientation times
    ``orientation``.  Each step swaps in the new vertex for the one carrying
    the same label.
    """
    if not c.preimage.host.complex.oriented:
        raise NotOriented("chain words need an oriented host")
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    _, cycle = _walk(c.preimage, c.tetrahedra, c.internal_faces, orientation)
    labels = c.preimage.host.labels
    return Word(tuple(labels[v] for v in cycle), tuple(c.preimage.facet))


def preimage_summary(lt: LabeledTriangulation, S) -> dict:
    """JSON-ready description of one facet's preimage."""
    p = extract_preimage(lt, S)
    comps = []
    for comp in components(p, check=False) if lt.complex.dimension == 3 and len(lt.alphabet) == 4 else []:
        entry = {
            "length": comp.length,
            "internal_faces": len(comp.internal_faces),
            "homology": [str(g) for g in comp.homology],
            "boundary_homology": [str(g) for g in comp.boundary_homology],
            "solid_torus": _is_solid_torus(comp.homology, comp.boundary_homology, comp.boundary) is None,
        }
        if comp.is_simple_chain:
            w = chain_word(comp)
            entry["word"] = str(w)
            entry["word_degree"] = word_degree(w)
        else:
            entry["word"] = None
            entry["word_degree"] = None
            entry["chain_error"] = comp.chain_error
        comps.append(entry)
    return {
        "facet": "".join(p.facet),
        "mu": p.mu,
        "tetrahedra": len(p.simplices),
        "all_vertices_on_boundary": p.all_vertices_on_boundary,
        "components": comps,
    }
