"""Generators and combinators for labeled triangulations.

Everything here is deterministic given its inputs (and seed, where one is
taken).  Reference Hopf triangulations ship as JSON assets and are accepted
only after recomputing their Hopf invariant and internal-face counts.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, permutations
from typing import Mapping, Sequence

from .complex import (
    Complex,
    Simplex,
    barycentric_subdivision,
    build_complex,
    canonical,
    oriented_as,
    permutation_sign,
)
from .errors import (
    AssetMissing,
    AssetVerificationFailed,
    BadBoundarySpec,
    NoLabelMatching,
    NotOriented,
    OrientationClash,
)
from .labeling import Label, LabeledTriangulation, default_alphabet


def boundary_simplex_sphere(n: int, alphabet: Sequence[Label] | None = None) -> LabeledTriangulation:
    """∂Δ^{n+1} with vertex i labeled by the i-th letter, oriented as a boundary."""
    if n < 1:
        raise ValueError("sphere dimension must be at least 1")
    alphabet = tuple(alphabet) if alphabet is not None else default_alphabet(n + 2)
    verts = tuple(range(n + 2))
    simplices = [
        oriented_as(verts[:j] + verts[j + 1:], (-1) ** j) for j in range(n + 2)
    ]
    c = build_complex(simplices, n + 2, oriented=True, name=f"bd_simplex_{n + 1}")
    return LabeledTriangulation(c, alphabet[: n + 2], alphabet, c.name)


def labeled_simplex(n: int, labels: Sequence[Label] | None = None, alphabet: Sequence[Label] | None = None) -> LabeledTriangulation:
    """A single positively oriented n-simplex (identity labels by default)."""
    alphabet = tuple(alphabet) if alphabet is not None else default_alphabet(n + 1)
    labels = tuple(labels) if labels is not None else alphabet[: n + 1]
    c = build_complex([tuple(range(n + 1))], n + 1, oriented=True, name=f"simplex_{n}")
    return LabeledTriangulation(c, labels, alphabet, c.name)


def cone(lt: LabeledTriangulation, apex_label: Label) -> LabeledTriangulation:
    """Cone with a fresh apex; its oriented boundary is ``lt`` itself."""
    c = lt.complex
    if not c.oriented:
        raise NotOriented("cone needs an oriented base")
    if apex_label not in lt.alphabet:
        raise BadBoundarySpec(f"apex label {apex_label!r} not in {lt.alphabet}")
    apex = c.vertex_count
    simplices = tuple((apex,) + tuple(s) for s in c.simplices)
    name = f"cone({lt.name})" if lt.name else "cone"
    cc = Complex(simplices, apex + 1, True, name)
    return LabeledTriangulation(cc, lt.labels + (apex_label,), lt.alphabet, name)


def mirror(lt: LabeledTriangulation) -> LabeledTriangulation:
    """Orientation-reversed copy (same simplices and labels)."""
    name = f"mirror({lt.name})" if lt.name else "mirror"
    return LabeledTriangulation(lt.complex.reversed().with_name(name), lt.labels, lt.alphabet, name)


def _orientation_of(lt: LabeledTriangulation, simplex: Sequence[int]) -> int:
    key = canonical(simplex)
    for s in lt.complex.simplices:
        if canonical(s) == key:
            return permutation_sign(s) * permutation_sign(simplex)
    raise NoLabelMatching(f"{key} is not a maximal simplex")


def _default_matching(
    K1: LabeledTriangulation, t1: Simplex, K2: LabeledTriangulation, t2: Simplex
) -> dict[int, int] | None:
    """Label-preserving bijection t1 -> t2 reversing the orientation, if any."""
    a = sorted(t1, key=lambda v: (K1.labels[v], v))
    b = sorted(t2, key=lambda v: (K2.labels[v], v))
    if [K1.labels[v] for v in a] != [K2.labels[v] for v in b]:
        return None
    matching = dict(zip(a, b))
    if _matching_reverses(K1, t1, K2, t2, matching):
        return matching
    # swap two vertices sharing a label to flip the parity
    for i in range(len(a) - 1):
        if K1.labels[a[i]] == K1.labels[a[i + 1]]:
            matching[a[i]], matching[a[i + 1]] = matching[a[i + 1]], matching[a[i]]
            return matching
    return None


def _matching_reverses(K1, t1, K2, t2, matching) -> bool:
    o1 = _oriented_tuple(K1, t1)
    return _orientation_of(K2, tuple(matching[v] for v in o1)) == -1


def _oriented_tuple(lt: LabeledTriangulation, simplex: Sequence[int]) -> Simplex:
    key = canonical(simplex)
    for s in lt.complex.simplices:
        if canonical(s) == key:
            return tuple(s)
    raise NoLabelMatching(f"{key} is not a maximal simplex")


def choose_gluing(K1: LabeledTriangulation, K2: LabeledTriangulation) -> tuple[Simplex, Simplex, dict[int, int]]:
    """Least maximal simplex of K1 (then of K2) admitting a matching."""
    by_labels: dict[tuple, list[Simplex]] = {}
    for s in sorted(canonical(s) for s in K2.complex.simplices):
        by_labels.setdefault(tuple(sorted(K2.labels[v] for v in s)), []).append(s)
    for t1 in sorted(canonical(s) for s in K1.complex.simplices):
        for t2 in by_labels.get(tuple(sorted(K1.labels[v] for v in t1)), []):
            m = _default_matching(K1, t1, K2, t2)
            if m is not None:
                return t1, t2, m
    raise NoLabelMatching("no pair of maximal simplices admits an orientation-reversing label matching")


def connected_sum(
    K1: LabeledTriangulation,
    K2: LabeledTriangulation,
    t1: Sequence[int] | None = None,
    t2: Sequence[int] | None = None,
    matching: Mapping[int, int] | None = None,
) -> LabeledTriangulation:
    """Remove t1 and t2 and identify their boundaries through ``matching``.

    Vertices of K1 keep their ids; the unmatched vertices of K2 follow in
    increasing order.  Removing a simplex with all facet letters (one repeated)
    loses two of that facet's internal faces; any other choice keeps the sum.
    """
    if K1.alphabet != K2.alphabet:
        raise NoLabelMatching(f"alphabets differ: {K1.alphabet} vs {K2.alphabet}")
    if not (K1.complex.oriented and K2.complex.oriented):
        raise NotOriented("connected sum needs oriented summands")
    if t1 is None or t2 is None:
        if t1 is not None or t2 is not None or matching is not None:
            raise NoLabelMatching("give both gluing simplices or neither")
        t1, t2, matching = choose_gluing(K1, K2)
    t1, t2 = canonical(t1), canonical(t2)
    if matching is None:
        matching = _default_matching(K1, t1, K2, t2)
        if matching is None:
            raise NoLabelMatching(f"no orientation-reversing label matching between {t1} and {t2}")
    matching = {int(k): int(v) for k, v in matching.items()}
    if set(matching) != set(t1) or set(matching.values()) != set(t2):
        raise NoLabelMatching("matching must be a bijection between the two simplices")
    if any(K1.labels[u] != K2.labels[v] for u, v in matching.items()):
        raise NoLabelMatching("matching does not preserve labels")
    if not _matching_reverses(K1, t1, K2, t2, matching):
        raise OrientationClash("matching preserves orientation; the sum would not be oriented")
    V1 = K1.complex.vertex_count
    inverse = {v: u for u, v in matching.items()}
    ren: dict[int, int] = {}
    nxt = V1
    for v in range(K2.complex.vertex_count):
        if v in inverse:
            ren[v] = inverse[v]
        else:
            ren[v] = nxt
            nxt += 1
    simplices = [tuple(s) for s in K1.complex.simplices if canonical(s) != t1]
    simplices += [tuple(ren[v] for v in s) for s in K2.complex.simplices if canonical(s) != t2]
    labels = list(K1.labels) + [""] * (nxt - V1)
    for v in range(K2.complex.vertex_count):
        if v not in inverse:
            labels[ren[v]] = K2.labels[v]
    name = f"{K1.name or 'K1'}#{K2.name or 'K2'}"
    c = build_complex(simplices, nxt, oriented=True, name=name)
    return LabeledTriangulation(c, tuple(labels), K1.alphabet, name)


def subdivide_labeled(lt: LabeledTriangulation, rounds: int = 1) -> LabeledTriangulation:
    """Barycentric subdivision; a barycenter copies the label of the least
    vertex id of the face it subdivides."""
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    out = lt
    for _ in range(rounds):
        c, prov = barycentric_subdivision(out.complex)
        labels = tuple(out.labels[min(prov[v])] for v in range(c.vertex_count))
        name = f"sd({out.name})" if out.name else "sd"
        out = LabeledTriangulation(c.with_name(name), labels, out.alphabet, name)
    return out


# ---------------------------------------------------------------------------
# random discs and spheres


def parse_boundary_word(spec: str | Sequence[Label]) -> tuple[Label, ...]:
    word = tuple(spec.split(",")) if isinstance(spec, str) and "," in spec else tuple(spec)
    if len(word) < 3:
        raise BadBoundarySpec("boundary word needs at least three letters")
    return word


def random_boundary_word(rng: random.Random, degree: int, extra: int = 0, alphabet=("A", "B", "C")) -> tuple[Label, ...]:
    """Cyclic word over three letters of the given winding degree.

    Walks on the 3-cycle A->B->C->A: ``3|d|`` forward (or backward) steps plus
    ``extra`` random back-and-forth or stay moves, shuffled.
    """
    step = 1 if degree >= 0 else -1
    moves = [step] * (3 * abs(degree))
    for _ in range(extra):
        kind = rng.choice(("pair", "stay"))
        moves += [1, -1] if kind == "pair" else [0]
    rng.shuffle(moves)
    while len(moves) < 3:
        moves += [0]
    pos = rng.randrange(3)
    word = []
    for m in moves:
        word.append(alphabet[pos])
        pos = (pos + m) % 3
    return tuple(word)


def random_labeled_disc(
    n: int,
    boundary_spec: str | Sequence[Label],
    seed: int = 0,
    steps: int = 0,
    alphabet: Sequence[Label] | None = None,
) -> LabeledTriangulation:
    """Labeled triangulated disc with a prescribed boundary labeling.

    Only ``n = 1`` is generated: the boundary is a cycle labeled by the given
    word, the interior starts as a fan from one centre vertex and then takes
    ``steps`` seeded random moves (stellar subdivisions of triangles or
    interior edges, and relabels of interior vertices).  Boundary vertices
    keep their labels, so the boundary labeling equals the word exactly.
    """
    if n != 1:
        raise BadBoundarySpec("random discs are generated for n = 1 only")
    word = parse_boundary_word(boundary_spec)
    alphabet = tuple(alphabet) if alphabet is not None else ("A", "B", "C")
    if len(alphabet) != 3:
        raise BadBoundarySpec(f"n = 1 needs a three-letter alphabet, got {alphabet}")
    if set(word) - set(alphabet):
        raise BadBoundarySpec(f"boundary word {''.join(word)} uses letters outside {alphabet}")
    rng = random.Random(seed)
    m = len(word)
    centre = m
    labels: list[Label] = list(word) + [rng.choice(alphabet)]
    # the cycle 0..m-1 runs counterclockwise; triangles are (i, i+1, centre)
    tris: set[Simplex] = {(i, (i + 1) % m, centre) for i in range(m)}
    interior = {centre}
    for _ in range(steps):
        r = rng.random()
        if r < 0.45:
            t = rng.choice(sorted(tris))
            v = len(labels)
            labels.append(rng.choice(alphabet))
            interior.add(v)
            tris.remove(t)
            a, b, c = t
            tris.update({(a, b, v), (b, c, v), (c, a, v)})
        elif r < 0.7:
            edge = _random_interior_edge(rng, tris)
            if edge is None:
                continue
            u, w = edge
            v = len(labels)
            labels.append(rng.choice(alphabet))
            interior.add(v)
            for t in [t for t in tris if u in t and w in t]:
                tris.remove(t)
                i = t.index(u)
                j = t.index(w)
                # replace w by v, then u by v, keeping orientation
                tris.add(tuple(v if k == j else x for k, x in enumerate(t)))
                tris.add(tuple(v if k == i else x for k, x in enumerate(t)))
        else:
            v = rng.choice(sorted(interior))
            labels[v] = rng.choice(alphabet)
    c = build_complex(sorted(tris), len(labels), oriented=True, name=f"disc_{''.join(word)}_{seed}_{steps}")
    return LabeledTriangulation(c, tuple(labels), alphabet, c.name)


def _random_interior_edge(rng: random.Random, tris: set[Simplex]) -> tuple[int, int] | None:
    count: dict[Simplex, int] = {}
    for t in tris:
        for e in combinations(sorted(t), 2):
            count[e] = count.get(e, 0) + 1
    inner = sorted(e for e, k in count.items() if k == 2)
    return rng.choice(inner) if inner else None


def random_labeled_sphere(seed: int = 0, steps: int = 20, alphabet=("A", "B", "C", "D")) -> LabeledTriangulation:
    """Random labeled 2-sphere: stellar moves on ∂Δ³ with random labels."""
    rng = random.Random(seed)
    base = boundary_simplex_sphere(2, alphabet)
    tris = set(base.complex.simplices)
    labels = [rng.choice(alphabet) for _ in range(4)]
    for _ in range(steps):
        t = rng.choice(sorted(tris))
        v = len(labels)
        labels.append(rng.choice(alphabet))
        tris.remove(t)
        a, b, c = t
        tris.update({(a, b, v), (b, c, v), (c, a, v)})
    c = build_complex(sorted(tris), len(labels), oriented=True, name=f"sphere2_{seed}_{steps}")
    return LabeledTriangulation(c, tuple(labels), tuple(alphabet), c.name)


# ---------------------------------------------------------------------------
# reference assets


@dataclass(frozen=True)
class ReferenceAsset:
    name: str
    triangulation: LabeledTriangulation
    expected_H: int
    expected_mu: dict[str, int]
    provenance: str = ""
    computed: dict = field(default_factory=dict, compare=False)


ASSET_PACKAGE = "hopfsperner.assets"


def asset_names() -> list[str]:
    try:
        files = resources.files(ASSET_PACKAGE)
    except ModuleNotFoundError:
        return []
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def _asset_file(name: str) -> str:
    if name == "hd":
        raise AssetMissing("hd needs a value of d, e.g. hd3")
    return f"{name}.json"


def load_reference(name: str, d: int | None = None, *, verify: bool = True) -> ReferenceAsset:
    """Load a bundled reference triangulation and check it.

    ``name`` is ``h1``, ``h2`` or ``hd`` with ``d`` given (``hd3`` also works).
    The asset's recorded Hopf invariant and per-facet internal-face counts are
    recomputed; any mismatch raises :class:`AssetVerificationFailed`.
    """
    from .io import triangulation_from_dict

    key = f"hd{d}" if name == "hd" and d is not None else name
    try:
        text = resources.files(ASSET_PACKAGE).joinpath(_asset_file(key)).read_text()
    except (FileNotFoundError, ModuleNotFoundError, OSError):
        raise AssetMissing(f"no bundled asset named {key!r}") from None
    data = json.loads(text)
    lt = triangulation_from_dict(data)
    meta = data.get("reference", {})
    asset = ReferenceAsset(
        key,
        lt,
        int(meta.get("H")),
        {k: int(v) for k, v in meta.get("mu", {}).items()},
        meta.get("provenance", ""),
    )
    if verify:
        asset = verify_reference(asset)
    return asset


def verify_reference(asset: ReferenceAsset) -> ReferenceAsset:
    from .hopf import hopf_invariant
    from .preimage import extract_preimage

    lt = asset.triangulation
    H = hopf_invariant(lt).H
    mus = {facet: extract_preimage(lt, facet).mu for facet in asset.expected_mu}
    problems = []
    if H != asset.expected_H:
        problems.append(f"H = {H}, expected {asset.expected_H}")
    for facet, want in asset.expected_mu.items():
        if mus[facet] != want:
            problems.append(f"mu({facet}) = {mus[facet]}, expected {want}")
    if problems:
        raise AssetVerificationFailed(f"{asset.name}: " + "; ".join(problems))
    return ReferenceAsset(
        asset.name, lt, asset.expected_H, asset.expected_mu, asset.provenance, {"H": H, "mu": mus}
    )


def connected_sum_family(d: int, h1: LabeledTriangulation, h2: LabeledTriangulation) -> LabeledTriangulation:
    """Sum of ⌊|d|/2⌋ copies of h2 and, for odd d, one h1 (mirrored for d < 0).

    Gluing is done along simplices that carry only two letters, so the
    internal-face counts add up: μ = 9⌈|d|/2⌉ when each summand has μ = 9.
    A summand may have its letters permuted to find such a pair, which keeps
    its H.
    """
    if d == 0:
        raise ValueError("d = 0 has no summands")
    parts = [h2] * (abs(d) // 2) + ([h1] if abs(d) % 2 else [])
    if d < 0:
        parts = [mirror(p) for p in parts]
    # inner summands are glued twice; give them enough two-letter simplices
    for i, p in enumerate(parts):
        need = (i > 0) + (i < len(parts) - 1)
        while len(_two_letter(p)) < need:
            t = _two_letter(p)[0]
            p = stellar_subdivide(p, t, p.labels[t[0]])
        parts[i] = p
    out = parts[0]
    for p in parts[1:]:
        p, (t1, t2, m) = _matching_relabel(out, p)
        out = connected_sum(out, p, t1, t2, m)
    return LabeledTriangulation(out.complex.with_name(f"sum_d{d}"), out.labels, out.alphabet, f"sum_d{d}")


def _two_letter(lt: LabeledTriangulation) -> list[Simplex]:
    return sorted(canonical(s) for s in lt.complex.simplices if len({lt.labels[v] for v in s}) <= 2)


def stellar_subdivide(lt: LabeledTriangulation, simplex: Sequence[int], label: Label) -> LabeledTriangulation:
    """Cone a maximal simplex off a new vertex with the given label.

    The new simplices keep the orientation of the old one.  With ``label``
    taken from the simplex itself no new letter combination appears.
    """
    key = canonical(simplex)
    c = lt.complex
    v = c.vertex_count
    out = []
    for s in c.simplices:
        if canonical(s) != key:
            out.append(tuple(s))
            continue
        out.extend(tuple(v if k == i else x for k, x in enumerate(s)) for i in range(len(s)))
    name = lt.name
    cc = Complex(tuple(out), v + 1, c.oriented, name)
    return LabeledTriangulation(cc, lt.labels + (label,), lt.alphabet, name)


def permute_labels(lt: LabeledTriangulation, mapping: dict[Label, Label]) -> LabeledTriangulation:
    """Rename letters by a bijection of the alphabet.

    This composes f_L with a symmetry of the target of degree ±1, so H is
    unchanged; μ of facet S moves to facet mapping(S).
    """
    if sorted(mapping) != sorted(lt.alphabet) or sorted(mapping.values()) != sorted(lt.alphabet):
        raise BadBoundarySpec(f"{mapping} is not a permutation of {lt.alphabet}")
    return LabeledTriangulation(lt.complex, tuple(mapping[x] for x in lt.labels), lt.alphabet, lt.name)


def _matching_relabel(K1: LabeledTriangulation, K2: LabeledTriangulation):
    """K2, relabeled by the first letter permutation (identity first) that
    admits a two-letter gluing with K1, together with that gluing."""
    for perm in permutations(K2.alphabet):
        mapping = dict(zip(K2.alphabet, perm))
        p = K2 if perm == K2.alphabet else permute_labels(K2, mapping)
        try:
            return p, choose_two_letter_gluing(K1, p)
        except NoLabelMatching:
            continue
    raise NoLabelMatching("no letter permutation gives a two-letter gluing")


def choose_two_letter_gluing(K1: LabeledTriangulation, K2: LabeledTriangulation):
    """Least simplex pair with only two distinct letters that admits a matching."""
    for t1 in _two_letter(K1):
        for t2 in _two_letter(K2):
            m = _default_matching(K1, t1, K2, t2)
            if m is not None:
                return t1, t2, m
    raise NoLabelMatching("no two-letter simplices admit a matching")
