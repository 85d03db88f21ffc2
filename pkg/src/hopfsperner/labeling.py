"""Vertex labelings and the simplicial maps they induce.

A labeling assigns every vertex a letter of a declared alphabet.  Mapping the
i-th letter to the i-th vertex of a simplex gives the simplicial map f_L; all
sign conventions use the alphabet's declared (ascending) order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .complex import Complex, Simplex, boundary_of, canonical, permutation_sign
from .errors import ClosedManifold, DimensionMismatch, NotOriented, UnknownLabel

Label = str
LETTERS = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def default_alphabet(size: int) -> tuple[Label, ...]:
    """A, B, C, ... for up to 26 letters, else decimal strings."""
    if size <= len(LETTERS):
        return tuple(LETTERS[:size])
    return tuple(str(i) for i in range(size))


def sort_labels(labels: Iterable[Label]) -> tuple[Label, ...]:
    """Ascending order; numeric strings compare as integers."""
    items = set(labels)
    if items and all(x.lstrip("-").isdigit() for x in items):
        return tuple(sorted(items, key=int))
    return tuple(sorted(items))


@dataclass(frozen=True)
class LabeledTriangulation:
    """A complex plus a total labeling ``labels[v]`` over ``alphabet``."""

    complex: Complex
    labels: tuple[Label, ...]
    alphabet: tuple[Label, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.labels) != self.complex.vertex_count:
            raise UnknownLabel(
                f"{len(self.labels)} labels for {self.complex.vertex_count} vertices"
            )
        if len(set(self.alphabet)) != len(self.alphabet):
            raise UnknownLabel("alphabet has repeated letters")
        known = set(self.alphabet)
        for v, lab in enumerate(self.labels):
            if lab not in known:
                raise UnknownLabel(f"vertex {v} has label {lab!r} outside {self.alphabet}")

    @property
    def dimension(self) -> int:
        return self.complex.dimension

    @property
    def rank(self) -> dict[Label, int]:
        return {lab: i for i, lab in enumerate(self.alphabet)}

    def label_of(self, v: int) -> Label:
        return self.labels[v]

    def label_set(self, simplex: Iterable[int]) -> frozenset[Label]:
        return frozenset(self.labels[v] for v in simplex)

    def reversed(self) -> "LabeledTriangulation":
        return LabeledTriangulation(self.complex.reversed(), self.labels, self.alphabet, self.name)

    def with_complex(self, c: Complex, name: str | None = None) -> "LabeledTriangulation":
        return LabeledTriangulation(c, self.labels, self.alphabet, self.name if name is None else name)


def make_labeled(
    c: Complex,
    labels: Mapping[int, Label] | Sequence[Label],
    alphabet: Sequence[Label] | None = None,
    name: str = "",
) -> LabeledTriangulation:
    """Build a labeled triangulation; labels may be a sequence or a vertex map.

    Vertex ids absent from the complex may be left out of a mapping; they get
    the alphabet's first letter so the labeling stays total.
    """
    if isinstance(labels, Mapping):
        given = {int(k): str(v) for k, v in labels.items()}
    else:
        given = {i: str(v) for i, v in enumerate(labels)}
    if alphabet is None:
        alphabet = sort_labels(given.values())
    alphabet = tuple(str(a) for a in alphabet)
    missing = [v for v in c.vertices if v not in given]
    if missing:
        raise UnknownLabel(f"vertices without a label: {missing[:10]}")
    filler = alphabet[0] if alphabet else ""
    full = tuple(given.get(v, filler) for v in range(c.vertex_count))
    return LabeledTriangulation(c, full, alphabet, name or c.name)


def _check_labels(lt: LabeledTriangulation, labels: Iterable[Label]) -> tuple[Label, ...]:
    rank = lt.rank
    out = []
    for lab in labels:
        if lab not in rank:
            raise UnknownLabel(f"label {lab!r} not in alphabet {lt.alphabet}")
        out.append(lab)
    if len(set(out)) != len(out):
        raise UnknownLabel(f"repeated label in {out}")
    return tuple(sorted(out, key=rank.__getitem__))


def parse_label_set(lt: LabeledTriangulation, spec: str | Iterable[Label]) -> tuple[Label, ...]:
    """Accept ``"ABC"``, ``"A,B,C"`` or an iterable of letters."""
    if isinstance(spec, str):
        items = spec.split(",") if "," in spec else list(spec)
    else:
        items = list(spec)
    return _check_labels(lt, [x.strip() for x in items if x.strip()])


@dataclass(frozen=True)
class FullyLabeledSet:
    """Simplices of dimension |S|-1 whose labels are exactly S."""

    labels: tuple[Label, ...]
    simplices: tuple[Simplex, ...]
    signs: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.simplices)


def label_sign(lt: LabeledTriangulation, simplex: Sequence[int]) -> int:
    """Orientation of the ordered ``simplex`` relative to ascending label order."""
    rank = lt.rank
    return permutation_sign([rank[lt.labels[v]] for v in simplex])


def fully_labeled(lt: LabeledTriangulation, S: Iterable[Label] | None = None) -> FullyLabeledSet:
    """All faces (of any maximal simplex) whose labels biject onto ``S``.

    Signs are attached for maximal simplices of an oriented complex: the
    orientation of the stored tuple against the label order.
    """
    target = _check_labels(lt, lt.alphabet if S is None else S)
    k = len(target)
    want = frozenset(target)
    if k == 0:
        return FullyLabeledSet(target, ())
    found: dict[Simplex, int] = {}
    c = lt.complex
    labels = lt.labels
    for s in c.simplices:
        if len(s) < k or not want <= {labels[v] for v in s}:
            continue
        if len(s) == k:
            found[canonical(s)] = label_sign(lt, s) if c.oriented else 0
            continue
        cs = [v for v in canonical(s) if labels[v] in want]
        for face in combinations(cs, k):
            if len({labels[v] for v in face}) == k:
                found.setdefault(face, 0)
    simplices = tuple(sorted(found))
    signs = None
    if c.oriented and k == c.dimension + 1:
        signs = tuple(found[f] for f in simplices)
    return FullyLabeledSet(target, simplices, signs)


def signed_count(lt: LabeledTriangulation, S: Iterable[Label] | None = None) -> int:
    """Sum of label-order signs over fully labeled maximal simplices."""
    target = _check_labels(lt, lt.alphabet if S is None else S)
    c = lt.complex
    if c.dimension != len(target) - 1:
        raise DimensionMismatch(
            f"{len(target)} labels need maximal simplices of dimension {len(target) - 1}, "
            f"got {c.dimension}"
        )
    if not c.oriented:
        raise NotOriented("signed count needs an oriented complex")
    want = frozenset(target)
    return sum(label_sign(lt, s) for s in c.simplices if lt.label_set(s) == want)


def count_fully_labeled_top(lt: LabeledTriangulation, S: Iterable[Label] | None = None) -> int:
    target = frozenset(_check_labels(lt, lt.alphabet if S is None else S))
    return sum(
        1 for s in lt.complex.simplices if len(s) == len(target) and lt.label_set(s) == target
    )


def boundary_labeling(lt: LabeledTriangulation) -> LabeledTriangulation:
    """Restriction of the labeling to the boundary complex."""
    b = boundary_of(lt.complex)
    if not b.simplices:
        raise ClosedManifold("complex has empty boundary")
    return LabeledTriangulation(b, lt.labels, lt.alphabet, b.name)


def check_no_fully_labeled_on_boundary(
    lt: LabeledTriangulation, S: Iterable[Label] | None = None
) -> bool:
    return len(fully_labeled(boundary_labeling(lt), S)) == 0


def has_fully_labeled_simplex(lt: LabeledTriangulation) -> bool:
    full = frozenset(lt.alphabet)
    return any(lt.label_set(s) >= full for s in lt.complex.simplices)


def induced_map_wellformed(lt: LabeledTriangulation, target: str = "simplex") -> bool:
    """Whether f_L is a simplicial map to the full simplex or to its boundary."""
    if target == "simplex":
        return True
    if target == "boundary_sphere":
        return not has_fully_labeled_simplex(lt)
    raise ValueError(f"unknown target {target!r}")


def relabel_vertices(lt: LabeledTriangulation, perm: Sequence[int]) -> LabeledTriangulation:
    """Apply the vertex bijection ``v -> perm[v]`` (an isomorphic copy)."""
    c = lt.complex
    simplices = tuple(tuple(perm[v] for v in s) for s in c.simplices)
    labels = [""] * c.vertex_count
    for v in range(c.vertex_count):
        labels[perm[v]] = lt.labels[v]
    return LabeledTriangulation(
        Complex(simplices, c.vertex_count, c.oriented, c.name), tuple(labels), lt.alphabet, lt.name
    )
