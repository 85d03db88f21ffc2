"""Hopf invariant of a labeled 3-sphere.

Primary route: the labeling induces f_L: K -> ∂Δ³.  Build the simplicial
mapping cylinder of f_L, cone off the domain end with a fresh apex, and read
H from the cup square of the degree-2 generator paired with the degree-4
generator of the mapping cone.

Independent route (used as an oracle): pull back the target's volume
2-cocycle ω, solve δη = f^#ω, and pair η ⌣ f^#ω with the fundamental class.
Both routes use only exact integer arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .complex import Complex, Simplex, canonical, permutation_sign
from .errors import (
    DimensionMismatch,
    FullyLabeledSimplexPresent,
    GeneratorRankUnexpected,
    NotASphere,
    NotOriented,
)
from .homology import (
    Chain,
    Cochain,
    boundary_matrix,
    cup_product,
    evaluate,
    fundamental_class,
    homology_all,
    solve_coboundary,
    solve_integer,
)
from .labeling import LabeledTriangulation, has_fully_labeled_simplex

SIGN_CONVENTION = "apex-first cone orientation, target sphere oriented as boundary of [A,B,C,D]"


@dataclass(frozen=True)
class MappingCone:
    """Mapping cylinder of f_L with its domain end coned off.

    Vertex ids: the domain keeps ``0..V-1``; target vertex ``V+i`` is the
    image of the i-th letter; ``apex`` is ``V+4``.  ``order`` ranks every
    vertex (targets first, then domain vertices by (label, id), apex last)
    and is the order the prisms were cut along.
    """

    complex: Complex
    domain: tuple[int, ...]
    target: tuple[int, ...]
    apex: int
    order: dict[int, int]
    provenance: dict[int, str] = field(default_factory=dict, compare=False)


def _check_input(lt: LabeledTriangulation, *, check_homology: bool = True) -> None:
    c = lt.complex
    if len(lt.alphabet) != 4:
        raise DimensionMismatch(f"Hopf invariant needs four letters, got {lt.alphabet}")
    if c.dimension != 3:
        raise DimensionMismatch(f"Hopf invariant needs a 3-dimensional complex, got {c.dimension}")
    if has_fully_labeled_simplex(lt):
        raise FullyLabeledSimplexPresent("a tetrahedron carries all four letters")
    if not c.oriented:
        raise NotOriented("Hopf invariant needs an oriented complex")
    if not c.is_closed:
        raise NotASphere("complex is not a closed pseudomanifold")
    if check_homology:
        h = homology_all(c)
        if [(g.betti, g.torsion) for g in h] != [(1, ()), (0, ()), (0, ()), (1, ())]:
            raise NotASphere(f"homology {[str(g) for g in h]} is not that of S³")


def monotone_order(lt: LabeledTriangulation) -> dict[int, int]:
    """Domain vertices ranked by (label, id); f_L is then order preserving."""
    rank = lt.rank
    verts = sorted(lt.complex.vertices, key=lambda v: (rank[lt.labels[v]], v))
    return {v: i for i, v in enumerate(verts)}


def mapping_cone(lt: LabeledTriangulation, *, check_homology: bool = True) -> MappingCone:
    _check_input(lt, check_homology=check_homology)
    c = lt.complex
    V = c.vertex_count
    rank = lt.rank
    target = tuple(V + i for i in range(4))
    apex = V + 4
    dom_order = monotone_order(lt)
    order = {t: i for i, t in enumerate(target)}
    order.update({v: 4 + r for v, r in dom_order.items()})
    order[apex] = 4 + len(dom_order)

    def image(v):
        return target[rank[lt.labels[v]]]

    simplices: set[Simplex] = set()
    for s in c.simplices:
        w = sorted(s, key=dom_order.__getitem__)
        # ordered prism: images of w0..wi followed by wi..w3
        for i in range(len(w)):
            cell = {image(x) for x in w[: i + 1]} | set(w[i:])
            simplices.add(canonical(cell))
        simplices.add(canonical((apex,) + tuple(s)))
    simplices.update(combinations(target, 3))
    # keep maximal cells only
    maximal = _maximal(simplices)
    provenance = {v: "domain" for v in c.vertices}
    provenance.update({t: f"target:{lt.alphabet[i]}" for i, t in enumerate(target)})
    provenance[apex] = "apex"
    cone = Complex(tuple(sorted(maximal)), V + 5, False, f"cone({lt.name})" if lt.name else "cone")
    return MappingCone(cone, tuple(c.vertices), target, apex, order, provenance)


def _maximal(simplices: set[Simplex]) -> list[Simplex]:
    faces: set[Simplex] = set()
    for s in simplices:
        for k in range(1, len(s)):
            faces.update(combinations(s, k))
    return [s for s in simplices if s not in faces]


def mapping_cylinder(lt: LabeledTriangulation) -> MappingCone:
    """The cylinder alone (no apex); same vertex conventions as the cone."""
    cone = mapping_cone(lt)
    simplices = {s for s in cone.complex.simplices if cone.apex not in s}
    for s in lt.complex.simplices:
        simplices.add(canonical(s))
    cyl = Complex(tuple(sorted(_maximal(simplices))), cone.complex.vertex_count, False)
    return MappingCone(cyl, cone.domain, cone.target, cone.apex, cone.order, cone.provenance)


@dataclass(frozen=True)
class HopfReport:
    H: int
    h2_rank: int
    h4_rank: int
    convention: str = SIGN_CONVENTION
    generator_support: int = 0
    top_support: int = 0
    cone_f_vector: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "H": self.H,
            "h2_rank": self.h2_rank,
            "h4_rank": self.h4_rank,
            "convention": self.convention,
            "generator_support": self.generator_support,
            "top_support": self.top_support,
            "cone_f_vector": list(self.cone_f_vector),
        }


def _target_class(mc: MappingCone) -> Chain:
    t = mc.target
    # ∂[t0 t1 t2 t3] = [t1t2t3] - [t0t2t3] + [t0t1t3] - [t0t1t2]
    return Chain(2, {t[:i] + t[i + 1:]: (-1) ** i for i in range(4)})


def degree_two_generator(mc: MappingCone) -> Cochain:
    """Integral 2-cocycle taking the value 1 on the target sphere."""
    c = mc.complex
    bm = boundary_matrix(c, 3)
    # unknowns: values on 2-faces; equations: δα = 0 on 3-faces, <α, [S²]> = 1
    cols: list[dict[int, int]] = [dict() for _ in bm.rows]
    for j, col in enumerate(bm.columns):
        for i, v in col.items():
            cols[i][j] = v
    extra = len(bm.cols)
    index = {f: i for i, f in enumerate(bm.rows)}
    for face, v in _target_class(mc).coeffs.items():
        cols[index[face]][extra] = v
    x = solve_integer(extra + 1, len(bm.rows), cols, {extra: 1})
    if x is None:
        raise GeneratorRankUnexpected("no integral 2-cocycle evaluates to 1 on the target sphere")
    return Cochain(2, {bm.rows[i]: v for i, v in x.items()})


def top_cycle(mc: MappingCone, lt: LabeledTriangulation) -> Chain:
    """4-cycle of the cone with coefficient +1 on apex * (first tetrahedron of lt)."""
    c = mc.complex
    bm = boundary_matrix(c, 4)
    anchor = (mc.apex,) + tuple(lt.complex.simplices[0])
    key = canonical(anchor)
    sign = permutation_sign(anchor)
    j0 = bm.cols.index(key)
    others = [j for j in range(len(bm.cols)) if j != j0]
    columns = [bm.columns[j] for j in others]
    rhs = {i: -sign * v for i, v in bm.columns[j0].items()}
    x = solve_integer(len(bm.rows), len(others), columns, rhs)
    if x is None:
        raise GeneratorRankUnexpected("no 4-cycle through the anchor simplex")
    coeffs = {bm.cols[others[k]]: v for k, v in x.items()}
    coeffs[key] = sign
    return Chain(4, coeffs)


def hopf_invariant(
    lt: LabeledTriangulation,
    *,
    order: dict[int, int] | None = None,
    check_homology: bool = True,
    check_ranks: bool = True,
) -> HopfReport:
    """H(f_L) as <α⌣α, z> on the mapping cone.

    ``order`` optionally replaces the vertex order used by the cup product
    (the cohomology class, hence H, does not depend on it).
    """
    mc = mapping_cone(lt, check_homology=check_homology)
    c = mc.complex
    h2 = h4 = 1
    if check_ranks:
        h = homology_all(c)
        h2 = h[2].betti if len(h) > 2 else 0
        h4 = h[4].betti if len(h) > 4 else 0
        if h2 != 1 or h4 != 1:
            raise GeneratorRankUnexpected(f"cone has b2={h2}, b4={h4}")
    alpha = degree_two_generator(mc)
    z = top_cycle(mc, lt)
    square = cup_product(c, alpha, alpha, order=order or mc.order, check=False)
    H = evaluate(square, z)
    return HopfReport(H, h2, h4, SIGN_CONVENTION, len(alpha.values), len(z.coeffs), c.f_vector)


def hopf_under_random_orders(lt: LabeledTriangulation, count: int = 20, seed: int = 0) -> list[int]:
    """H recomputed with ``count`` random total orders on the cone's vertices."""
    mc = mapping_cone(lt)
    alpha = degree_two_generator(mc)
    z = top_cycle(mc, lt)
    rng = random.Random(seed)
    out = []
    verts = list(mc.complex.vertices)
    for _ in range(count):
        rng.shuffle(verts)
        order = {v: i for i, v in enumerate(verts)}
        out.append(evaluate(cup_product(mc.complex, alpha, alpha, order=order, check=False), z))
    return out


def hopf_whitehead(lt: LabeledTriangulation, *, check_homology: bool = True) -> int:
    """H via η ⌣ f^#ω on the sphere itself, δη = f^#ω.

    ω is the 2-cocycle of ∂Δ³ that is 1 on [A,B,C] and 0 elsewhere.  The cup
    product is taken in the label-monotone vertex order, where pulling back
    commutes with the cochain-level cup product.
    """
    _check_input(lt, check_homology=check_homology)
    c = lt.complex
    rank = lt.rank
    abc = frozenset(lt.alphabet[:3])
    pulled = {}
    for tri in c.faces(2):
        if lt.label_set(tri) == abc:
            pulled[tri] = permutation_sign([rank[lt.labels[v]] for v in tri])
    omega = Cochain(2, pulled)
    eta = solve_coboundary(c, omega)
    if eta is None:
        raise GeneratorRankUnexpected("pulled-back volume form is not a coboundary")
    order = monotone_order(lt)
    prod = cup_product(c, eta, omega, order=order, check=False)
    return evaluate(prod, fundamental_class(c))


def hopf_consistency(lt: LabeledTriangulation) -> dict:
    """H next to the per-facet preimage statistics, with structural flags.

    Flags: an empty preimage forces H = 0; H != 0 forces μ >= 9 on every
    facet; a facet whose preimage is a single chain of m tetrahedra has
    m >= 3|H| + 3.  Word degrees are reported for inspection only.
    """
    from .preimage import preimage_summary

    report = hopf_invariant(lt)
    H = report.H
    facets = {}
    for missing in lt.alphabet:
        facet = tuple(x for x in lt.alphabet if x != missing)
        facets["".join(facet)] = preimage_summary(lt, facet)
    mus = [f["mu"] for f in facets.values()]
    empty = any(f["tetrahedra"] == 0 for f in facets.values())
    single = {k: f["components"][0]["length"] for k, f in facets.items() if len(f["components"]) == 1}
    flags = {
        "empty_preimage_implies_zero": (not empty) or H == 0,
        "nonzero_implies_mu_at_least_9": H == 0 or min(mus) >= 9,
        "single_chain_length_bound": all(m >= 3 * abs(H) + 3 for m in single.values()) if H else True,
    }
    return {
        "H": H,
        "H_oracle": hopf_whitehead(lt, check_homology=False),
        "facets": facets,
        "flags": flags,
        "single_chain_lengths": single,
    }
