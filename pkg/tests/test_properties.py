"""Property tests for the invariants the modules promise."""

from __future__ import annotations

import random

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfsperner.bounds import mu_bounds, mu_exact, mu_lower, mu_upper
from hopfsperner.complex import barycentric_subdivision
from hopfsperner.constructions import (
    connected_sum,
    mirror,
    random_boundary_word,
    random_labeled_disc,
    random_labeled_sphere,
    subdivide_labeled,
)
from hopfsperner.errors import NoLabelMatching
from hopfsperner.degree import check_index_bound, sphere_map_degree
from hopfsperner.homology import (
    boundary_matrix,
    determinant,
    invariant_factors_sparse,
    matmul,
    smith_normal_form,
)
from hopfsperner.labeling import (
    LabeledTriangulation,
    boundary_labeling,
    count_fully_labeled_top,
    fully_labeled,
    relabel_vertices,
    signed_count,
)
from hopfsperner.preimage import make_word, word_degree

small = st.integers(min_value=-6, max_value=6)
matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=m, max_size=m)
    )
)
words = st.text(alphabet="ABC", min_size=1, max_size=30)
seeds = st.integers(0, 10_000)


def winding(word: str) -> int:
    # independent count: signed steps around the triangle A->B->C->A
    pos = {"A": 0, "B": 1, "C": 2}
    total = 0
    for a, b in zip(word, word[1:] + word[:1]):
        step = (pos[b] - pos[a]) % 3
        total += {0: 0, 1: 1, 2: -1}[step]
    return total // 3


@given(matrices)
def test_snf_decomposition(a):
    snf = smith_normal_form(a)
    assert matmul(matmul(snf.U, a), snf.V) == snf.S
    assert abs(determinant(snf.U)) == 1 and abs(determinant(snf.V)) == 1
    m, n = len(a), len(a[0])
    diag = snf.diagonal
    assert all(snf.S[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))


@given(matrices)
def test_snf_matches_sympy(a):
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    ours = [x for x in smith_normal_form(a, with_transforms=False).diagonal if x]
    theirs = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    ref = [abs(int(theirs[i, i])) for i in range(min(theirs.shape)) if theirs[i, i] != 0]
    assert ours == sorted(ref)


@given(matrices)
def test_sparse_factors_match_dense(a):
    m, n = len(a), len(a[0])
    cols = [{i: a[i][j] for i in range(m) if a[i][j]} for j in range(n)]
    assert invariant_factors_sparse(m, n, cols) == smith_normal_form(a).invariant_factors


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 30))
def test_boundary_squared_zero(seed, steps):
    lt = random_labeled_sphere(seed, steps)
    c = lt.complex
    d1 = boundary_matrix(c, 1).to_dense()
    d2 = boundary_matrix(c, 2).to_dense()
    assert all(v == 0 for row in matmul(d1, d2) for v in row)


@given(words)
def test_word_degree_is_winding(w):
    assert word_degree(w) == winding(w)


@given(words, st.integers(0, 40))
def test_word_degree_rotation_and_reversal(w, k):
    word = make_word(w)
    assert word_degree(word.rotated(k)) == word_degree(word)
    assert word_degree(word.reversed()) == -word_degree(word)
    assert abs(word_degree(word)) <= len(w) // 3


@given(words)
def test_word_degree_pairs(w):
    vals = {word_degree(w, p) for p in [("A", "B"), ("B", "C"), ("C", "A")]}
    assert vals == {word_degree(w)}


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(-4, 4), st.integers(0, 4), st.integers(0, 40))
def test_disc_index_identity(seed, degree, extra, steps):
    rng = random.Random(seed)
    word = random_boundary_word(rng, degree, extra)
    disc = random_labeled_disc(1, word, seed=seed, steps=steps)
    rep = check_index_bound(disc)
    assert rep.invariant == degree
    assert rep.observed >= abs(degree)
    assert signed_count(disc) == degree
    assert rep.observed % 2 == degree % 2


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(0, 25))
def test_sphere_degree_well_defined(seed, steps):
    rep = sphere_map_degree(random_labeled_sphere(seed, steps))
    assert rep.consistent


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(0, 30))
def test_relabel_vertices_keeps_counts(seed, steps):
    disc = random_labeled_disc(1, "ABCABC", seed=seed, steps=steps)
    perm = list(range(disc.complex.vertex_count))
    random.Random(seed).shuffle(perm)
    other = relabel_vertices(disc, perm)
    assert len(fully_labeled(other)) == len(fully_labeled(disc))
    assert signed_count(other) == signed_count(disc)


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(0, 30))
def test_mirror_flips_signed_count(seed, steps):
    disc = random_labeled_disc(1, "ABCBCA", seed=seed, steps=steps)
    assert signed_count(mirror(disc)) == -signed_count(disc)
    assert count_fully_labeled_top(mirror(disc)) == count_fully_labeled_top(disc)


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(0, 15))
def test_subdivision_keeps_degree(seed, steps):
    lt = random_labeled_sphere(seed, steps)
    assert sphere_map_degree(subdivide_labeled(lt, 1)).degree == sphere_map_degree(lt).degree


@settings(max_examples=15, deadline=None)
@given(seeds, st.integers(0, 15))
def test_subdivision_keeps_euler_characteristic(seed, steps):
    c = random_labeled_sphere(seed, steps).complex
    sd, prov = barycentric_subdivision(c)
    assert sd.euler_characteristic() == c.euler_characteristic() == 2
    assert len(sd.simplices) == 6 * len(c.simplices)
    assert len(prov) == sum(c.f_vector)


@settings(max_examples=20, deadline=None)
@given(seeds, seeds, st.integers(0, 15), st.integers(0, 15))
def test_sphere_connected_sum(s1, s2, k1, k2):
    a, b = random_labeled_sphere(s1, k1), random_labeled_sphere(s2, k2)
    try:
        s = connected_sum(a, b)
    except NoLabelMatching:
        return
    assert s.complex.euler_characteristic() == 2
    assert s.complex.is_coherent()
    assert sphere_map_degree(s).degree == sphere_map_degree(a).degree + sphere_map_degree(b).degree


@given(st.integers(-200, 200))
def test_bounds_invariants(d):
    assert mu_lower(d) == mu_lower(-d) and mu_upper(d) == mu_upper(-d)
    assert mu_lower(d) <= mu_upper(d)
    exact = mu_exact(d)
    assert exact is None or mu_lower(d) <= exact <= mu_upper(d)
    b = mu_bounds(d)
    assert (b.lower, b.upper, b.exact) == (mu_lower(d), mu_upper(d), exact)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 30))
def test_boundary_word_preserved(seed, steps):
    word = random_boundary_word(random.Random(seed), 2, 3)
    disc = random_labeled_disc(1, word, seed=seed, steps=steps)
    b = boundary_labeling(disc)
    assert tuple(b.labels[v] for v in range(len(word))) == word
    assert isinstance(b, LabeledTriangulation)
