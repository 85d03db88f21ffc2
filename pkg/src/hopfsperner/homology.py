"""Exact integer chain complexes.

Boundary matrices are stored sparsely; Smith normal form runs on Python ints,
so there is no overflow and no floating point anywhere.  Large sparse systems
are first reduced with unit pivots (boundary matrices of manifolds are almost
entirely made of those) and only the small residual block goes through the
dense Smith normal form.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .complex import Complex, Simplex, canonical, permutation_sign
from .errors import (
    DegreeMismatch,
    DegreeOutOfRange,
    NotABoundary,
    NotACocycle,
    NotACycle,
)

Matrix = list[list[int]]


# ---------------------------------------------------------------------------
# chains and cochains


def _normalize(entries: Mapping[Sequence[int], int]) -> dict[Simplex, int]:
    """Re-key on sorted tuples (absorbing the sorting sign) and drop zeros."""
    out: dict[Simplex, int] = {}
    for s, v in entries.items():
        c = tuple(s)
        if any(c[i] > c[i + 1] for i in range(len(c) - 1)):
            v *= permutation_sign(c)
            c = canonical(c)
        out[c] = out.get(c, 0) + v
    return {s: v for s, v in out.items() if v != 0}


@dataclass(frozen=True)
class Chain:
    """Integer k-chain keyed by sorted simplex tuples; zeros are dropped."""

    degree: int
    coeffs: Mapping[Simplex, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def from_oriented(cls, simplices: Iterable[Sequence[int]], degree: int | None = None):
        """Sum of oriented simplices, each with coefficient +1 in its own order."""
        coeffs: dict[Simplex, int] = {}
        deg = degree
        for s in simplices:
            c = canonical(s)
            deg = len(c) - 1 if deg is None else deg
            coeffs[c] = coeffs.get(c, 0) + permutation_sign(s)
        return cls(0 if deg is None else deg, coeffs)

    def __add__(self, other: "Chain") -> "Chain":
        if other.degree != self.degree:
            raise DegreeMismatch("cannot add chains of different degree")
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.degree, out)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {s: -c for s, c in self.coeffs.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.coeffs


@dataclass(frozen=True)
class Cochain:
    """Integer p-cochain on sorted simplex tuples.

    The value on an arbitrarily ordered tuple is the stored value times the
    sign of the permutation sorting it.
    """

    degree: int
    values: Mapping[Simplex, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", _normalize(self.values))

    def __call__(self, simplex: Sequence[int]) -> int:
        v = self.values.get(canonical(simplex), 0)
        return v * permutation_sign(simplex) if v else 0

    def __add__(self, other: "Cochain") -> "Cochain":
        if other.degree != self.degree:
            raise DegreeMismatch("cannot add cochains of different degree")
        out = dict(self.values)
        for s, v in other.values.items():
            out[s] = out.get(s, 0) + v
        return Cochain(self.degree, out)

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, {s: -v for s, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)


Cocycle = Cochain


def boundary_chain(chain: Chain) -> Chain:
    out: dict[Simplex, int] = {}
    for s, c in chain.coeffs.items():
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            if face:
                out[face] = out.get(face, 0) + (-1) ** i * c
    return Chain(chain.degree - 1, out)


def coboundary(c: Complex, cochain: Cochain) -> Cochain:
    """δ of a cochain, evaluated on every (p+1)-face of ``c``."""
    out: dict[Simplex, int] = {}
    vals = cochain.values
    for s in c.faces(cochain.degree + 1):
        total = 0
        for i in range(len(s)):
            v = vals.get(s[:i] + s[i + 1:])
            if v:
                total += (-1) ** i * v
        if total:
            out[s] = total
    return Cochain(cochain.degree + 1, out)


def is_cocycle(c: Complex, cochain: Cochain) -> bool:
    return not coboundary(c, cochain).values


# ---------------------------------------------------------------------------
# boundary matrices


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse ∂_k: rows are (k-1)-faces, columns k-faces, both sorted."""

    degree: int
    rows: list[Simplex]
    cols: list[Simplex]
    columns: list[dict[int, int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> Matrix:
        m, n = self.shape
        out = [[0] * n for _ in range(m)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def triplets(self) -> list[tuple[int, int, int]]:
        """(row, col, value) triplets, for plain-text debug dumps."""
        return sorted((i, j, v) for j, col in enumerate(self.columns) for i, v in col.items())


def boundary_matrix(c: Complex, k: int) -> BoundaryMatrix:
    if k < 1 or k > c.dimension:
        raise DegreeOutOfRange(f"boundary degree {k} outside [1, {c.dimension}]")
    rows = c.faces(k - 1)
    cols = c.faces(k)
    index = {f: i for i, f in enumerate(rows)}
    columns = []
    for s in cols:
        columns.append({index[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))})
    return BoundaryMatrix(k, rows, cols, columns)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * n
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(n):
                    if brow[j]:
                        acc[j] += x * brow[j]
        out.append(acc)
    return out


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def determinant(a: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFDecomposition:
    """``U · A · V = S`` with U, V unimodular and S diagonal, d1 | d2 | ..."""

    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        k = min(len(self.S), len(self.S[0]) if self.S else 0)
        return [self.S[i][i] for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d]


def smith_normal_form(a: Matrix, *, with_transforms: bool = True) -> SNFDecomposition:
    """Smith normal form over the integers.

    Pivoting takes the smallest-magnitude nonzero entry, ties broken by
    (row, column), which keeps entry growth in check and the result
    reproducible.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(map(int, row)) for row in a]
    u = identity(m) if with_transforms else None
    v = identity(n) if with_transforms else None

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        if u is not None:
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def row_axpy(dst, src, q):
        # row[dst] -= q * row[src]
        rs, rd = s[src], s[dst]
        for j in range(n):
            if rs[j]:
                rd[j] -= q * rs[j]
        if u is not None:
            us, ud = u[src], u[dst]
            for j in range(m):
                if us[j]:
                    ud[j] -= q * us[j]

    def col_axpy(dst, src, q):
        for row in s:
            if row[src]:
                row[dst] -= q * row[src]
        if v is not None:
            for row in v:
                if row[src]:
                    row[dst] -= q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            row = s[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = s[t][t]
            for i in range(t + 1, m):
                if s[i][t]:
                    row_axpy(i, t, s[i][t] // p)
            for j in range(t + 1, n):
                if s[t][j]:
                    col_axpy(j, t, s[t][j] // p)
            rest = [(abs(s[i][t]), 0, i) for i in range(t + 1, m) if s[i][t]]
            rest += [(abs(s[t][j]), 1, j) for j in range(t + 1, n) if s[t][j]]
            if rest:
                _, kind, idx = min(rest)
                if kind == 0:
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % p),
                None,
            )
            if bad is not None:
                row_axpy(t, bad, -1)
                continue
            break
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
    return SNFDecomposition(u or [], s, v or [])


# ---------------------------------------------------------------------------
# sparse elimination


class _SparseSystem:
    """Row-major sparse integer matrix with a column index.

    ``eliminate_units`` performs unit-pivot Schur complements (row operations
    only touch the pivot column's rows; the pivot row and column are then
    retired).  The optional right-hand side follows the row operations so the
    retired pivots can be back-substituted.
    """

    def __init__(self, nrows: int, ncols: int, columns: Iterable[Mapping[int, int]], rhs=None):
        self.nrows, self.ncols = nrows, ncols
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for j, col in enumerate(columns):
            for i, val in col.items():
                if val:
                    self.rows.setdefault(i, {})[j] = val
                    self.cols.setdefault(j, set()).add(i)
        self.rhs = dict(rhs) if rhs is not None else None
        self.pivots: list[tuple[int, int, dict[int, int], int]] = []

    def _pivot(self, i: int, j: int) -> None:
        prow = self.rows.pop(i)
        a = prow[j]
        b_i = self.rhs.pop(i, 0) if self.rhs is not None else 0
        for k in prow:
            self.cols[k].discard(i)
        for r in list(self.cols.get(j, ())):
            row = self.rows[r]
            q = row[j] * a  # a = ±1, so this is row[j] / a
            for k, x in prow.items():
                y = row.get(k, 0) - q * x
                if y:
                    if k not in row:
                        self.cols.setdefault(k, set()).add(r)
                    row[k] = y
                elif k in row:
                    del row[k]
                    self.cols[k].discard(r)
            if not row:
                del self.rows[r]
            if self.rhs is not None and b_i:
                y = self.rhs.get(r, 0) - q * b_i
                if y:
                    self.rhs[r] = y
                else:
                    self.rhs.pop(r, None)
        self.cols.pop(j, None)
        self.pivots.append((i, j, prow, b_i))

    def eliminate_units(self) -> None:
        heap = [(len(rs), j) for j, rs in self.cols.items() if rs]
        heapq.heapify(heap)
        deferred: list[int] = []
        while True:
            progress = False
            while heap:
                length, j = heapq.heappop(heap)
                rs = self.cols.get(j)
                if not rs:
                    continue
                if len(rs) != length:
                    heapq.heappush(heap, (len(rs), j))
                    continue
                best = None
                for i in rs:
                    if abs(self.rows[i][j]) == 1:
                        cost = len(self.rows[i])
                        if best is None or cost < best[0] or (cost == best[0] and i < best[1]):
                            best = (cost, i)
                if best is None:
                    deferred.append(j)
                    continue
                self._pivot(best[1], j)
                progress = True
            if not progress or not deferred:
                break
            heap = [(len(self.cols[j]), j) for j in deferred if self.cols.get(j)]
            heapq.heapify(heap)
            deferred = []

    def residual(self) -> tuple[list[int], list[int], Matrix]:
        rows = sorted(self.rows)
        cols = sorted(j for j, rs in self.cols.items() if rs)
        cidx = {j: k for k, j in enumerate(cols)}
        dense = [[0] * len(cols) for _ in rows]
        for a, i in enumerate(rows):
            for j, v in self.rows[i].items():
                dense[a][cidx[j]] = v
        return rows, cols, dense


def invariant_factors_sparse(nrows: int, ncols: int, columns: Sequence[Mapping[int, int]]) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix."""
    system = _SparseSystem(nrows, ncols, columns)
    system.eliminate_units()
    factors = [1] * len(system.pivots)
    _, _, dense = system.residual()
    if dense and dense[0]:
        factors += smith_normal_form(dense, with_transforms=False).invariant_factors
    return sorted(factors)


def solve_integer(
    nrows: int, ncols: int, columns: Sequence[Mapping[int, int]], rhs: Mapping[int, int]
) -> dict[int, int] | None:
    """An integer solution ``x`` of ``A x = b`` (sparse), or None if none exists."""
    system = _SparseSystem(nrows, ncols, columns, rhs)
    system.eliminate_units()
    rows, cols, dense = system.residual()
    b = system.rhs or {}
    # equations whose row vanished entirely must have a zero right-hand side
    live = set(rows)
    if any(v and r not in live for r, v in b.items()):
        return None
    x: dict[int, int] = {}
    if rows and cols:
        snf = smith_normal_form(dense)
        ub = [sum(snf.U[a][k] * b.get(rows[k], 0) for k in range(len(rows))) for a in range(len(rows))]
        diag = snf.diagonal
        y = [0] * len(cols)
        for a in range(len(rows)):
            d = diag[a] if a < len(diag) else 0
            if d == 0:
                if ub[a] != 0:
                    return None
            else:
                if ub[a] % d:
                    return None
                y[a] = ub[a] // d
        for k, j in enumerate(cols):
            val = sum(snf.V[k][t] * y[t] for t in range(len(cols)))
            if val:
                x[j] = val
    elif rows:
        if any(b.get(r, 0) for r in rows):
            return None
    for i, j, prow, b_i in reversed(system.pivots):
        a = prow[j]
        acc = b_i - sum(v * x.get(k, 0) for k, v in prow.items() if k != j)
        val = acc * a
        if val:
            x[j] = val
    return x


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = ["Z"] * self.betti + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def _boundary_columns(c: Complex, k: int) -> tuple[int, int, list[dict[int, int]]]:
    bm = boundary_matrix(c, k)
    return len(bm.rows), len(bm.cols), bm.columns


def _factors(c: Complex, k: int) -> list[int]:
    if k < 1 or k > c.dimension:
        return []
    return invariant_factors_sparse(*_boundary_columns(c, k))


def homology(c: Complex, k: int) -> HomologyGroup:
    """H_k(c; Z) from the invariant factors of ∂_k and ∂_{k+1}."""
    if k < 0 or k > c.dimension:
        raise DegreeOutOfRange(f"homology degree {k} outside [0, {c.dimension}]")
    n_k = len(c.faces(k))
    rank_k = len(_factors(c, k))
    out = _factors(c, k + 1)
    return HomologyGroup(n_k - rank_k - len(out), tuple(d for d in out if d > 1))


def homology_all(c: Complex) -> list[HomologyGroup]:
    factors = [[]] + [_factors(c, k) for k in range(1, c.dimension + 1)] + [[]]
    out = []
    for k in range(c.dimension + 1):
        n_k = len(c.faces(k))
        nxt = factors[k + 1]
        out.append(HomologyGroup(n_k - len(factors[k]) - len(nxt), tuple(d for d in nxt if d > 1)))
    return out


def betti_numbers(c: Complex) -> tuple[int, ...]:
    return tuple(h.betti for h in homology_all(c))


def solve_boundary(c: Complex, z: Chain) -> Chain:
    """A (k+1)-chain w with ∂w = z exactly, or NotABoundary."""
    k = z.degree
    if z.is_zero():
        return Chain(k + 1, {})
    if not boundary_chain(z).is_zero() and k > 0:
        raise NotACycle("chain is not a cycle")
    if k == 0 and sum(z.coeffs.values()) != 0:
        raise NotABoundary("0-chain with nonzero augmentation")
    if k + 1 > c.dimension:
        raise NotABoundary("no simplices of degree k+1")
    bm = boundary_matrix(c, k + 1)
    index = {f: i for i, f in enumerate(bm.rows)}
    try:
        rhs = {index[s]: v for s, v in z.coeffs.items()}
    except KeyError as exc:
        raise NotABoundary(f"chain uses a simplex outside the complex: {exc}") from None
    x = solve_integer(len(bm.rows), len(bm.cols), bm.columns, rhs)
    if x is None:
        raise NotABoundary("cycle is not a boundary over Z")
    w = Chain(k + 1, {bm.cols[j]: v for j, v in x.items()})
    if boundary_chain(w).coeffs != z.coeffs:
        raise AssertionError("solve_boundary produced a chain with the wrong boundary")
    return w


def solve_coboundary(c: Complex, target: Cochain) -> Cochain | None:
    """A (p-1)-cochain η with δη = target, or None."""
    p = target.degree
    if p < 1:
        return None
    bm = boundary_matrix(c, p)
    # δ_{p-1} is the transpose of ∂_p: rows are p-faces, columns (p-1)-faces
    columns: list[dict[int, int]] = [dict() for _ in bm.rows]
    for j, col in enumerate(bm.columns):
        for i, v in col.items():
            columns[i][j] = v
    index = {f: j for j, f in enumerate(bm.cols)}
    rhs = {index[s]: v for s, v in target.values.items()}
    x = solve_integer(len(bm.cols), len(bm.rows), columns, rhs)
    if x is None:
        return None
    return Cochain(p - 1, {bm.rows[i]: v for i, v in x.items()})


# ---------------------------------------------------------------------------
# cup product and pairing


def cup_product(
    c: Complex,
    a: Cochain,
    b: Cochain,
    order: Callable[[int], object] | Mapping[int, int] | None = None,
    *,
    check: bool = True,
) -> Cochain:
    """Alexander–Whitney cup product with respect to a total vertex order.

    ``order`` is a rank map (or key function) on vertex ids; by default the
    natural id order.  The result is stored, like every cochain, on sorted
    tuples.
    """
    if check:
        for name, x in (("left", a), ("right", b)):
            if not is_cocycle(c, x):
                raise NotACocycle(f"{name} factor is not a cocycle")
    key = _order_key(order)
    p, q = a.degree, b.degree
    out: dict[Simplex, int] = {}
    for s in c.faces(p + q):
        w = tuple(sorted(s, key=key))
        front = a(w[: p + 1])
        if not front:
            continue
        back = b(w[p:])
        if not back:
            continue
        out[s] = front * back * permutation_sign(w)
    return Cochain(p + q, out)


def _order_key(order):
    if order is None:
        return lambda v: v
    if callable(order):
        return order
    return lambda v: order[v]


def evaluate(cochain: Cochain, chain: Chain) -> int:
    if cochain.degree != chain.degree:
        raise DegreeMismatch(
            f"cochain degree {cochain.degree} vs chain degree {chain.degree}"
        )
    vals = cochain.values
    return sum(c * vals.get(s, 0) for s, c in chain.coeffs.items())


def unit_cocycle(c: Complex) -> Cochain:
    return Cochain(0, {(v,): 1 for v in c.vertices})


def fundamental_class(c: Complex) -> Chain:
    """Sum of the oriented maximal simplices of an oriented complex."""
    return Chain.from_oriented(c.simplices, c.dimension)
