"""Exact linear algebra: sparse reduced echelon form, kernels, images,
subspaces and quotients.

Matrices are stored as lists of sparse rows (``dict`` column -> scalar);
vectors are dense tuples.  Scalars may be ``Fraction`` or
``GaussianRational`` -- any exact field element with the usual operators.
Row reduction is plain fraction-based Gaussian elimination, which is fast
enough at the ambient dimensions this project needs (<= a few hundred).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .scalars import GaussianRational

__all__ = [
    "SubspaceNotContained",
    "sparse_from_dense",
    "dense_from_sparse",
    "apply_rows",
    "rref",
    "rank",
    "kernel",
    "solve",
    "det",
    "inverse",
    "Subspace",
    "QuotientSpace",
    "quotient",
]


class SubspaceNotContained(ValueError):
    """Raised when a claimed subspace is not contained in the ambient one."""


def sparse_from_dense(rows: Sequence[Sequence]) -> list[dict]:
    return [{j: v for j, v in enumerate(row) if v} for row in rows]


def dense_from_sparse(row: dict, ncols: int, zero=Fraction(0)) -> tuple:
    return tuple(row.get(j, zero) for j in range(ncols))


def apply_rows(rows: Sequence[dict], vec: Sequence) -> tuple:
    """Apply a sparse matrix (list of rows) to a dense vector."""
    out = []
    for row in rows:
        s = 0
        for j, c in row.items():
            v = vec[j]
            if v:
                s = s + c * v
        out.append(s)
    return tuple(out)


def rref(rows: Sequence[dict], ncols: int) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of a sparse matrix.

    Returns the nonzero rows (each with leading coefficient 1, pivot columns
    cleared everywhere else) and the sorted pivot column list.
    """
    work = [dict(r) for r in rows if r]
    result: list[dict] = []
    pivots: list[int] = []
    for col in range(ncols):
        pivot_row = None
        for r in work:
            if r.get(col):
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work.remove(pivot_row)
        lead = pivot_row[col]
        pivot_row = {j: v / lead for j, v in pivot_row.items() if v}
        for r in result + work:
            factor = r.get(col)
            if factor:
                for j, v in pivot_row.items():
                    nv = r.get(j, 0) - factor * v
                    if nv:
                        r[j] = nv
                    elif j in r:
                        del r[j]
        result.append(pivot_row)
        pivots.append(col)
        work = [r for r in work if r]
        if not work:
            break
    return result, pivots


def rank(rows: Sequence[dict], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def kernel(rows: Sequence[dict], ncols: int) -> list[tuple]:
    """Exact basis of the null space {x : M x = 0}."""
    red, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(red, pivots):
            c = row.get(f)
            if c:
                vec[p] = -c
        basis.append(tuple(vec))
    return basis


def solve(rows: Sequence[dict], ncols: int, rhs: Sequence):
    """One exact solution of M x = rhs, or None if the system is inconsistent."""
    aug = []
    for row, b in zip(rows, rhs):
        r = dict(row)
        if b:
            r[ncols] = b
        aug.append(r)
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row.get(ncols, Fraction(0))
    return tuple(x)


def det(mat: Sequence[Sequence]):
    """Exact determinant by Gaussian elimination (dense, square)."""
    n = len(mat)
    work = [list(row) for row in mat]
    sign = 1
    result = 1
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            return 0 * (work[0][0] if n else Fraction(0))
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            sign = -sign
        lead = work[col][col]
        result = result * lead
        for r in range(col + 1, n):
            f = work[r][col]
            if f:
                f = f / lead
                for j in range(col, n):
                    work[r][j] = work[r][j] - f * work[col][j]
    return sign * result


def inverse(mat: Sequence[Sequence]) -> list[list]:
    """Exact inverse of a square matrix."""
    n = len(mat)
    rows = []
    for i, row in enumerate(mat):
        r = {j: v for j, v in enumerate(row) if v}
        r[n + i] = Fraction(1)
        rows.append(r)
    red, pivots = rref(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    out = [[Fraction(0)] * n for _ in range(n)]
    for row, p in zip(red, pivots[:n]):
        for j, v in row.items():
            if j >= n:
                out[p][j - n] = v
    return out


@dataclass(frozen=True)
class Subspace:
    """A linear subspace given by a canonical (reduced echelon) basis."""

    ambient: int
    basis: tuple[tuple, ...]

    @classmethod
    def from_vectors(cls, ambient: int, vectors: Sequence[Sequence]) -> "Subspace":
        rows = sparse_from_dense(vectors)
        red, _ = rref(rows, ambient)
        return cls(ambient, tuple(dense_from_sparse(r, ambient) for r in red))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        eye = []
        for i in range(ambient):
            v = [Fraction(0)] * ambient
            v[i] = Fraction(1)
            eye.append(tuple(v))
        return cls(ambient, tuple(eye))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence) -> bool:
        rows = sparse_from_dense(self.basis)
        rows.append({j: v for j, v in enumerate(vector) if v})
        return rank(rows, self.ambient) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vector: Sequence):
        """Coordinates of a vector in this subspace's basis, or None."""
        cols = [{i: b[i] for i in range(self.ambient) if b[i]} for b in self.basis]
        rows = [
            {k: cols[k].get(i, 0) for k in range(self.dim) if cols[k].get(i, 0)}
            for i in range(self.ambient)
        ]
        return solve(rows, self.dim, vector)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.from_vectors(self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        # null space of [A^T | -B^T] stacked columnwise gives the coefficients
        m, k = self.dim, other.dim
        rows = []
        for i in range(self.ambient):
            row = {}
            for a in range(m):
                if self.basis[a][i]:
                    row[a] = self.basis[a][i]
            for b in range(k):
                if other.basis[b][i]:
                    row[m + b] = -other.basis[b][i]
            if row:
                rows.append(row)
        vecs = []
        for sol in kernel(rows, m + k):
            v = [Fraction(0)] * self.ambient
            for a in range(m):
                if sol[a]:
                    for i in range(self.ambient):
                        v[i] = v[i] + sol[a] * self.basis[a][i]
            vecs.append(tuple(v))
        return Subspace.from_vectors(self.ambient, vecs)

    def map(self, rows: Sequence[dict]) -> "Subspace":
        """Image of this subspace under a linear map given by sparse rows."""
        nrows = len(rows)
        return Subspace.from_vectors(nrows, [apply_rows(rows, v) for v in self.basis])


@dataclass(frozen=True)
class QuotientSpace:
    """A quotient ambient/sub with chosen representatives and projection."""

    ambient_space: Subspace
    sub: Subspace
    representatives: tuple[tuple, ...]

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def project(self, vector: Sequence) -> tuple:
        """Class coordinates of a vector of the ambient subspace."""
        cols = list(self.sub.basis) + list(self.representatives)
        n = self.ambient_space.ambient
        rows = [
            {k: cols[k][i] for k in range(len(cols)) if cols[k][i]} for i in range(n)
        ]
        sol = solve(rows, len(cols), vector)
        if sol is None:
            raise SubspaceNotContained("vector is not in the ambient subspace")
        return tuple(sol[self.sub.dim :])

    def lift(self, coords: Sequence) -> tuple:
        n = self.ambient_space.ambient
        v = [Fraction(0)] * n
        for c, rep in zip(coords, self.representatives):
            if c:
                for i in range(n):
                    v[i] = v[i] + c * rep[i]
        return tuple(v)


def quotient(ambient: Subspace, sub: Subspace) -> QuotientSpace:
    """Quotient of exact subspaces, with echelon-pivot representatives.

    Raises SubspaceNotContained unless sub is contained in ambient.
    Representatives are the ambient basis vectors completing the sub basis,
    chosen greedily in canonical order for reproducibility.
    """
    if sub.ambient != ambient.ambient:
        raise ValueError("ambient dimensions differ")
    if not ambient.contains_subspace(sub):
        raise SubspaceNotContained("sub is not contained in ambient")
    reps = []
    current = list(sub.basis)
    r = sub.dim
    for v in ambient.basis:
        rows = sparse_from_dense(current + [v])
        if rank(rows, ambient.ambient) > r:
            reps.append(v)
            current.append(v)
            r += 1
    return QuotientSpace(ambient, sub, tuple(reps))
