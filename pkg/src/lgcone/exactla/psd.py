"""Exact definiteness tests for Hermitian matrices over Gaussian rationals.

Positive definiteness is decided by leading principal minors; positive
semidefiniteness by the sign pattern of the characteristic polynomial
(all eigenvalues of a Hermitian matrix are real, and they are all
nonnegative iff the coefficients of the characteristic polynomial
alternate in sign).  No floating point is involved, so boundary cases
(semidefinite vs definite) are decided correctly.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Sequence

from .matrices import det
from .scalars import GaussianRational, as_gaussian

__all__ = ["Definiteness", "NotHermitian", "charpoly", "is_psd_hermitian"]


class NotHermitian(ValueError):
    """Raised when a matrix expected to be Hermitian is not."""


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive-definite"
    POSITIVE_SEMIDEFINITE = "positive-semidefinite"
    INDEFINITE = "indefinite-or-negative"


def _check_hermitian(h: Sequence[Sequence]) -> list[list[GaussianRational]]:
    n = len(h)
    m = [[as_gaussian(h[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i].conjugate():
                raise NotHermitian(f"entry ({i},{j}) breaks Hermitian symmetry")
    return m


def charpoly(mat: Sequence[Sequence]) -> list:
    """Coefficients [c_0, ..., c_n] of det(tI - M), c_n = 1 (Faddeev-LeVerrier)."""
    n = len(mat)
    m = [[as_gaussian(v) for v in row] for row in mat]
    coeffs = [as_gaussian(0)] * (n + 1)
    coeffs[n] = as_gaussian(1)
    work = [[as_gaussian(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # work <- M (work + c_{n-k+1} I)
        shifted = [row[:] for row in work]
        for i in range(n):
            shifted[i][i] = shifted[i][i] + coeffs[n - k + 1]
        work = [
            [
                sum((m[i][l] * shifted[l][j] for l in range(n)), as_gaussian(0))
                for j in range(n)
            ]
            for i in range(n)
        ]
        trace = sum((work[i][i] for i in range(n)), as_gaussian(0))
        coeffs[n - k] = -trace / k
    return coeffs


def is_psd_hermitian(h: Sequence[Sequence]) -> Definiteness:
    """Exact trichotomy PD / PSD / indefinite for a Hermitian matrix."""
    m = _check_hermitian(h)
    n = len(m)
    if n == 0:
        return Definiteness.POSITIVE_DEFINITE
    # positive definite iff every leading principal minor is > 0
    definite = True
    for k in range(1, n + 1):
        minor = det([row[:k] for row in m[:k]])
        minor = as_gaussian(minor)
        if minor.im:
            raise NotHermitian("principal minor is not real")
        if minor.re <= 0:
            definite = False
            break
    if definite:
        return Definiteness.POSITIVE_DEFINITE
    # all eigenvalues >= 0 iff (-1)^(n-k) c_k >= 0 for every coefficient
    coeffs = charpoly(m)
    for k in range(n + 1):
        c = coeffs[k]
        if c.im:
            raise NotHermitian("characteristic polynomial is not real")
        if ((-1) ** (n - k)) * c.re < 0:
            return Definiteness.INDEFINITE
    return Definiteness.POSITIVE_SEMIDEFINITE


def is_zero_matrix(h: Sequence[Sequence]) -> bool:
    return all(not as_gaussian(v) for row in h for v in row)
