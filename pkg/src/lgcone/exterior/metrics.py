"""Hermitian metrics, the Hodge star and the (n-1)-th root of a strictly
positive (n-1,n-1)-form.

The Hodge star is exact: the Riemannian metric induced by a rational
positive (1,1)-form is rational, Gram determinants are rational, and the
wedge-to-top pairing is a signed permutation.  Extracting an (n-1)-th root
is the one approximate operation in the package (the root is an algebraic
irrational in general); it reports an exact residual certificate computed
after rationalizing the floating-point candidate.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from ..exactla.matrices import apply_rows, inverse, det
from ..exactla.psd import Definiteness
from ..exactla.scalars import GaussianRational, as_gaussian
from .complex_structure import ComplexStructure
from .forms import Form, power

__all__ = [
    "NotPositiveDefinite",
    "NotStrictlyPositive",
    "HermitianMetric",
    "hodge_star",
    "codifferential",
    "HermitianRoot",
    "hermitian_root",
]


class NotPositiveDefinite(ValueError):
    """The candidate fundamental form is not exactly positive definite."""


class NotStrictlyPositive(ValueError):
    """hermitian_root needs a strictly positive (n-1,n-1)-form."""


class HermitianMetric:
    """A positive-definite invariant Hermitian metric, given by its
    fundamental (1,1)-form.  Star operators are cached per degree."""

    def __init__(self, structure: ComplexStructure, omega: Form):
        if not omega.is_real:
            raise NotPositiveDefinite("fundamental form must be real")
        self.structure = structure
        self.omega = omega
        self.matrix = structure.hermitian_matrix(omega)
        if (
            structure.is_positive_11(omega)
            is not Definiteness.POSITIVE_DEFINITE
        ):
            raise NotPositiveDefinite("fundamental form is not positive definite")

    @classmethod
    def from_hermitian(cls, structure: ComplexStructure, h) -> "HermitianMetric":
        return cls(structure, structure.form_from_hermitian(h))

    @functools.cached_property
    def _vector_metric(self) -> list[list[Fraction]]:
        """g(X, Y) = omega(X, JY) as an exact symmetric matrix on the algebra."""
        pres = self.structure.presentation
        dim = pres.dim
        w = [[Fraction(0)] * dim for _ in range(dim)]
        for (i, j), c in zip(pres.basis(2), self.omega.coeffs):
            w[i][j] = c.re
            w[j][i] = -c.re
        jm = self.structure.j_matrix
        # J on vectors is minus the transpose of J on covectors
        g = [
            [
                -sum((w[i][m] * jm[k][m] for m in range(dim)), Fraction(0))
                for k in range(dim)
            ]
            for i in range(dim)
        ]
        for i in range(dim):
            for k in range(dim):
                if g[i][k] != g[k][i]:
                    raise NotPositiveDefinite("induced metric is not symmetric")
        return g

    @functools.cached_property
    def _covector_metric(self) -> list[list[Fraction]]:
        return [[Fraction(v) for v in row] for row in inverse(self._vector_metric)]

    @functools.cached_property
    def volume_coefficient(self) -> Fraction:
        """Coefficient of omega^n / n! on the canonical top monomial."""
        n = self.structure.n
        top = power(self.omega, n)
        fact = 1
        for m in range(2, n + 1):
            fact *= m
        c = top.coeffs[0]
        if c.im:
            raise NotPositiveDefinite("volume form is not real")
        return c.re / fact

    @functools.lru_cache(maxsize=None)
    def _gram(self, k: int) -> list[list[Fraction]]:
        pres = self.structure.presentation
        basis = pres.basis(k)
        ginv = self._covector_metric
        out = []
        for a in basis:
            row = []
            for b in basis:
                sub = [[ginv[i][j] for j in b] for i in a]
                row.append(Fraction(det(sub)) if k else Fraction(1))
            out.append(row)
        return out

    @functools.lru_cache(maxsize=None)
    def star_matrix(self, k: int) -> tuple[dict, ...]:
        """Sparse rows of *: Lambda^k -> Lambda^(2n-k)."""
        pres = self.structure.presentation
        dim = pres.dim
        basis_k = pres.basis(k)
        index_c = pres.basis_index(dim - k)
        gram = self._gram(k)
        vol = self.volume_coefficient
        rows: list[dict] = [dict() for _ in range(len(index_c))]
        full = tuple(range(dim))
        from .presentation import _merge_indices

        for i, mono in enumerate(basis_k):
            comp = tuple(x for x in full if x not in mono)
            merged = _merge_indices(mono, comp)
            sign = merged[0]
            # (star g)_comp * sign = vol * (gram g)_i
            for j, val in enumerate(gram[i]):
                if val:
                    rows[index_c[comp]][j] = (
                        rows[index_c[comp]].get(j, Fraction(0)) + vol * val / sign
                    )
        return tuple(rows)

    def star(self, f: Form) -> Form:
        coeffs = apply_rows(self.star_matrix(f.degree), f.coeffs)
        return Form(
            self.structure.presentation,
            self.structure.presentation.dim - f.degree,
            tuple(as_gaussian(c) for c in coeffs),
        )

    def codifferential(self, f: Form) -> Form:
        """d* = -*d* (the manifold dimension 2n is even)."""
        return -self.star(self.star(f).d())


def hodge_star(f: Form, metric: HermitianMetric) -> Form:
    return metric.star(f)


def codifferential(f: Form, metric: HermitianMetric) -> Form:
    return metric.codifferential(f)


@dataclass(frozen=True)
class HermitianRoot:
    """Result of the (n-1)-th root extraction with its residual certificate."""

    metric: HermitianMetric
    residual: Fraction

    @property
    def residual_float(self) -> float:
        return float(self.residual)


def hermitian_root(
    structure: ComplexStructure, phi: Form, max_denominator: int = 10**12
) -> HermitianRoot:
    """A Hermitian metric omega with omega^(n-1) ~= phi.

    For n = 2 the root is phi itself (exact).  For n > 2 the candidate is
    computed in floating point from the adjugate of the Hermitian matrix of
    phi, rationalized, and certified by the exact relative residual
    max|omega^(n-1) - phi| / max|phi|.
    """
    n = structure.n
    if structure.is_positive_n1n1(phi) is not Definiteness.POSITIVE_DEFINITE:
        raise NotStrictlyPositive("form is not strictly positive")
    if n == 2:
        return HermitianRoot(HermitianMetric(structure, phi), Fraction(0))
    g = np.array(
        [[complex(v) for v in row] for row in structure.n1n1_matrix(phi)]
    )
    detg = np.linalg.det(g).real
    # g is proportional to the transposed adjugate of the root's matrix, so
    # the conjugated adjugate of g recovers the root up to a positive scale
    adj = (detg * np.linalg.inv(g)).conj()
    h0 = adj / detg ** ((n - 2) / (n - 1))
    h0 = (h0 + h0.conj().T) / 2
    omega0 = _metric_form_from_float(structure, h0, max_denominator)
    pow0 = power(omega0, n - 1)
    # omega^(n-1) is (n-1)-homogeneous: fix the remaining positive scale
    num = sum(float(complex(a).real) * float(complex(b).real) +
              float(complex(a).imag) * float(complex(b).imag)
              for a, b in zip(pow0.coeffs, phi.coeffs))
    den = sum(abs(complex(c)) ** 2 for c in pow0.coeffs)
    lam = num / den
    scale = lam ** (1.0 / (n - 1))
    omega = _metric_form_from_float(
        structure, np.array([[complex(v) for v in row] for row in
                             structure.hermitian_matrix(omega0)]) * scale,
        max_denominator,
    )
    metric = HermitianMetric(structure, omega)
    diff = power(omega, n - 1) - phi
    max_diff = max(
        (abs(c.re) + abs(c.im) for c in diff.coeffs), default=Fraction(0)
    )
    max_phi = max(abs(c.re) + abs(c.im) for c in phi.coeffs)
    return HermitianRoot(metric, max_diff / max_phi)


def _metric_form_from_float(
    structure: ComplexStructure, h: np.ndarray, max_denominator: int
) -> Form:
    n = structure.n
    exact = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            re = Fraction(float(h[a][b].real)).limit_denominator(max_denominator)
            im = Fraction(float(h[a][b].imag)).limit_denominator(max_denominator)
            if a == b:
                exact[a][a] = GaussianRational(re, 0)
            else:
                exact[a][b] = GaussianRational(re, im)
                exact[b][a] = GaussianRational(re, -im)
    return structure.form_from_hermitian(exact)
