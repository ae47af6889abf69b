"""Exterior forms with exact Gaussian-rational coefficients.

A ``Form`` is a coefficient vector over the lexicographic basis of
Lambda^k of the dual Lie algebra.  Real forms are simply forms whose
coefficients all have zero imaginary part; the (p, q)-bigrading is a tag
attached by the complex-structure machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactla.scalars import GaussianRational, as_gaussian
from .presentation import LieAlgebraPresentation, _merge_indices

__all__ = ["DegreeOverflow", "Form", "wedge", "power"]

_ZERO = GaussianRational(0)


class DegreeOverflow(ValueError):
    """Wedge product beyond the top exterior power."""


@dataclass(frozen=True)
class Form:
    presentation: LieAlgebraPresentation
    degree: int
    coeffs: tuple[GaussianRational, ...]
    bidegree: tuple[int, int] | None = None

    def __post_init__(self):
        if len(self.coeffs) != self.presentation.basis_size(self.degree):
            raise ValueError("coefficient vector has the wrong length")

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, presentation: LieAlgebraPresentation, degree: int) -> "Form":
        return cls(presentation, degree, (_ZERO,) * presentation.basis_size(degree))

    @classmethod
    def from_coeffs(
        cls, presentation: LieAlgebraPresentation, degree: int, coeffs: Sequence
    ) -> "Form":
        return cls(presentation, degree, tuple(as_gaussian(c) for c in coeffs))

    @classmethod
    def from_terms(
        cls, presentation: LieAlgebraPresentation, degree: int, terms
    ) -> "Form":
        """Build from (coefficient, generator-name tuple) pairs."""
        pos = {n: k for k, n in enumerate(presentation.names)}
        vec = [_ZERO] * presentation.basis_size(degree)
        index = presentation.basis_index(degree)
        for c, names in terms:
            idx = tuple(pos[n] for n in names)
            sign, key = _sort_indices(idx)
            vec[index[key]] = vec[index[key]] + sign * as_gaussian(c)
        return cls(presentation, degree, tuple(vec))

    @classmethod
    def generator(cls, presentation: LieAlgebraPresentation, name: str) -> "Form":
        return cls.from_terms(presentation, 1, [(1, (name,))])

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "Form") -> "Form":
        self._compatible(other)
        return Form(
            self.presentation,
            self.degree,
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.bidegree if self.bidegree == other.bidegree else None,
        )

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __neg__(self) -> "Form":
        return Form(
            self.presentation, self.degree, tuple(-c for c in self.coeffs), self.bidegree
        )

    def __rmul__(self, scalar) -> "Form":
        s = as_gaussian(scalar)
        return Form(
            self.presentation,
            self.degree,
            tuple(s * c for c in self.coeffs),
            self.bidegree,
        )

    def _compatible(self, other: "Form") -> None:
        if self.presentation is not other.presentation and self.presentation != other.presentation:
            raise ValueError("forms live on different presentations")
        if self.degree != other.degree:
            raise ValueError("forms have different degrees")

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def conjugate(self) -> "Form":
        bid = None
        if self.bidegree is not None:
            bid = (self.bidegree[1], self.bidegree[0])
        return Form(
            self.presentation, self.degree, tuple(c.conjugate() for c in self.coeffs), bid
        )

    def real_part(self) -> "Form":
        half = Fraction(1, 2)
        return half * (self + self.conjugate())

    def imag_part(self) -> "Form":
        return Fraction(1, 2) * (GaussianRational(0, -1) * (self - self.conjugate()))

    def real_coeffs(self) -> tuple[Fraction, ...]:
        if not self.is_real:
            raise ValueError("form is not real")
        return tuple(c.re for c in self.coeffs)

    # -- calculus ------------------------------------------------------------

    def d(self) -> "Form":
        return Form(
            self.presentation,
            self.degree + 1,
            tuple(
                as_gaussian(c)
                for c in self.presentation.d_coeffs(self.degree, self.coeffs)
            ),
        )

    def __str__(self):
        names = self.presentation.names
        parts = []
        for idx, c in zip(self.presentation.basis(self.degree), self.coeffs):
            if c:
                mono = "^".join(names[i] for i in idx) if idx else "1"
                parts.append(f"{c} {mono}")
        return " + ".join(parts) if parts else "0"


def _sort_indices(idx: tuple[int, ...]):
    """Sort indices with permutation sign; repeated index means zero term."""
    sign = 1
    lst = list(idx)
    for i in range(1, len(lst)):
        j = i
        while j > 0 and lst[j - 1] > lst[j]:
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(lst)):
        if lst[i - 1] == lst[i]:
            raise ValueError("repeated generator in a wedge monomial")
    return sign, tuple(lst)


def wedge(f: Form, g: Form) -> Form:
    """Graded-commutative wedge product."""
    if f.presentation != g.presentation:
        raise ValueError("forms live on different presentations")
    degree = f.degree + g.degree
    if degree > f.presentation.dim:
        raise DegreeOverflow(f"wedge of degrees {f.degree} and {g.degree}")
    pres = f.presentation
    out = [_ZERO] * pres.basis_size(degree)
    index = pres.basis_index(degree)
    gbasis = pres.basis(g.degree)
    fbasis = pres.basis(f.degree)
    gnz = [(idx, c) for idx, c in zip(gbasis, g.coeffs) if c]
    for fi, fc in zip(fbasis, f.coeffs):
        if not fc:
            continue
        for gi, gc in gnz:
            merged = _merge_indices(fi, gi)
            if merged is None:
                continue
            s, key = merged
            k = index[key]
            out[k] = out[k] + s * fc * gc
    bid = None
    if f.bidegree is not None and g.bidegree is not None:
        bid = (f.bidegree[0] + g.bidegree[0], f.bidegree[1] + g.bidegree[1])
    return Form(pres, degree, tuple(out), bid)


def power(f: Form, k: int) -> Form:
    """k-fold wedge power."""
    if k < 0:
        raise ValueError("negative wedge power")
    if k == 0:
        return Form.from_coeffs(f.presentation, 0, [1])
    result = f
    for _ in range(k - 1):
        result = wedge(result, f)
    return result
