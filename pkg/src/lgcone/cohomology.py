"""Invariant cohomology: de Rham, Dolbeault, Bott-Chern and Aeppli groups
of the exterior complex, duality pairings, and the degree-(2n-1) subspace
on which the Lee-Gauduchon cone lives.

All groups are computed in the real generator basis of the exterior
algebra with exact Gaussian-rational arithmetic.  For conjugation-stable
theories (de Rham, and the (p,p) Bott-Chern / Aeppli groups) the canonical
echelon representatives automatically come out with rational coefficients,
so the real form of the group is read off directly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .exactla.matrices import (
    QuotientSpace,
    Subspace,
    kernel,
    quotient,
)
from .exactla.scalars import GaussianRational, as_gaussian
from .exterior.complex_structure import ComplexStructure
from .exterior.forms import Form, wedge

__all__ = [
    "NotInCohomologyGroup",
    "NotDiagonalBidegree",
    "DualityFailure",
    "CohomologyClass",
    "CohomologyGroup",
    "LeeGauduchonSpace",
    "ExactSequenceReport",
    "CohomologyEngine",
]

_ZERO = GaussianRational(0)
_I = GaussianRational(0, 1)


class NotInCohomologyGroup(ValueError):
    """The form does not define a class in the requested group (wrong type,
    not closed, or outside the kernel the theory requires)."""


class NotDiagonalBidegree(ValueError):
    """Real subgroups are only defined for (p, p) bidegrees."""


class DualityFailure(ArithmeticError):
    """A pairing that should be perfect is degenerate."""


@dataclass(frozen=True)
class CohomologyClass:
    group: "CohomologyGroup"
    coords: tuple[GaussianRational, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self.coords)

    def representative(self) -> Form:
        vec = self.group.quotient.lift(self.coords)
        return Form(
            self.group.engine.structure.presentation,
            self.group.degree,
            tuple(as_gaussian(v) for v in vec),
        )

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.group is not self.group:
            raise ValueError("classes live in different groups")
        return CohomologyClass(
            self.group, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "CohomologyClass":
        s = as_gaussian(scalar)
        return CohomologyClass(self.group, tuple(s * c for c in self.coords))

    def __neg__(self) -> "CohomologyClass":
        return (-1) * self


@dataclass(frozen=True)
class CohomologyGroup:
    """A cohomology group with canonical representatives in the exterior
    algebra of the dual Lie algebra.

    ``quotient`` lives in the coordinate space of degree-k forms; the
    ambient subspace is the relevant kernel and ``quotient.sub`` the
    relevant boundary space.
    """

    engine: "CohomologyEngine"
    theory: str
    degree: int
    bidegree: tuple[int, int] | None
    quotient: QuotientSpace
    real: bool = False

    @property
    def dim(self) -> int:
        return self.quotient.dim

    def class_of(self, f: Form) -> CohomologyClass:
        if f.degree != self.degree:
            raise NotInCohomologyGroup(
                f"form has degree {f.degree}, group needs {self.degree}"
            )
        try:
            coords = self.quotient.project(f.coeffs)
        except Exception as exc:
            raise NotInCohomologyGroup(
                f"form does not define a {self.theory} class"
            ) from exc
        return CohomologyClass(self, tuple(as_gaussian(c) for c in coords))

    def basis(self) -> list[CohomologyClass]:
        out = []
        for i in range(self.dim):
            coords = [_ZERO] * self.dim
            coords[i] = GaussianRational(1)
            out.append(CohomologyClass(self, tuple(coords)))
        return out

    @property
    def representatives_are_real(self) -> bool:
        return all(
            all(as_gaussian(v).is_real for v in rep)
            for rep in self.quotient.representatives
        )

    def real_basis_forms(self) -> list[Form]:
        """Real canonical representatives (conjugation-stable theories)."""
        if not self.representatives_are_real:
            raise NotInCohomologyGroup("group representatives are not real")
        return [c.representative() for c in self.basis()]

    def __str__(self):
        tag = (
            f"{self.bidegree[0]},{self.bidegree[1]}"
            if self.bidegree is not None
            else str(self.degree)
        )
        return f"H^{{{tag}}}_{self.theory} of dimension {self.dim}"


@dataclass(frozen=True)
class ExactSequenceReport:
    """Exactness of 0 -> Re(closed holomorphic 1-forms) -> H^1 -> H^{1,1}_BC
    where the second map sends a class to the class of its d^c image."""

    ok: bool
    holomorphic_dim: int
    injected_dim: int
    dc_kernel_dim: int


@dataclass(frozen=True)
class LeeGauduchonSpace:
    """The subspace of H^{2n-1}(real) spanned by Lee-Gauduchon classes.

    Computed two independent ways: as the annihilator of the real parts of
    closed holomorphic 1-forms under the top-degree pairing, and as the
    image of the real (n-1,n-1) Aeppli group under d^c.  ``agree`` records
    whether the two computations produced the same subspace.
    """

    group: CohomologyGroup
    subspace: Subspace
    annihilator_construction: Subspace
    image_construction: Subspace
    agree: bool

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def basis_classes(self) -> list[CohomologyClass]:
        return [
            CohomologyClass(self.group, tuple(as_gaussian(v) for v in b))
            for b in self.subspace.basis
        ]


class CohomologyEngine:
    """All four invariant cohomology theories of one complex structure.

    The underlying presentation must be a valid unimodular Lie algebra;
    unimodularity is what makes integration of exact top forms vanish and
    hence every pairing below well defined.
    """

    def __init__(self, structure: ComplexStructure):
        structure.presentation.require_valid()
        self.structure = structure
        self.presentation = structure.presentation
        self.n = structure.n

    # -- operator matrices in generator coordinates -------------------------

    @functools.lru_cache(maxsize=None)
    def _d_rows(self, k: int) -> tuple[dict, ...]:
        return self.presentation.d_matrix(k)

    def _columns(self, k: int, op) -> list[tuple]:
        """Apply a Form -> Form operator to the basis of degree-k forms."""
        size = self.presentation.basis_size(k)
        cols = []
        for i in range(size):
            coeffs = [_ZERO] * size
            coeffs[i] = GaussianRational(1)
            cols.append(op(Form(self.presentation, k, tuple(coeffs))).coeffs)
        return cols

    @functools.lru_cache(maxsize=None)
    def _del_rows(self, k: int) -> tuple[dict, ...]:
        cols = self._columns(k, self.structure.del_)
        return self._rows_from_columns(cols)

    @functools.lru_cache(maxsize=None)
    def _delbar_rows(self, k: int) -> tuple[dict, ...]:
        cols = self._columns(k, self.structure.delbar)
        return self._rows_from_columns(cols)

    @functools.lru_cache(maxsize=None)
    def _deldelbar_rows(self, k: int) -> tuple[dict, ...]:
        cols = self._columns(k, lambda f: self.structure.del_(self.structure.delbar(f)))
        return self._rows_from_columns(cols)

    @staticmethod
    def _rows_from_columns(cols: list[tuple]) -> tuple[dict, ...]:
        nrows = len(cols[0]) if cols else 0
        rows: list[dict] = [dict() for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, v in enumerate(col):
                if v:
                    rows[i][j] = v
        return tuple(rows)

    @functools.lru_cache(maxsize=None)
    def _purity_rows(self, p: int, q: int) -> tuple[dict, ...]:
        """Rows vanishing exactly on forms of pure bidegree (p, q)."""
        k = p + q
        cols = self._columns(
            k, lambda f: f - self.structure.project(f, p, q)
        )
        return self._rows_from_columns(cols)

    @functools.lru_cache(maxsize=None)
    def pure_subspace(self, p: int, q: int) -> Subspace:
        """Degree-(p+q) forms of pure bidegree (p, q), in generator coords."""
        k = p + q
        size = self.presentation.basis_size(k)
        if p < 0 or q < 0 or p > self.n or q > self.n:
            return Subspace.zero(size)
        return Subspace.from_vectors(size, kernel(list(self._purity_rows(p, q)), size))

    # -- the four theories ----------------------------------------------------

    @functools.lru_cache(maxsize=None)
    def de_rham(self, k: int) -> CohomologyGroup:
        size = self.presentation.basis_size(k)
        closed = Subspace.from_vectors(size, kernel(list(self._d_rows(k)), size))
        if k == 0:
            exact = Subspace.zero(size)
        else:
            prev = self.presentation.basis_size(k - 1)
            exact = Subspace.full(prev).map(self._d_rows(k - 1))
        return CohomologyGroup(self, "de_rham", k, None, quotient(closed, exact))

    @functools.lru_cache(maxsize=None)
    def dolbeault(self, p: int, q: int) -> CohomologyGroup:
        k = p + q
        size = self.presentation.basis_size(k)
        rows = list(self._purity_rows(p, q)) + list(self._delbar_rows(k))
        closed = Subspace.from_vectors(size, kernel(rows, size))
        exact = self.pure_subspace(p, q - 1).map(self._delbar_rows(k - 1)) if q else (
            Subspace.zero(size)
        )
        return CohomologyGroup(self, "dolbeault", k, (p, q), quotient(closed, exact))

    @functools.lru_cache(maxsize=None)
    def bott_chern(self, p: int, q: int) -> CohomologyGroup:
        k = p + q
        size = self.presentation.basis_size(k)
        rows = (
            list(self._purity_rows(p, q))
            + list(self._del_rows(k))
            + list(self._delbar_rows(k))
        )
        closed = Subspace.from_vectors(size, kernel(rows, size))
        if p and q:
            exact = self.pure_subspace(p - 1, q - 1).map(self._deldelbar_rows(k - 2))
        else:
            exact = Subspace.zero(size)
        return CohomologyGroup(self, "bott_chern", k, (p, q), quotient(closed, exact))

    @functools.lru_cache(maxsize=None)
    def aeppli(self, p: int, q: int) -> CohomologyGroup:
        k = p + q
        size = self.presentation.basis_size(k)
        rows = list(self._purity_rows(p, q)) + list(self._deldelbar_rows(k))
        closed = Subspace.from_vectors(size, kernel(rows, size))
        exact = Subspace.zero(size)
        if p:
            exact = exact.sum(self.pure_subspace(p - 1, q).map(self._del_rows(k - 1)))
        if q:
            exact = exact.sum(
                self.pure_subspace(p, q - 1).map(self._delbar_rows(k - 1))
            )
        return CohomologyGroup(self, "aeppli", k, (p, q), quotient(closed, exact))

    def real_subspace(self, group: CohomologyGroup) -> CohomologyGroup:
        """The conjugation-fixed real form of a (p, p) group.

        Conjugation stabilizes numerator and denominator of a (p, p) theory,
        so the canonical echelon representatives are automatically rational
        and span the real form: the returned group has the same quotient
        data, flagged real, with dimension now read over the rationals.
        """
        if group.bidegree is None or group.bidegree[0] != group.bidegree[1]:
            raise NotDiagonalBidegree(
                "real form requires bidegree (p, p), got "
                f"{group.bidegree if group.bidegree else group.degree}"
            )
        if not group.representatives_are_real:
            raise NotDiagonalBidegree(
                "canonical representatives are unexpectedly non-real"
            )
        return CohomologyGroup(
            self, group.theory, group.degree, group.bidegree, group.quotient, True
        )

    def group(self, theory: str, *, degree=None, bidegree=None) -> CohomologyGroup:
        if theory in ("dr", "de_rham"):
            if degree is None:
                raise ValueError("de Rham groups are indexed by a degree")
            return self.de_rham(degree)
        if bidegree is None:
            raise ValueError(f"{theory} groups are indexed by a bidegree")
        p, q = bidegree
        if theory in ("dolbeault", "dol"):
            return self.dolbeault(p, q)
        if theory in ("bc", "bott_chern"):
            return self.bott_chern(p, q)
        if theory in ("ae", "aeppli"):
            return self.aeppli(p, q)
        raise ValueError(f"unknown cohomology theory {theory!r}")

    # -- pairings and duality --------------------------------------------------

    def pairing(self, a: CohomologyClass, b: CohomologyClass) -> GaussianRational:
        """Integral of the wedge of representatives (degrees must sum to 2n)."""
        fa, fb = a.representative(), b.representative()
        if fa.degree + fb.degree != self.presentation.dim:
            raise ValueError("degrees do not sum to the top degree")
        return self.structure.integral(wedge(fa, fb))

    def duality_matrix(
        self, left: CohomologyGroup, right: CohomologyGroup
    ) -> list[list[GaussianRational]]:
        lb, rb = left.basis(), right.basis()
        return [[self.pairing(a, b) for b in rb] for a in lb]

    def check_duality(
        self, left: CohomologyGroup, right: CohomologyGroup
    ) -> None:
        """Verify that the top-degree pairing of two groups is perfect."""
        from .exactla.matrices import rank, sparse_from_dense

        if left.dim != right.dim:
            raise DualityFailure(
                f"{left} and {right} have different dimensions"
            )
        mat = self.duality_matrix(left, right)
        if rank(sparse_from_dense(mat), right.dim) != left.dim:
            raise DualityFailure(f"pairing of {left} with {right} is degenerate")

    # -- holomorphic 1-forms and the exact sequence ------------------------------

    @functools.lru_cache(maxsize=None)
    def holomorphic_closed_1forms(self) -> tuple[Form, ...]:
        """Basis of d-closed (1,0)-forms."""
        n = self.n
        size = self.presentation.basis_size(2)
        rows: list[dict] = [dict() for _ in range(size)]
        for a in range(n):
            dphi = self.structure.one_zero_form(a).d()
            for i, v in enumerate(dphi.coeffs):
                if v:
                    rows[i][a] = v
        out = []
        for sol in kernel(rows, n):
            f = Form.zero(self.presentation, 1)
            for a, c in enumerate(sol):
                if c:
                    f = f + as_gaussian(c) * self.structure.one_zero_form(a)
            out.append(Form(self.presentation, 1, f.coeffs, (1, 0)))
        return tuple(out)

    @functools.lru_cache(maxsize=None)
    def real_holomorphic_classes(self) -> Subspace:
        """Classes in H^1 of real parts of closed holomorphic 1-forms.

        Spanned over the rationals by the real and imaginary parts of the
        holomorphic basis (multiplying by i permutes the two)."""
        h1 = self.de_rham(1)
        vecs = []
        for phi in self.holomorphic_closed_1forms():
            for part in (phi.real_part(), phi.imag_part()):
                vecs.append(h1.class_of(part).coords)
        return Subspace.from_vectors(h1.dim, vecs)

    def exact_sequence_report(self) -> ExactSequenceReport:
        h1 = self.de_rham(1)
        bc = self.bott_chern(1, 1)
        injected = self.real_holomorphic_classes()
        # kernel of the induced map H^1 -> H^{1,1}_BC, [rho] -> [d^c rho]
        rows: list[dict] = [dict() for _ in range(bc.dim)]
        for j, cls in enumerate(h1.basis()):
            image = bc.class_of(self.structure.dc(cls.representative()))
            for i, v in enumerate(image.coords):
                if v:
                    rows[i][j] = v
        dc_kernel = Subspace.from_vectors(h1.dim, kernel(rows, h1.dim))
        ok = (
            injected.dim == 2 * len(self.holomorphic_closed_1forms())
            and dc_kernel.dim == injected.dim
            and dc_kernel.contains_subspace(injected)
        )
        return ExactSequenceReport(
            ok=ok,
            holomorphic_dim=len(self.holomorphic_closed_1forms()),
            injected_dim=injected.dim,
            dc_kernel_dim=dc_kernel.dim,
        )

    # -- the home of the Lee-Gauduchon cone ---------------------------------------

    @functools.lru_cache(maxsize=None)
    def lee_gauduchon_space(self) -> LeeGauduchonSpace:
        dim = self.presentation.dim
        top_minus = self.de_rham(dim - 1)
        h1 = self.de_rham(1)

        # construction 1: annihilator of the real holomorphic classes under
        # the pairing H^1 x H^{2n-1} -> R
        hol = self.real_holomorphic_classes()
        rows: list[dict] = []
        tm_basis = top_minus.basis()
        for vec in hol.basis:
            cls = CohomologyClass(h1, tuple(as_gaussian(v) for v in vec))
            row = {}
            for j, w in enumerate(tm_basis):
                v = self.pairing(cls, w)
                if v:
                    row[j] = v
            rows.append(row)
        ann = Subspace.from_vectors(top_minus.dim, kernel(rows, top_minus.dim))

        # construction 2: image of the real (n-1,n-1) Aeppli group under d^c
        ae = self.aeppli(self.n - 1, self.n - 1)
        vecs = []
        for rep in ae.real_basis_forms():
            image = self.structure.dc(rep)
            vecs.append(top_minus.class_of(image).coords)
            # the conjugate class d^c of i*(rep - conj rep) adds nothing for
            # real representatives, so the real span is exactly this image
        img = Subspace.from_vectors(top_minus.dim, vecs)

        agree = ann.contains_subspace(img) and img.contains_subspace(ann)
        return LeeGauduchonSpace(
            group=top_minus,
            subspace=ann,
            annihilator_construction=ann,
            image_construction=img,
            agree=agree,
        )
