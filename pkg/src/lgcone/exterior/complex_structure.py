"""Complex structures on a presentation: bigrading, the operators
del / delbar / d^c, positivity of (1,1)- and (n-1,n-1)-forms, and the
orientation induced by the complex structure.

Conventions (fixed by three calibration identities, see the test suite):
the (1,0)-forms are the -i eigenspace of the given endomorphism of the
dual algebra, d^c = i(delbar - del) (so that d d^c = 2i del delbar holds
identically), and a (1,1)-form written as i * sum H_ab phi_a ^ conj(phi_b)
is positive exactly when the matrix H is positive semidefinite.  With
these choices the standard Euclidean form is positive definite and the
forms generator^i ^ J(generator^i) on the solvable models come out
positive, as they must.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactla.matrices import apply_rows, inverse, kernel, rref
from ..exactla.psd import Definiteness, is_psd_hermitian
from ..exactla.scalars import GaussianRational, as_gaussian
from .forms import Form, wedge
from .presentation import LieAlgebraPresentation, _merge_indices

__all__ = [
    "NotIntegrable",
    "NotComplexStructure",
    "WrongBidegree",
    "ComplexStructure",
]

_I = GaussianRational(0, 1)
_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


class NotComplexStructure(ValueError):
    """J^2 != -Id."""


class NotIntegrable(ValueError):
    """The almost-complex structure fails the integrability check."""


class WrongBidegree(ValueError):
    """A form does not have the bidegree an operation requires."""


class ComplexStructure:
    """An integrable complex structure bound to a validated presentation.

    ``j_matrix`` acts on the dual algebra: J(e^k) = sum_i J[i][k] e^i.
    All operator data (bigrading bases, del/delbar matrices, orientation)
    is computed once and cached; instances are immutable in practice and
    safe to share between threads.
    """

    def __init__(
        self,
        presentation: LieAlgebraPresentation,
        j_matrix: Sequence[Sequence[Fraction]],
        check_integrability: bool = True,
    ):
        self.presentation = presentation
        self.j_matrix = tuple(tuple(Fraction(v) for v in row) for row in j_matrix)
        dim = presentation.dim
        if len(self.j_matrix) != dim or any(len(r) != dim for r in self.j_matrix):
            raise ValueError("J matrix has the wrong shape")
        self._check_square()
        self.n = presentation.half_dim
        self._alphabet = self._one_zero_basis()
        if check_integrability:
            self._check_integrable()

    @classmethod
    def from_pairs(
        cls, presentation: LieAlgebraPresentation, pairs: Sequence[tuple[str, str]]
    ) -> "ComplexStructure":
        """J sending each (x, y) pair to (y, -x), e.g. [('a','b'), ...]."""
        pos = {n: k for k, n in enumerate(presentation.names)}
        dim = presentation.dim
        j = [[Fraction(0)] * dim for _ in range(dim)]
        for x, y in pairs:
            j[pos[y]][pos[x]] = Fraction(1)
            j[pos[x]][pos[y]] = Fraction(-1)
        return cls(presentation, j)

    # -- structural checks ---------------------------------------------------

    def _check_square(self) -> None:
        dim = self.presentation.dim
        for i in range(dim):
            for k in range(dim):
                v = sum(
                    (self.j_matrix[i][m] * self.j_matrix[m][k] for m in range(dim)),
                    Fraction(0),
                )
                if v != (Fraction(-1) if i == k else Fraction(0)):
                    raise NotComplexStructure("J^2 != -Id")

    def _one_zero_basis(self) -> list[tuple[GaussianRational, ...]]:
        """Canonical basis of (1,0)-covectors: ker(J + i Id), echelonized."""
        dim = self.presentation.dim
        rows = []
        for i in range(dim):
            row = {}
            for k in range(dim):
                v = as_gaussian(self.j_matrix[i][k]) + (_I if i == k else _ZERO)
                if v:
                    row[k] = v
            rows.append(row)
        basis = kernel(rows, dim)
        if len(basis) != self.n:
            raise NotComplexStructure("(1,0) eigenspace has wrong dimension")
        red, _ = rref([{j: as_gaussian(v) for j, v in enumerate(b) if v} for b in basis], dim)
        out = []
        for r in red:
            out.append(tuple(as_gaussian(r.get(j, 0)) for j in range(dim)))
        return out

    def _check_integrable(self) -> None:
        for a in range(self.n):
            dphi = self.one_zero_form(a).d()
            comps = self.bigrade(dphi)
            bad = comps.get((0, 2))
            if bad is not None and not bad.is_zero:
                raise NotIntegrable(
                    f"d of (1,0)-generator {a} has a (0,2) component"
                )

    # -- alphabet: phi_0..phi_{n-1}, conj(phi_0)..conj(phi_{n-1}) -------------

    def one_zero_form(self, a: int) -> Form:
        return Form(self.presentation, 1, self._alphabet[a], bidegree=(1, 0))

    @functools.cached_property
    def _alphabet_in_e(self) -> list[tuple[GaussianRational, ...]]:
        full = list(self._alphabet)
        full.extend(tuple(c.conjugate() for c in v) for v in self._alphabet)
        return full

    @functools.cached_property
    def _e_in_alphabet(self) -> list[list[GaussianRational]]:
        dim = self.presentation.dim
        cmat = [[self._alphabet_in_e[m][i] for m in range(dim)] for i in range(dim)]
        inv = inverse(cmat)
        return [[as_gaussian(inv[m][i]) for i in range(dim)] for m in range(dim)]

    @functools.lru_cache(maxsize=None)
    def pq_monomials(self, k: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        """(holomorphic set, antiholomorphic set) pairs, lexicographic."""
        out = []
        for p in range(k + 1):
            q = k - p
            if p > self.n or q > self.n:
                continue
            for s in itertools.combinations(range(self.n), p):
                for t in itertools.combinations(range(self.n), q):
                    out.append((s, t))
        out.sort()
        return tuple(out)

    @functools.lru_cache(maxsize=None)
    def _pq_index(self, k: int) -> dict:
        return {m: i for i, m in enumerate(self.pq_monomials(k))}

    @staticmethod
    def _monomial_key(n: int, mono: tuple[tuple[int, ...], tuple[int, ...]]):
        s, t = mono
        return s + tuple(n + x for x in t)

    @functools.lru_cache(maxsize=None)
    def _to_alphabet_matrix(self, k: int) -> tuple[dict, ...]:
        """Sparse rows converting e-basis coefficients to alphabet coefficients."""
        pres = self.presentation
        index = self._pq_index(k)
        rows: list[dict] = [dict() for _ in range(len(index))]
        key_of = {self._monomial_key(self.n, m): i for m, i in index.items()}
        for col, mono in enumerate(pres.basis(k)):
            expansion = {(): _ONE}
            for gen in mono:
                nxt: dict = {}
                coeffs = [self._e_in_alphabet[m][gen] for m in range(pres.dim)]
                for key, c in expansion.items():
                    for m, cm in enumerate(coeffs):
                        if not cm:
                            continue
                        merged = _merge_indices(key, (m,))
                        if merged is None:
                            continue
                        sgn, nk = merged
                        val = nxt.get(nk, _ZERO) + sgn * c * cm
                        if val:
                            nxt[nk] = val
                        elif nk in nxt:
                            del nxt[nk]
                expansion = nxt
            for key, c in expansion.items():
                rows[key_of[key]][col] = c
        return tuple(rows)

    @functools.lru_cache(maxsize=None)
    def _from_alphabet_matrix(self, k: int) -> tuple[dict, ...]:
        """Sparse rows converting alphabet coefficients back to e-basis."""
        pres = self.presentation
        e_index = pres.basis_index(k)
        rows: list[dict] = [dict() for _ in range(len(e_index))]
        for col, mono in enumerate(self.pq_monomials(k)):
            key = self._monomial_key(self.n, mono)
            expansion = {(): _ONE}
            for m in key:
                nxt: dict = {}
                covector = self._alphabet_in_e[m]
                for ekey, c in expansion.items():
                    for i, ci in enumerate(covector):
                        if not ci:
                            continue
                        merged = _merge_indices(ekey, (i,))
                        if merged is None:
                            continue
                        sgn, nk = merged
                        val = nxt.get(nk, _ZERO) + sgn * c * ci
                        if val:
                            nxt[nk] = val
                        elif nk in nxt:
                            del nxt[nk]
                expansion = nxt
            for ekey, c in expansion.items():
                rows[e_index[ekey]][col] = c
        return tuple(rows)

    # -- bigrading -------------------------------------------------------------

    def alphabet_coords(self, f: Form) -> tuple:
        return apply_rows(self._to_alphabet_matrix(f.degree), f.coeffs)

    def pq_dim(self, p: int, q: int) -> int:
        if p > self.n or q > self.n or p < 0 or q < 0:
            return 0
        from math import comb

        return comb(self.n, p) * comb(self.n, q)

    def pq_coords(self, f: Form, p: int, q: int) -> tuple:
        """Coefficients of the (p,q) component over the (p,q) monomial basis."""
        coords = self.alphabet_coords(f)
        out = []
        for mono, c in zip(self.pq_monomials(f.degree), coords):
            if len(mono[0]) == p and len(mono[1]) == q:
                out.append(as_gaussian(c))
        return tuple(out)

    def form_from_pq_coords(self, p: int, q: int, vec: Sequence) -> Form:
        k = p + q
        full = []
        it = iter(vec)
        for mono in self.pq_monomials(k):
            if len(mono[0]) == p and len(mono[1]) == q:
                full.append(as_gaussian(next(it)))
            else:
                full.append(_ZERO)
        coeffs = apply_rows(self._from_alphabet_matrix(k), full)
        return Form(self.presentation, k, tuple(as_gaussian(c) for c in coeffs), (p, q))

    def bigrade(self, f: Form) -> dict:
        """Split a form into its (p,q) components (only nonzero ones kept)."""
        coords = self.alphabet_coords(f)
        buckets: dict = {}
        for mono, c in zip(self.pq_monomials(f.degree), coords):
            if c:
                buckets.setdefault((len(mono[0]), len(mono[1])), []).append((mono, c))
        out = {}
        for (p, q), entries in buckets.items():
            index = self._pq_index(f.degree)
            full = [_ZERO] * len(index)
            for mono, c in entries:
                full[index[mono]] = as_gaussian(c)
            coeffs = apply_rows(self._from_alphabet_matrix(f.degree), full)
            out[(p, q)] = Form(
                self.presentation, f.degree, tuple(as_gaussian(c) for c in coeffs), (p, q)
            )
        return out

    def project(self, f: Form, p: int, q: int) -> Form:
        if p + q != f.degree or self.pq_dim(p, q) == 0:
            return Form.zero(self.presentation, f.degree)
        comp = self.bigrade(f).get((p, q))
        if comp is None:
            z = Form.zero(self.presentation, f.degree)
            return Form(self.presentation, f.degree, z.coeffs, (p, q))
        return comp

    def has_bidegree(self, f: Form, p: int, q: int) -> bool:
        comps = self.bigrade(f)
        return all((pq == (p, q)) for pq in comps)

    # -- the operators ----------------------------------------------------------

    def del_(self, f: Form) -> Form:
        out = Form.zero(self.presentation, f.degree + 1)
        for (p, q), comp in self.bigrade(f).items():
            out = out + self.project(comp.d(), p + 1, q)
        return out

    def delbar(self, f: Form) -> Form:
        out = Form.zero(self.presentation, f.degree + 1)
        for (p, q), comp in self.bigrade(f).items():
            out = out + self.project(comp.d(), p, q + 1)
        return out

    def dc(self, f: Form) -> Form:
        return _I * (self.delbar(f) - self.del_(f))

    @functools.lru_cache(maxsize=None)
    def del_matrix(self, p: int, q: int) -> tuple[dict, ...]:
        """Sparse matrix of del: (p,q) -> (p+1,q) in monomial coordinates."""
        return self._op_matrix(p, q, p + 1, q)

    @functools.lru_cache(maxsize=None)
    def delbar_matrix(self, p: int, q: int) -> tuple[dict, ...]:
        return self._op_matrix(p, q, p, q + 1)

    def _op_matrix(self, p, q, tp, tq) -> tuple[dict, ...]:
        src = self.pq_dim(p, q)
        tgt = self.pq_dim(tp, tq)
        rows: list[dict] = [dict() for _ in range(tgt)]
        for col in range(src):
            vec = [_ZERO] * src
            vec[col] = _ONE
            f = self.form_from_pq_coords(p, q, vec)
            out = self.pq_coords(f.d(), tp, tq)
            for i, c in enumerate(out):
                if c:
                    rows[i][col] = c
        return tuple(rows)

    # -- orientation, volume, integration ----------------------------------------

    @functools.cached_property
    def orientation_form(self) -> Form:
        """The positive invariant top form prod_a (i phi_a ^ conj(phi_a))."""
        out = Form.from_coeffs(self.presentation, 0, [1])
        for a in range(self.n):
            factor = self.form_from_pq_coords(
                1, 1, [_I if (i == a * self.n + a) else _ZERO for i in range(self.n**2)]
            )
            out = wedge(out, factor)
        return out

    @functools.cached_property
    def orientation_sign(self) -> int:
        c = self.orientation_form.coeffs[0]
        if c.im or not c.re:
            raise NotComplexStructure("orientation form is not real nonzero")
        return 1 if c.re > 0 else -1

    def integral(self, f: Form) -> GaussianRational:
        """Integration against the normalized invariant volume.

        The volume form is the canonical generator top-wedge, sign-fixed by
        the complex orientation and normalized to total volume 1.
        """
        if f.degree != self.presentation.dim:
            raise ValueError("only top-degree forms can be integrated")
        return as_gaussian(self.orientation_sign) * f.coeffs[0]

    # -- Hermitian data of (1,1)- and (n-1,n-1)-forms ------------------------------

    def hermitian_matrix(self, f: Form) -> list[list[GaussianRational]]:
        """H with f = i * sum H_ab phi_a ^ conj(phi_b); f must be (1,1)."""
        if f.degree != 2 or not self.has_bidegree(f, 1, 1):
            raise WrongBidegree("form is not of pure bidegree (1,1)")
        coords = self.pq_coords(f, 1, 1)
        n = self.n
        h = [[_ZERO] * n for _ in range(n)]
        idx = 0
        for a in range(n):
            for b in range(n):
                h[a][b] = coords[idx] / _I
                idx += 1
        return h

    def form_from_hermitian(self, h: Sequence[Sequence]) -> Form:
        n = self.n
        vec = []
        for a in range(n):
            for b in range(n):
                vec.append(_I * as_gaussian(h[a][b]))
        return self.form_from_pq_coords(1, 1, vec)

    def n1n1_matrix(self, f: Form) -> list[list[GaussianRational]]:
        """G with f ^ (i xi ^ conj(xi)) = (xi* G xi) * orientation_form."""
        n = self.n
        if f.degree != 2 * n - 2 or not self.has_bidegree(f, n - 1, n - 1):
            raise WrongBidegree("form is not of pure bidegree (n-1,n-1)")
        mu = self.orientation_form.coeffs[0]
        g = [[_ZERO] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                vec = [_ZERO] * self.n**2
                vec[a * n + b] = _I
                probe = self.form_from_pq_coords(1, 1, vec)
                g[a][b] = wedge(f, probe).coeffs[0] / mu
        return g

    def is_positive_11(self, f: Form) -> Definiteness:
        if not f.is_real:
            raise WrongBidegree("positivity is defined for real forms")
        return is_psd_hermitian(self.hermitian_matrix(f))

    def is_positive_n1n1(self, f: Form) -> Definiteness:
        if not f.is_real:
            raise WrongBidegree("positivity is defined for real forms")
        return is_psd_hermitian(self.n1n1_matrix(f))
