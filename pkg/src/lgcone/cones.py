"""Metric classification and the cone geometry of degree-(2n-1) classes.

Provides: Gauduchon / balanced / strongly-Gauduchon tests, Lee forms and
Lee-Gauduchon classes of Hermitian metrics, the pseudo-effective cone of
classes in H^1 whose d^c image is a positive (1,1)-form, the Lee-Gauduchon
cone as its dual inside the space W, and a certified membership test for
the Gauduchon cone of real (n-1,n-1) Aeppli classes.

Sign convention for the duality: the pairing of a degree-(2n-1) class x
with a degree-1 class rho is the integral of rho ^ x.  With this order the
class of d^c(omega^(n-1)) pairs positively with every class whose d^c image
is positive semidefinite and nonzero (integration by parts plus exact mass
positivity), which is what makes the cone duality come out right.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohomology import CohomologyClass, CohomologyEngine
from .exactla.matrices import Subspace, kernel, solve, sparse_from_dense
from .exactla.polyhedral import ConeMembership, PolyhedralCone
from .exactla.psd import Definiteness, charpoly, is_psd_hermitian, is_zero_matrix
from .exactla.scalars import GaussianRational, as_gaussian
from .exterior.complex_structure import ComplexStructure
from .exterior.forms import Form, power, wedge
from .exterior.metrics import HermitianMetric

__all__ = [
    "NotGauduchon",
    "NotLCK",
    "ConeNotPolyhedral",
    "LCKResult",
    "gauduchon_defect",
    "is_gauduchon",
    "is_balanced",
    "is_strongly_gauduchon",
    "lee_form",
    "lck_lee_form",
    "lee_gauduchon_class",
    "ConeDescription",
    "pseff_cone_in_dcH1",
    "LGCone",
    "lg_cone",
    "GauduchonMembership",
    "gauduchon_cone_membership",
    "random_metric",
    "random_aeppli_class",
]

_ZERO = GaussianRational(0)
_I = GaussianRational(0, 1)


class NotGauduchon(ValueError):
    """The metric does not satisfy dd^c(omega^(n-1)) = 0."""


class NotLCK(ValueError):
    """No closed 1-form theta solves d(omega) = theta ^ omega."""


class ConeNotPolyhedral(RuntimeError):
    """The pseudo-effective cone admits no exact polyhedral description."""


# -- metric classification -----------------------------------------------------


def gauduchon_defect(metric: HermitianMetric) -> Form:
    """The top form dd^c(omega^(n-1)); zero exactly for Gauduchon metrics."""
    n = metric.structure.n
    return metric.structure.dc(power(metric.omega, n - 1)).d()


def is_gauduchon(metric: HermitianMetric) -> bool:
    return gauduchon_defect(metric).is_zero


def is_balanced(metric: HermitianMetric) -> bool:
    n = metric.structure.n
    return power(metric.omega, n - 1).d().is_zero


def is_strongly_gauduchon(metric: HermitianMetric) -> bool:
    """Whether del(omega^(n-1)) is delbar-exact (an exact linear solve)."""
    s = metric.structure
    n = s.n
    target = s.pq_coords(s.del_(power(metric.omega, n - 1)), n, n - 1)
    rows = s.delbar_matrix(n, n - 2)
    return solve(list(rows), s.pq_dim(n, n - 2), target) is not None


def lee_form(metric: HermitianMetric) -> Form:
    """The 1-form (1/(n-1)) * star(d^c omega^(n-1))."""
    n = metric.structure.n
    raw = metric.star(metric.structure.dc(power(metric.omega, n - 1)))
    return Fraction(1, n - 1) * raw


@dataclass(frozen=True)
class LCKResult:
    """A closed Lee form theta with d(omega) = theta ^ omega.

    ``kaehler`` flags the degenerate closed case, where theta = 0 solves the
    equation trivially."""

    theta: Form
    kaehler: bool


def lck_lee_form(metric: HermitianMetric) -> LCKResult:
    """Solve d(omega) = theta ^ omega for a closed 1-form theta."""
    pres = metric.structure.presentation
    omega = metric.omega
    dim3 = pres.basis_size(3)
    dim2 = pres.basis_size(2)
    rows: list[dict] = [dict() for _ in range(dim3 + dim2)]
    for i in range(pres.dim):
        col_form = wedge(
            Form.from_terms(pres, 1, [(1, (pres.names[i],))]), omega
        )
        for r, v in enumerate(col_form.coeffs):
            if v:
                rows[r][i] = v
        for r, v in enumerate(
            Form.from_terms(pres, 1, [(1, (pres.names[i],))]).d().coeffs
        ):
            if v:
                rows[dim3 + r][i] = v
    rhs = list(omega.d().coeffs) + [_ZERO] * dim2
    sol = solve(rows, pres.dim, rhs)
    if sol is None:
        raise NotLCK("no closed 1-form theta satisfies d(omega) = theta ^ omega")
    theta = Form(pres, 1, tuple(as_gaussian(v) for v in sol))
    return LCKResult(theta=theta, kaehler=theta.is_zero and omega.d().is_zero)


def lee_gauduchon_class(
    engine: CohomologyEngine, metric: HermitianMetric
) -> CohomologyClass:
    """The class of d^c(omega^(n-1)) in H^(2n-1); requires Gauduchon."""
    if not is_gauduchon(metric):
        raise NotGauduchon("dd^c(omega^(n-1)) != 0")
    n = engine.n
    form = engine.structure.dc(power(metric.omega, n - 1))
    return engine.de_rham(engine.presentation.dim - 1).class_of(form)


# -- the pseudo-effective cone in H^1 ---------------------------------------------


@dataclass(frozen=True)
class ConeDescription:
    """The cone of H^1(real) classes whose d^c image is a nonzero positive
    semidefinite (1,1)-form.

    ``hermitian_maps[i]`` is the Hermitian matrix of d^c applied to the i-th
    canonical H^1 representative, so a class with coordinates c maps to
    sum_i c_i * hermitian_maps[i].  ``kind`` is "trivial" when that map is
    identically zero, "polyhedral" when the matrices are simultaneously
    diagonalizable over the rationals (then ``closure`` is the exact closed
    cone and ``eigenvalue_rows`` its defining inequalities), and
    "spectrahedral" otherwise.
    """

    ambient_dim: int
    hermitian_maps: tuple
    kind: str
    closure: PolyhedralCone | None
    eigenvalue_rows: tuple[tuple[Fraction, ...], ...]

    def matrix_at(self, coords: Sequence) -> list[list[GaussianRational]]:
        size = len(self.hermitian_maps[0]) if self.hermitian_maps else 0
        out = [[_ZERO] * size for _ in range(size)]
        for c, h in zip(coords, self.hermitian_maps):
            cc = as_gaussian(c)
            if cc:
                for a in range(size):
                    for b in range(size):
                        out[a][b] = out[a][b] + cc * h[a][b]
        return out

    def is_member(self, coords: Sequence) -> bool:
        """Exact membership: d^c image positive semidefinite and nonzero."""
        if self.kind == "trivial":
            return False
        mat = self.matrix_at(coords)
        if is_zero_matrix(mat):
            return False
        return is_psd_hermitian(mat) is not Definiteness.INDEFINITE

    def membership(self, coords: Sequence) -> ConeMembership | None:
        """Relative-interior membership for the closure; None when the cone
        is spectrahedral and no exact polyhedral data exists."""
        if self.kind == "trivial":
            return ConeMembership.OUTSIDE
        if self.closure is None:
            return None
        return self.closure.membership(tuple(Fraction(c) for c in coords))

    @property
    def rays(self) -> tuple:
        if self.closure is None:
            return ()
        return self.closure.rays


def _rationalize_eigenvalue(mat, candidate: float) -> Fraction | None:
    """Exact rational eigenvalue close to a float candidate, or None."""
    from .exactla.matrices import det as exact_det

    lam = Fraction(candidate).limit_denominator(10**6)
    size = len(mat)
    shifted = [
        [mat[i][j] - (lam if i == j else 0) for j in range(size)]
        for i in range(size)
    ]
    return lam if not exact_det(shifted) else None


def _simultaneous_eigenvalue_rows(mats) -> list[tuple[Fraction, ...]] | None:
    """Joint eigenvalues of commuting Hermitian matrices over the rationals.

    Returns one row per joint eigenspace: row[i] is the eigenvalue of
    ``mats[i]`` there.  A positive-semidefiniteness test of any rational
    combination sum c_i mats[i] reduces to sign conditions on these rows.
    Returns None when the matrices do not commute or an eigenvalue is
    irrational.
    """
    import numpy as np

    size = len(mats[0])
    for a in mats:
        for b in mats:
            for i in range(size):
                for j in range(size):
                    ab = sum((a[i][k] * b[k][j] for k in range(size)), _ZERO)
                    ba = sum((b[i][k] * a[k][j] for k in range(size)), _ZERO)
                    if ab != ba:
                        return None

    # refine a common eigenspace decomposition matrix by matrix
    spaces = [Subspace.full(size)]
    eigs: list[list[Fraction]] = [[]]
    for m in mats:
        new_spaces, new_eigs = [], []
        fm = np.array([[complex(v) for v in row] for row in m])
        for sp, row in zip(spaces, eigs):
            # restriction of m to sp in the basis of sp
            cols = [
                sp.coordinates(
                    tuple(
                        sum((as_gaussian(m[i][j]) * as_gaussian(b[j])
                             for j in range(size)), _ZERO)
                        for i in range(size)
                    )
                )
                for b in sp.basis
            ]
            if any(c is None for c in cols):
                return None  # commuting check should prevent this
            k = sp.dim
            restricted = [[as_gaussian(cols[c][r]) for c in range(k)] for r in range(k)]
            # float eigenvalues of the restriction, then exact confirmation
            fr = np.array([[complex(v) for v in r] for r in restricted])
            approx = sorted(set(round(x.real, 6) for x in np.linalg.eigvals(fr)))
            found_dim = 0
            for cand in approx:
                lam = _rationalize_eigenvalue(restricted, cand)
                if lam is None:
                    return None
                shifted_rows = sparse_from_dense(
                    [
                        [restricted[i][j] - (lam if i == j else 0) for j in range(k)]
                        for i in range(k)
                    ]
                )
                vecs = kernel(shifted_rows, k)
                if not vecs:
                    continue
                lifted = []
                for v in vecs:
                    lifted.append(
                        tuple(
                            sum(
                                (as_gaussian(v[c]) * as_gaussian(sp.basis[c][i])
                                 for c in range(k)),
                                _ZERO,
                            )
                            for i in range(size)
                        )
                    )
                new_spaces.append(Subspace.from_vectors(size, lifted))
                new_eigs.append(row + [lam])
                found_dim += len(vecs)
            if found_dim != k:
                return None
        spaces, eigs = new_spaces, new_eigs
    return [tuple(r) for r in eigs]


def pseff_cone_in_dcH1(engine: CohomologyEngine) -> ConeDescription:
    """The cone of classes in H^1(real) with positive nonzero d^c image."""
    h1 = engine.de_rham(1)
    structure = engine.structure
    maps = []
    for cls in h1.basis():
        image = structure.dc(cls.representative())
        maps.append(tuple(tuple(r) for r in structure.hermitian_matrix(image)))
    ambient = h1.dim
    if ambient == 0 or all(is_zero_matrix(m) for m in maps):
        return ConeDescription(ambient, tuple(maps), "trivial", None, ())
    rows = _simultaneous_eigenvalue_rows(maps)
    if rows is None:
        return ConeDescription(ambient, tuple(maps), "spectrahedral", None, ())
    # eigenvalue row r gives the linear inequality sum_i r[i] c_i >= 0; the
    # PSD locus is their intersection, an exact closed polyhedral cone
    normals = []
    for r in rows:
        real = []
        for v in r:
            g = as_gaussian(v)
            if g.im:
                return ConeDescription(ambient, tuple(maps), "spectrahedral", None, ())
            real.append(g.re)
        if any(real):
            normals.append(tuple(real))
    closure = PolyhedralCone.from_inequalities(ambient, normals)
    return ConeDescription(
        ambient, tuple(maps), "polyhedral", closure, tuple(normals)
    )


# -- the Lee-Gauduchon cone ---------------------------------------------------------


@dataclass(frozen=True)
class LGCone:
    """The open dual of the pseudo-effective cone inside the space W.

    Coordinates are with respect to the basis of W returned by
    ``engine.lee_gauduchon_space().subspace``.  ``kind`` is "full" when the
    pseudo-effective cone is trivial (then the cone equals all of W) and
    "polyhedral" when exact facet normals exist; ``facet_rows[j]`` pairs a
    W-coordinate vector with the j-th extreme pseudo-effective ray.
    """

    engine: CohomologyEngine
    w_dim: int
    kind: str
    facet_rows: tuple[tuple[Fraction, ...], ...]
    pseff: ConeDescription

    def membership(self, w_coords: Sequence) -> ConeMembership:
        """Interior = inside the open cone; Boundary = on its closure only."""
        coords = tuple(Fraction(c) for c in w_coords)
        if len(coords) != self.w_dim:
            raise ValueError("coordinate vector has the wrong length")
        if self.kind == "full":
            return ConeMembership.INTERIOR
        values = [
            sum((r * c for r, c in zip(row, coords)), Fraction(0))
            for row in self.facet_rows
        ]
        if any(v < 0 for v in values):
            return ConeMembership.OUTSIDE
        if all(v > 0 for v in values):
            return ConeMembership.INTERIOR
        return ConeMembership.BOUNDARY

    def closure_cone(self) -> PolyhedralCone:
        if self.kind == "full":
            return PolyhedralCone.from_inequalities(self.w_dim, [])
        return PolyhedralCone.from_inequalities(self.w_dim, list(self.facet_rows))

    def class_coordinates(self, cls: CohomologyClass) -> tuple[Fraction, ...] | None:
        """W-coordinates of a degree-(2n-1) class, or None if outside W."""
        space = self.engine.lee_gauduchon_space()
        vec = tuple(c.re for c in cls.coords) if all(
            c.is_real for c in cls.coords
        ) else None
        if vec is None:
            return None
        coords = space.subspace.coordinates(vec)
        if coords is None:
            return None
        return tuple(Fraction(as_gaussian(c).re) for c in coords)

    def contains_class(self, cls: CohomologyClass) -> ConeMembership:
        coords = self.class_coordinates(cls)
        if coords is None:
            return ConeMembership.OUTSIDE
        return self.membership(coords)


def lg_cone(engine: CohomologyEngine) -> LGCone:
    """The Lee-Gauduchon cone: {x in W : <x, rho> > 0 for all nonzero
    pseudo-effective rho}, with <x, rho> the integral of rho ^ x."""
    pseff = pseff_cone_in_dcH1(engine)
    space = engine.lee_gauduchon_space()
    if pseff.kind == "trivial":
        return LGCone(engine, space.dim, "full", (), pseff)
    if pseff.kind != "polyhedral":
        raise ConeNotPolyhedral(
            "pseudo-effective cone has no exact polyhedral description"
        )
    h1 = engine.de_rham(1)
    w_classes = space.basis_classes()
    facet_rows = []
    for ray in pseff.rays:
        cls = CohomologyClass(h1, tuple(as_gaussian(c) for c in ray))
        row = []
        for w in w_classes:
            v = engine.pairing(cls, w)
            row.append(Fraction(v.re))
        facet_rows.append(tuple(row))
    if not facet_rows:
        return LGCone(engine, space.dim, "full", (), pseff)
    return LGCone(engine, space.dim, "polyhedral", tuple(facet_rows), pseff)


# -- Gauduchon cone membership with certificates --------------------------------------


@dataclass(frozen=True)
class GauduchonMembership:
    """Three-valued verdict with an exactly re-checkable certificate.

    ``verdict`` is "interior" (certificate: a strictly positive
    (n-1,n-1)-representative with vanishing del-delbar, i.e. the (n-1)-power
    class of a Gauduchon metric), "outside" (certificate: a closed positive
    (1,1)-form pairing non-positively with the class), or "unknown".
    """

    verdict: str
    certificate: Form | None


def _real_span_forms(structure: ComplexStructure, sub: Subspace, degree: int):
    out = []
    for b in sub.basis:
        f = Form(
            structure.presentation, degree, tuple(as_gaussian(v) for v in b)
        )
        for g in (f, _I * f):
            re = g.real_part()
            if not re.is_zero:
                out.append(re)
    return out


@functools.lru_cache(maxsize=None)
def _aeppli_boundary_forms(engine: CohomologyEngine) -> tuple[Form, ...]:
    """Real forms spanning the denominator of real Aeppli (n-1,n-1)."""
    n = engine.n
    k = 2 * n - 2
    structure = engine.structure
    out = []
    if n >= 2:
        src = engine.pure_subspace(n - 2, n - 1)
        for b in src.basis:
            f = Form(structure.presentation, k - 1, tuple(as_gaussian(v) for v in b))
            for g in (f, _I * f):
                df = structure.del_(g)
                cand = df + df.conjugate()
                if not cand.is_zero:
                    out.append(cand)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _closed_positive_11_basis(engine: CohomologyEngine) -> tuple[Form, ...]:
    """Real basis of closed (1,1)-forms (candidates for dual certificates)."""
    size = engine.presentation.basis_size(2)
    rows = list(engine._purity_rows(1, 1)) + list(engine._d_rows(2))
    closed = Subspace.from_vectors(size, kernel(rows, size))
    out = []
    for b in closed.basis:
        f = Form(engine.presentation, 2, tuple(as_gaussian(v) for v in b))
        if not f.is_real:
            raise AssertionError("closed (1,1) echelon basis should be real")
        out.append(f)
    return tuple(out)


def verify_interior_certificate(
    engine: CohomologyEngine, a: CohomologyClass, phi: Form
) -> bool:
    """Exact re-check: phi strictly positive, del-delbar-closed, class a."""
    s = engine.structure
    n = engine.n
    if phi.degree != 2 * n - 2 or not phi.is_real:
        return False
    if s.is_positive_n1n1(phi) is not Definiteness.POSITIVE_DEFINITE:
        return False
    if not s.del_(s.delbar(phi)).is_zero:
        return False
    ae = engine.aeppli(n - 1, n - 1)
    return ae.class_of(phi).coords == a.coords


def verify_outside_certificate(
    engine: CohomologyEngine, a: CohomologyClass, xi: Form
) -> bool:
    """Exact re-check: xi closed, positive, nonzero, pairing(a, xi) <= 0."""
    s = engine.structure
    if xi.degree != 2 or not xi.is_real or xi.is_zero:
        return False
    if not xi.d().is_zero:
        return False
    if s.is_positive_11(xi) is Definiteness.INDEFINITE:
        return False
    value = s.integral(wedge(xi, a.representative()))
    return value.is_real and value.re <= 0


def _rationalize(values, max_denominator=10**6):
    return [Fraction(float(v)).limit_denominator(max_denominator) for v in values]


def gauduchon_cone_membership(
    engine: CohomologyEngine, a: CohomologyClass
) -> GauduchonMembership:
    """Decide whether a real (n-1,n-1) Aeppli class lies in the open cone of
    (n-1)-powers of Gauduchon metrics.

    Primal path: search the affine family rep(a) + boundary for a strictly
    positive representative (semidefinite feasibility, then exact
    re-validation of a rationalized witness).  Dual path: search for a
    closed positive (1,1)-form pairing non-positively with the class.  The
    two can never both succeed, because the pairing of a positive form with
    a strictly positive one is exactly positive.
    """
    n = engine.n
    s = engine.structure
    if not a.is_real:
        raise ValueError("membership is defined for real Aeppli classes")
    rep = a.representative()
    boundary = _aeppli_boundary_forms(engine)

    # primal: exact fast path when there is nothing to optimize over
    g0 = _float_hermitian(s.n1n1_matrix(rep))
    if not boundary:
        if s.is_positive_n1n1(rep) is Definiteness.POSITIVE_DEFINITE:
            return GauduchonMembership("interior", rep)
    else:
        witness = _primal_search(engine, a, rep, boundary, g0)
        if witness is not None:
            return GauduchonMembership("interior", witness)

    xi = _dual_search(engine, a)
    if xi is not None:
        return GauduchonMembership("outside", xi)
    return GauduchonMembership("unknown", None)


def _float_hermitian(mat):
    import numpy as np

    return np.array([[complex(v) for v in row] for row in mat])


def _primal_search(engine, a, rep, boundary, g0):
    import cvxpy as cp
    import numpy as np

    s = engine.structure
    gs = [_float_hermitian(s.n1n1_matrix(b)) for b in boundary]
    t = cp.Variable(len(boundary))
    margin = cp.Variable()
    expr = g0 + sum(ti * gi for ti, gi in zip(t, gs))
    size = g0.shape[0]
    scale = max(1.0, float(np.max(np.abs(g0))))
    constraints = [
        expr >> margin * np.eye(size),
        cp.abs(t) <= 100 * scale,
        margin <= scale,
    ]
    prob = cp.Problem(cp.Maximize(margin), constraints)
    try:
        prob.solve()
    except cp.SolverError:
        return None
    if t.value is None or margin.value is None or margin.value <= 1e-7 * scale:
        return None
    coeffs = _rationalize(t.value)
    phi = rep
    for c, b in zip(coeffs, boundary):
        phi = phi + c * b
    if verify_interior_certificate(engine, a, phi):
        return phi
    return None


def _dual_search(engine, a):
    import cvxpy as cp
    import numpy as np

    s = engine.structure
    basis = _closed_positive_11_basis(engine)
    if not basis:
        return None
    hs_exact = [s.hermitian_matrix(b) for b in basis]
    hs = [_float_hermitian(h) for h in hs_exact]
    rep = a.representative()
    pairings = [complex(s.integral(wedge(b, rep))).real for b in basis]
    c = cp.Variable(len(basis))
    expr = sum(ci * hi for ci, hi in zip(c, hs))
    size = hs[0].shape[0]
    objective = sum(ci * pi for ci, pi in zip(c, pairings))
    base = [expr >> 0, cp.trace(cp.real(expr)) == 1]
    prob = cp.Problem(cp.Minimize(objective), base)
    try:
        prob.solve()
    except cp.SolverError:
        return None
    if c.value is None or prob.value is None or prob.value > 1e-7:
        return None
    slack = prob.value / 2 if prob.value < -1e-7 else 0.0
    candidates = [_rationalize(c.value)]
    # A boundary-optimal witness may rationalize to an indefinite form.  Ask
    # for a second witness whose eigenvalues have a positive margin away from
    # the common kernel of the whole span (every combination vanishes there
    # exactly, so the margin survives rationalization).
    common = kernel(
        sparse_from_dense([list(row) for h in hs_exact for row in h]), size
    )
    if common:
        v = np.array([[complex(x) for x in vec] for vec in common]).T
        proj = np.eye(size) - v @ np.linalg.solve(v.conj().T @ v, v.conj().T)
    else:
        proj = np.eye(size)
    margin = cp.Variable()
    prob2 = cp.Problem(
        cp.Maximize(margin),
        base + [expr >> margin * proj, objective <= slack],
    )
    try:
        prob2.solve()
        if c.value is not None and margin.value is not None and margin.value > 1e-7:
            candidates.insert(0, _rationalize(c.value))
    except cp.SolverError:
        pass
    # snapped variants help when the true witness is sparse
    for raw in list(candidates):
        top = max((abs(v) for v in raw), default=Fraction(0))
        candidates.append(
            [v if abs(v) > top / 10**5 else Fraction(0) for v in raw]
        )
    for cand in candidates:
        xi = Form.zero(engine.presentation, 2)
        for v, b in zip(cand, basis):
            if v:
                xi = xi + v * b
        if not xi.is_zero and verify_outside_certificate(engine, a, xi):
            return xi
    return None


# -- samplers ---------------------------------------------------------------------


def random_metric(structure: ComplexStructure, rng: random.Random) -> HermitianMetric:
    """A random rational positive-definite invariant metric (H = B B* + I)."""
    n = structure.n
    b = [
        [
            GaussianRational(
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
            )
            for _ in range(n)
        ]
        for _ in range(n)
    ]
    h = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = GaussianRational(1) if i == j else _ZERO
            for k in range(n):
                acc = acc + b[i][k] * b[j][k].conjugate()
            h[i][j] = acc
    return HermitianMetric.from_hermitian(structure, h)


def random_aeppli_class(
    engine: CohomologyEngine, rng: random.Random
) -> CohomologyClass:
    """A random real class in Aeppli (n-1, n-1)."""
    ae = engine.aeppli(engine.n - 1, engine.n - 1)
    coords = tuple(
        GaussianRational(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
        for _ in range(ae.dim)
    )
    return CohomologyClass(ae, coords)
