import random
from fractions import Fraction

import numpy as np
import pytest

from lgcone.exactla import (
    ConeMembership,
    Definiteness,
    GaussianRational,
    NotHermitian,
    PolyhedralCone,
    Subspace,
    SubspaceNotContained,
    charpoly,
    dual_cone_polyhedral,
    is_psd_hermitian,
    kernel,
    quotient,
    rank,
    solve,
    sparse_from_dense,
)

F = Fraction
G = GaussianRational


def mat(rows):
    return sparse_from_dense([[F(x) for x in row] for row in rows])


class TestScalars:
    def test_field_ops(self):
        a = G(1, 2)
        b = G(F(1, 3), -1)
        assert a + b == G(F(4, 3), 1)
        assert a * b == G(F(1, 3) + 2, F(2, 3) - 1)
        assert (a / b) * b == a
        assert a - a == 0
        assert not (a - a)

    def test_conjugate_and_coercion(self):
        a = G(2, 3)
        assert a.conjugate() == G(2, -3)
        assert (a * a.conjugate()).is_real
        assert 1 + a == G(3, 3)
        assert F(1, 2) * a == G(1, F(3, 2))


class TestKernel:
    def test_rank_one(self):
        ker = kernel(mat([[1, 1], [1, 1]]), 2)
        sp = Subspace.from_vectors(2, ker)
        assert sp.dim == 1
        assert sp.contains((F(1), F(-1)))

    def test_identity_has_zero_kernel(self):
        assert kernel(mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3) == []

    def test_zero_matrix_full_kernel(self):
        ker = kernel(mat([[0, 0, 0], [0, 0, 0]]), 3)
        assert Subspace.from_vectors(3, ker).dim == 3

    def test_rank_equals_transpose_rank(self):
        rng = random.Random(7)
        for _ in range(25):
            rows = [[F(rng.randint(-3, 3)) for _ in range(4)] for _ in range(3)]
            cols = [list(c) for c in zip(*rows)]
            assert rank(mat(rows), 4) == rank(mat(cols), 3)

    def test_kernel_dim_plus_rank(self):
        rng = random.Random(11)
        for _ in range(25):
            rows = [[F(rng.randint(-2, 2)) for _ in range(5)] for _ in range(3)]
            r = rank(mat(rows), 5)
            assert len(kernel(mat(rows), 5)) + r == 5

    def test_solve(self):
        x = solve(mat([[1, 2], [3, 4]]), 2, (F(5), F(11)))
        assert x == (F(1), F(2))
        assert solve(mat([[1, 1], [1, 1]]), 2, (F(0), F(1))) is None


class TestQuotient:
    def test_line_in_plane(self):
        ambient = Subspace.full(2)
        sub = Subspace.from_vectors(2, [(F(1), F(0))])
        q = quotient(ambient, sub)
        assert q.dim == 1
        assert q.project((F(0), F(1))) == (F(1),)

    def test_trivial_quotient(self):
        s = Subspace.from_vectors(3, [(F(1), F(0), F(1)), (F(0), F(1), F(0))])
        q = quotient(s, s)
        assert q.dim == 0

    def test_not_contained(self):
        amb = Subspace.from_vectors(2, [(F(1), F(0))])
        sub = Subspace.from_vectors(2, [(F(0), F(1))])
        with pytest.raises(SubspaceNotContained):
            quotient(amb, sub)

    def test_project_left_inverse_of_lift(self):
        ambient = Subspace.full(4)
        sub = Subspace.from_vectors(4, [(F(1), F(1), F(0), F(0))])
        q = quotient(ambient, sub)
        for i in range(q.dim):
            e = tuple(F(1) if j == i else F(0) for j in range(q.dim))
            assert q.project(q.lift(e)) == e

    def test_quotient_of_inclusion_is_zero(self):
        ambient = Subspace.full(3)
        sub = Subspace.from_vectors(3, [(F(1), F(2), F(3))])
        q = quotient(ambient, sub)
        assert q.project(sub.basis[0]) == (F(0), F(0))


class TestPsd:
    def test_identity(self):
        h = [[G(1), G(0)], [G(0), G(1)]]
        assert is_psd_hermitian(h) == Definiteness.POSITIVE_DEFINITE

    def test_semidefinite(self):
        h = [[G(1), G(0)], [G(0), G(0)]]
        assert is_psd_hermitian(h) == Definiteness.POSITIVE_SEMIDEFINITE

    def test_indefinite(self):
        h = [[G(1), G(0)], [G(0), G(-1)]]
        assert is_psd_hermitian(h) == Definiteness.INDEFINITE

    def test_not_hermitian(self):
        with pytest.raises(NotHermitian):
            is_psd_hermitian([[G(0), G(1)], [G(2), G(0)]])

    def test_complex_psd(self):
        h = [[G(2), G(0, 1)], [G(0, -1), G(1)]]
        # eigenvalues of [[2, i], [-i, 1]] are (3 +- sqrt(5))/2 > 0
        assert is_psd_hermitian(h) == Definiteness.POSITIVE_DEFINITE

    def test_charpoly_trace_det(self):
        h = [[G(2), G(1, 1)], [G(1, -1), G(3)]]
        c = charpoly(h)
        assert c[1] == G(-5)  # -trace
        assert c[0] == G(4)  # det = 6 - 2

    def test_agrees_with_floating_oracle(self):
        rng = random.Random(3)
        for _ in range(100):
            n = rng.randint(1, 6)
            a = [[G(F(rng.randint(-4, 4), rng.randint(1, 3)),
                   F(rng.randint(-4, 4), rng.randint(1, 3))) for _ in range(n)]
                 for _ in range(n)]
            h = [[a[i][j] + a[j][i].conjugate() for j in range(n)] for i in range(n)]
            if rng.random() < 0.3:
                # force some semidefinite cases via h = b* b with singular b
                for i in range(n):
                    h[i][0] = G(0)
                    h[0][i] = G(0)
            verdict = is_psd_hermitian(h)
            eig = np.linalg.eigvalsh(np.array([[complex(x) for x in row] for row in h]))
            tol = 1e-9
            if verdict == Definiteness.POSITIVE_DEFINITE:
                assert eig.min() > -tol
            elif verdict == Definiteness.POSITIVE_SEMIDEFINITE:
                assert eig.min() > -tol
            else:
                assert eig.min() < tol


class TestCones:
    def test_first_orthant_self_dual(self):
        rays = [(F(1), F(0)), (F(0), F(1))]
        pairing = [[F(1), F(0)], [F(0), F(1)]]
        dual = dual_cone_polyhedral(rays, pairing)
        assert set(dual.rays) == {(F(1), F(0)), (F(0), F(1))}
        assert dual.membership((F(1), F(1))) == ConeMembership.INTERIOR
        assert dual.membership((F(0), F(0))) == ConeMembership.BOUNDARY
        assert dual.membership((F(-1), F(0))) == ConeMembership.OUTSIDE

    def test_single_ray_gives_halfplane(self):
        dual = dual_cone_polyhedral([(F(1), F(0))], [[F(1), F(0)], [F(0), F(1)]])
        assert Subspace.from_vectors(2, dual.lineality).dim == 1
        assert dual.membership((F(2), F(5))) == ConeMembership.INTERIOR
        assert dual.membership((F(0), F(5))) == ConeMembership.BOUNDARY
        assert dual.membership((F(-1), F(5))) == ConeMembership.OUTSIDE

    def test_double_dual_is_closure(self):
        rays = [(F(2), F(1), F(0)), (F(0), F(1), F(0)), (F(1), F(1), F(1))]
        eye = [[F(1 if i == j else 0) for j in range(3)] for i in range(3)]
        dual = dual_cone_polyhedral(rays, eye)
        ddual = dual_cone_polyhedral(list(dual.rays), eye)
        orig = PolyhedralCone.from_rays(3, rays)
        assert set(ddual.rays) == set(orig.rays)

    def test_from_inequalities_roundtrip(self):
        cone = PolyhedralCone.from_inequalities(
            3, [(F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]
        )
        assert set(cone.rays) == {
            (F(1), F(0), F(0)),
            (F(0), F(1), F(0)),
            (F(0), F(0), F(1)),
        }

    def test_zero_cone(self):
        cone = PolyhedralCone.from_inequalities(1, [(F(1),), (F(-1),)])
        assert cone.rays == () and cone.lineality == ()
        assert cone.membership((F(0),)) == ConeMembership.BOUNDARY
        assert cone.membership((F(1),)) == ConeMembership.OUTSIDE
