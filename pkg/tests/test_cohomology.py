"""Cohomology groups, duality pairings, and the Lee-Gauduchon space."""

import math
import random
from fractions import Fraction

import pytest

from oracle import (
    FloatComplex,
    aeppli_dim,
    bott_chern_dim,
    de_rham_dim,
    dolbeault_dim,
)

from lgcone.cohomology import (
    CohomologyEngine,
    NotDiagonalBidegree,
    NotInCohomologyGroup,
)
from lgcone.exactla import GaussianRational
from lgcone.exterior import Form, wedge
from lgcone.models import (
    all_models,
    calabi_eckmann,
    hopf,
    inoue_s0,
    iwasawa,
    kodaira_thurston,
    ot_model,
    torus,
)


def engines():
    return [(m, CohomologyEngine(m.structure)) for m in all_models()]


SMALL_MODELS = [torus(2), kodaira_thurston(), inoue_s0(), hopf()]


# -- baseline dimensions -------------------------------------------------------


def test_torus_dimensions():
    eng = CohomologyEngine(torus(2).structure)
    for k in range(5):
        assert eng.de_rham(k).dim == math.comb(4, k)
    for p in range(3):
        for q in range(3):
            expected = math.comb(2, p) * math.comb(2, q)
            assert eng.dolbeault(p, q).dim == expected
            assert eng.bott_chern(p, q).dim == expected
            assert eng.aeppli(p, q).dim == expected


def test_inoue_h1_generated_by_alpha():
    model = inoue_s0()
    eng = CohomologyEngine(model.structure)
    h1 = eng.de_rham(1)
    assert h1.dim == 1
    alpha = Form.generator(model.presentation, "alpha_1")
    assert not h1.class_of(alpha).is_zero


def test_iwasawa_dolbeault_asymmetry():
    eng = CohomologyEngine(iwasawa().structure)
    assert eng.dolbeault(1, 0).dim == 3
    assert eng.dolbeault(0, 1).dim == 2


def test_calabi_eckmann_vanishing():
    eng = CohomologyEngine(calabi_eckmann().structure)
    assert eng.de_rham(2).dim == 0
    assert eng.de_rham(5).dim == 0


def test_class_of_rejects_non_closed():
    model = inoue_s0()
    eng = CohomologyEngine(model.structure)
    beta = Form.generator(model.presentation, "beta_1")
    with pytest.raises(NotInCohomologyGroup):
        eng.de_rham(1).class_of(beta)


# -- independent float oracle -----------------------------------------------------


def test_de_rham_against_oracle():
    for model, eng in engines():
        fc = FloatComplex(model.presentation, model.structure)
        for k in range(model.presentation.dim + 1):
            assert eng.de_rham(k).dim == de_rham_dim(fc, k), (model.name, k)


def test_bidegree_theories_against_oracle():
    for model, eng in engines():
        fc = FloatComplex(model.presentation, model.structure)
        n = eng.n
        for p in range(n + 1):
            for q in range(n + 1):
                if p + q > model.presentation.dim:
                    continue
                assert eng.dolbeault(p, q).dim == dolbeault_dim(fc, p, q), (
                    model.name,
                    "dolbeault",
                    p,
                    q,
                )
                assert eng.bott_chern(p, q).dim == bott_chern_dim(fc, p, q), (
                    model.name,
                    "bott_chern",
                    p,
                    q,
                )
                assert eng.aeppli(p, q).dim == aeppli_dim(fc, p, q), (
                    model.name,
                    "aeppli",
                    p,
                    q,
                )


# -- duality ------------------------------------------------------------------------


def test_aeppli_duality_dimensions_and_pairing():
    for model, eng in engines():
        n = eng.n
        for p in range(n + 1):
            for q in range(n + 1):
                bc = eng.bott_chern(p, q)
                ae = eng.aeppli(n - p, n - q)
                assert bc.dim == ae.dim, (model.name, p, q)
                eng.check_duality(bc, ae)


def test_bott_chern_conjugation_symmetry():
    for model, eng in engines():
        n = eng.n
        for p in range(n + 1):
            for q in range(p, n + 1):
                assert eng.bott_chern(p, q).dim == eng.bott_chern(q, p).dim


def test_pairing_representative_independent():
    rng = random.Random(5)
    model = iwasawa()
    eng = CohomologyEngine(model.structure)
    bc = eng.bott_chern(1, 1)
    ae = eng.aeppli(2, 2)
    cls_bc = bc.basis()[0]
    cls_ae = ae.basis()[-1]
    base = eng.pairing(cls_bc, cls_ae)
    # perturb the Aeppli representative by denominator elements
    rep = cls_ae.representative()
    for _ in range(5):
        pq21 = eng.pure_subspace(2, 1)
        vec = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in pq21.basis]
        pert = Form.zero(model.presentation, 3)
        for c, b in zip(vec, pq21.basis):
            pert = pert + c * Form(
                model.presentation, 3, tuple(GaussianRational(0) + v for v in b)
            )
        moved = rep + model.structure.del_(pert) + model.structure.del_(pert).conjugate()
        assert eng.pairing(cls_bc, ae.class_of(moved)) == base
        assert (ae.class_of(moved).coords == cls_ae.coords)


def test_pairing_with_zero_class_is_zero():
    eng = CohomologyEngine(torus(2).structure)
    bc = eng.bott_chern(1, 1)
    ae = eng.aeppli(1, 1)
    zero = 0 * ae.basis()[0]
    for cls in bc.basis():
        assert not eng.pairing(cls, zero)


# -- real forms ------------------------------------------------------------------


def test_real_subspace():
    for model, eng in engines():
        n = eng.n
        ae = eng.aeppli(n - 1, n - 1)
        real = eng.real_subspace(ae)
        assert real.dim == ae.dim
        for f in real.real_basis_forms():
            assert f.is_real
    eng = CohomologyEngine(torus(2).structure)
    with pytest.raises(NotDiagonalBidegree):
        eng.real_subspace(eng.bott_chern(1, 0))


# -- holomorphic forms, exact sequence, the space W ----------------------------------


def test_holomorphic_closed_1forms():
    assert len(CohomologyEngine(torus(2).structure).holomorphic_closed_1forms()) == 2
    assert len(CohomologyEngine(inoue_s0().structure).holomorphic_closed_1forms()) == 0
    assert len(CohomologyEngine(iwasawa().structure).holomorphic_closed_1forms()) == 2
    for phi in CohomologyEngine(iwasawa().structure).holomorphic_closed_1forms():
        assert phi.d().is_zero
        assert phi.bidegree == (1, 0)


def test_exact_sequence():
    for model, eng in engines():
        report = eng.exact_sequence_report()
        assert report.ok, (model.name, report)


def test_torus_real_holomorphic_fill_h1():
    eng = CohomologyEngine(torus(2).structure)
    assert eng.real_holomorphic_classes().dim == eng.de_rham(1).dim


def test_lee_gauduchon_space():
    expected = {
        "torus_2": 0,
        "torus_3": 0,
        "kodaira_thurston": 1,
        "iwasawa": 0,
        "inoue_s0": 1,
        "ot_2_1": 2,
        "hopf": 1,
        "calabi_eckmann": 0,
    }
    for model, eng in engines():
        space = eng.lee_gauduchon_space()
        assert space.agree, model.name
        assert space.dim == expected[model.name], model.name
        # every basis class is annihilated by the real holomorphic classes
        h1 = eng.de_rham(1)
        for w in space.basis_classes():
            for phi in eng.holomorphic_closed_1forms():
                cls = h1.class_of(phi.real_part())
                assert not eng.pairing(cls, w)


# -- model fact tables ----------------------------------------------------------------


def test_model_facts():
    for model in all_models():
        results = model.verify_facts()
        failed = [k for k, ok in results.items() if not ok]
        assert not failed, (model.name, failed)
