"""Metric classification, pseudo-effective and Lee-Gauduchon cones,
Gauduchon-cone membership with certificates."""

import random
from fractions import Fraction

import pytest

from lgcone.cohomology import CohomologyEngine
from lgcone.cones import (
    ConeMembership,
    GauduchonMembership,
    LCKResult,
    NotLCK,
    gauduchon_cone_membership,
    gauduchon_defect,
    is_balanced,
    is_gauduchon,
    is_strongly_gauduchon,
    lck_lee_form,
    lee_form,
    lee_gauduchon_class,
    lg_cone,
    pseff_cone_in_dcH1,
    random_aeppli_class,
    random_metric,
    verify_interior_certificate,
    verify_outside_certificate,
)
from lgcone.exactla import GaussianRational
from lgcone.exterior import Form, HermitianMetric, power, wedge
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


def engine_of(model):
    return CohomologyEngine(model.structure)


# -- metric classification ------------------------------------------------------


def test_torus_metrics_always_gauduchon():
    model = torus(2)
    rng = random.Random(3)
    for _ in range(5):
        m = random_metric(model.structure, rng)
        assert is_gauduchon(m)
        assert is_balanced(m)
        assert is_strongly_gauduchon(m)


def test_iwasawa_standard_metric_balanced():
    model = iwasawa()
    m = model.metric()
    assert is_balanced(m)
    assert is_strongly_gauduchon(m)
    assert is_gauduchon(m)


def test_inoue_standard_metric_classification():
    model = inoue_s0()
    m = model.metric()
    assert is_gauduchon(m)
    assert not is_balanced(m)
    assert not is_strongly_gauduchon(m)


def test_invariant_metrics_always_gauduchon():
    # d vanishes on forms of degree dim-1 whenever the trace form is zero,
    # so every invariant metric on these models has zero Gauduchon defect
    rng = random.Random(7)
    for model in all_models():
        for _ in range(3):
            m = random_metric(model.structure, rng)
            assert gauduchon_defect(m).is_zero, model.name
            assert is_gauduchon(m), model.name


def test_balanced_implies_strongly_gauduchon_on_samples():
    rng = random.Random(9)
    for model in all_models():
        for _ in range(3):
            m = random_metric(model.structure, rng)
            if is_balanced(m):
                assert is_strongly_gauduchon(m)


# -- Lee forms ---------------------------------------------------------------------


def test_lee_form_torus_zero_and_kaehler_flag():
    model = torus(2)
    m = model.metric()
    assert lee_form(m).is_zero
    result = lck_lee_form(m)
    assert result.theta.is_zero and result.kaehler


def test_inoue_lck_lee_form_is_alpha():
    model = inoue_s0()
    result = lck_lee_form(model.metric("lck"))
    alpha = Form.generator(model.presentation, "alpha_1")
    assert (result.theta - alpha).is_zero
    assert not result.kaehler
    assert result.theta.d().is_zero


def test_hopf_lck_lee_form():
    model = hopf()
    result = lck_lee_form(model.metric())
    e4 = Form.generator(model.presentation, "e4")
    assert (result.theta + e4).is_zero
    assert not result.kaehler


def test_iwasawa_not_lck():
    with pytest.raises(NotLCK):
        lck_lee_form(iwasawa().metric())


def test_lee_form_coclosed_iff_gauduchon():
    rng = random.Random(11)
    for model in (torus(2), inoue_s0(), kodaira_thurston(), hopf()):
        for _ in range(20):
            m = random_metric(model.structure, rng)
            theta = lee_form(m)
            assert m.codifferential(theta).is_zero == is_gauduchon(m), model.name


# -- Lee-Gauduchon classes ------------------------------------------------------------


def test_lee_gauduchon_class_zero_for_balanced():
    model = iwasawa()
    engine = engine_of(model)
    cls = lee_gauduchon_class(engine, model.metric())
    assert cls.is_zero


def test_lee_gauduchon_class_perturbed_metric():
    # a perturbed metric is still Gauduchon and its class stays in the cone
    model = inoue_s0()
    engine = engine_of(model)
    omega = model.metric_forms["standard"] + Form.from_terms(
        model.presentation,
        2,
        [
            (Fraction(1, 4), ("alpha_1", "gamma_1")),
            (Fraction(1, 4), ("beta_1", "gamma_2")),
        ],
    )
    m = HermitianMetric(model.structure, omega)
    assert is_gauduchon(m)
    cone = lg_cone(engine)
    cls = lee_gauduchon_class(engine, m)
    assert cone.contains_class(cls) is ConeMembership.INTERIOR


def test_lee_gauduchon_class_lies_in_w():
    rng = random.Random(13)
    for model in (torus(2), inoue_s0(), hopf(), kodaira_thurston()):
        engine = engine_of(model)
        cone = lg_cone(engine)
        found = 0
        for _ in range(10):
            m = random_metric(model.structure, rng)
            if not is_gauduchon(m):
                continue
            cls = lee_gauduchon_class(engine, m)
            coords = cone.class_coordinates(cls)
            assert coords is not None, model.name
            found += 1
            if cone.pseff.kind != "trivial":
                assert cone.membership(coords) is ConeMembership.INTERIOR
        # strongly Gauduchon metrics have vanishing class
        m = model.metric("standard")
        if is_gauduchon(m) and is_strongly_gauduchon(m):
            assert lee_gauduchon_class(engine, m).is_zero


# -- the pseudo-effective cone --------------------------------------------------------


def test_pseff_trivial_on_torus_and_iwasawa():
    for model in (torus(2), torus(3), iwasawa(), calabi_eckmann()):
        cone = pseff_cone_in_dcH1(engine_of(model))
        assert cone.kind == "trivial", model.name


def test_pseff_inoue_half_line():
    model = inoue_s0()
    engine = engine_of(model)
    cone = pseff_cone_in_dcH1(engine)
    assert cone.kind == "polyhedral"
    h1 = engine.de_rham(1)
    alpha_coords = h1.class_of(
        Form.generator(model.presentation, "alpha_1")
    ).coords
    assert len(cone.rays) == 1
    ray = cone.rays[0]
    # the unique ray is a positive multiple of [alpha]
    assert all(
        Fraction(r) * alpha_coords[0].re >= 0 for r in ray
    ) and any(ray)
    assert cone.is_member(ray)
    assert not cone.is_member([-r for r in ray])
    assert not cone.is_member([0] * cone.ambient_dim)


def test_pseff_ot_models_are_alpha_cones():
    for s, t in ((2, 1), (3, 1)):
        model = ot_model(s, t)
        engine = engine_of(model)
        cone = pseff_cone_in_dcH1(engine)
        assert cone.kind == "polyhedral"
        h1 = engine.de_rham(1)
        assert h1.dim == s
        # the cone is exactly the nonnegative span of the [alpha_i]
        alpha_cls = [
            h1.class_of(Form.generator(model.presentation, f"alpha_{i}")).coords
            for i in range(1, s + 1)
        ]
        from lgcone.exactla import PolyhedralCone

        expected = PolyhedralCone.from_rays(
            s, [tuple(c.re for c in coords) for coords in alpha_cls]
        )
        got = cone.closure
        assert set(expected.rays) == set(got.rays)
        assert not expected.lineality and not got.lineality
        # exact membership matches: interior points and outside points
        inside = tuple(sum(c.re for c in col) for col in zip(*alpha_cls))
        assert cone.is_member(inside)
        assert not cone.is_member(tuple(-v for v in inside))


def test_positivity_of_minus_dbeta():
    from lgcone.exactla import Definiteness

    for s, t in ((1, 1), (2, 1), (2, 2)):
        model = ot_model(s, t)
        for i in range(1, s + 1):
            beta = Form.generator(model.presentation, f"beta_{i}")
            form = -beta.d()
            verdict = model.structure.is_positive_11(form)
            assert verdict is not Definiteness.INDEFINITE
            assert not form.is_zero


# -- the Lee-Gauduchon cone ------------------------------------------------------------


def test_lg_full_when_pseff_trivial():
    for model in (torus(2), torus(3), iwasawa(), calabi_eckmann()):
        engine = engine_of(model)
        cone = lg_cone(engine)
        assert cone.kind == "full"
        assert cone.w_dim == engine.lee_gauduchon_space().dim
        # torus / iwasawa / calabi_eckmann: W = 0, so LG = {0}
        assert cone.w_dim == 0
        assert cone.membership(()) is ConeMembership.INTERIOR


def test_lg_inoue_half_line():
    model = inoue_s0()
    engine = engine_of(model)
    cone = lg_cone(engine)
    assert cone.kind == "polyhedral"
    assert cone.w_dim == 1
    assert len(cone.facet_rows) == 1
    r = cone.facet_rows[0][0]
    assert r != 0
    side = 1 if r > 0 else -1
    assert cone.membership((side,)) is ConeMembership.INTERIOR
    assert cone.membership((-side,)) is ConeMembership.OUTSIDE
    assert cone.membership((0,)) is ConeMembership.BOUNDARY
    # the standard Gauduchon metric's class generates the half-line
    cls = lee_gauduchon_class(engine, model.metric())
    assert cone.contains_class(cls) is ConeMembership.INTERIOR


def test_lg_ot_models_open_dual():
    for s, t in ((2, 1), (3, 1)):
        model = ot_model(s, t)
        engine = engine_of(model)
        cone = lg_cone(engine)
        assert cone.kind == "polyhedral"
        assert cone.w_dim == s
        assert len(cone.facet_rows) == s
        # the facet pairing is non-degenerate: the dual cone is solid
        from lgcone.exactla import rank, sparse_from_dense

        assert rank(sparse_from_dense([list(r) for r in cone.facet_rows]), s) == s
        closure = cone.closure_cone()
        assert len(closure.rays) == s and not closure.lineality
        # an interior point: any positive combination of the closure rays
        interior = tuple(
            sum(r[i] for r in closure.rays) for i in range(s)
        )
        assert cone.membership(interior) is ConeMembership.INTERIOR
        assert cone.membership(tuple(-v for v in interior)) is ConeMembership.OUTSIDE
        # Gauduchon sample: standard metric class lies in the open cone
        m = model.metric()
        if is_gauduchon(m):
            cls = lee_gauduchon_class(engine, m)
            assert cone.contains_class(cls) is ConeMembership.INTERIOR


def test_hopf_lg_half_line():
    engine = engine_of(hopf())
    cone = lg_cone(engine)
    assert cone.w_dim == 1
    assert cone.kind == "polyhedral"
    assert len(cone.facet_rows) == 1


# -- Gauduchon cone membership ----------------------------------------------------------


def test_membership_torus_power_class():
    model = torus(2)
    engine = engine_of(model)
    ae = engine.aeppli(1, 1)
    omega = model.metric_forms["standard"]
    a = ae.class_of(power(omega, 1))
    res = gauduchon_cone_membership(engine, a)
    assert res.verdict == "interior"
    assert verify_interior_certificate(engine, a, res.certificate)
    neg = ae.class_of(-1 * power(omega, 1))
    res2 = gauduchon_cone_membership(engine, neg)
    assert res2.verdict == "outside"
    assert verify_outside_certificate(engine, neg, res2.certificate)


def test_membership_iwasawa_power_class():
    model = iwasawa()
    engine = engine_of(model)
    ae = engine.aeppli(2, 2)
    a = ae.class_of(power(model.metric_forms["standard"], 2))
    res = gauduchon_cone_membership(engine, a)
    assert res.verdict == "interior"
    assert verify_interior_certificate(engine, a, res.certificate)


def test_membership_random_classes_consistent():
    rng = random.Random(2024)
    for model in (torus(2), inoue_s0(), iwasawa()):
        engine = engine_of(model)
        decided = 0
        total = 12
        for _ in range(total):
            a = random_aeppli_class(engine, rng)
            res = gauduchon_cone_membership(engine, a)
            if res.verdict == "interior":
                assert verify_interior_certificate(engine, a, res.certificate)
                decided += 1
            elif res.verdict == "outside":
                assert verify_outside_certificate(engine, a, res.certificate)
                decided += 1
        assert decided >= int(0.8 * total), model.name
