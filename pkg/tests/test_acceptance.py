"""End-to-end acceptance checks.

Each test covers one headline guarantee of the package and emits a single
pass/fail line on the real terminal (bypassing capture) so a plain pytest
run shows a scoreboard."""

import random
from fractions import Fraction

import pytest

from lgcone.cohomology import CohomologyEngine
from lgcone.cones import (
    ConeMembership,
    gauduchon_cone_membership,
    is_balanced,
    is_gauduchon,
    is_strongly_gauduchon,
    lee_form,
    lee_gauduchon_class,
    lg_cone,
    pseff_cone_in_dcH1,
    random_aeppli_class,
    random_metric,
    verify_interior_certificate,
    verify_outside_certificate,
)
from lgcone.exactla import (
    Definiteness,
    GaussianRational,
    PolyhedralCone,
    rank,
    sparse_from_dense,
)
from lgcone.exterior import Form, hermitian_root, power
from lgcone.fileformat import export, parse
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


def _report(index, total, label, passed):
    from conftest import ACCEPTANCE_LINES

    status = "PASS" if passed else "FAIL"
    line = f"[{index:2d}/{total}] {label}: {status}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, label


TOTAL = 14


def _engine(model):
    return CohomologyEngine(model.structure)


def _random_form(rng, presentation, degree):
    coeffs = [
        Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        for _ in range(presentation.basis_size(degree))
    ]
    return Form.from_coeffs(presentation, degree, coeffs)


def test_criterion_01_operator_identities():
    rng = random.Random(1)
    ok = True
    for model in all_models():
        s = model.structure
        pres = model.presentation
        for _ in range(200):
            k = rng.randint(0, pres.dim - 2)
            f = _random_form(rng, pres, k)
            ok = ok and f.d().d().is_zero
            ok = ok and (f.d() - s.del_(f) - s.delbar(f)).is_zero
            ok = ok and s.del_(s.del_(f)).is_zero
            ok = ok and s.delbar(s.delbar(f)).is_zero
            lhs = s.dc(f).d()
            rhs = GaussianRational(0, 2) * s.del_(s.delbar(f))
            ok = ok and (lhs - rhs).is_zero
            if not ok:
                break
    _report(1, TOTAL, "exterior operator identities on random forms", ok)


def test_criterion_02_duality():
    ok = True
    for model in all_models():
        eng = _engine(model)
        n = eng.n
        for p in range(n + 1):
            for q in range(n + 1):
                bc = eng.bott_chern(p, q)
                ae = eng.aeppli(n - p, n - q)
                ok = ok and bc.dim == ae.dim
                try:
                    eng.check_duality(bc, ae)
                except Exception:
                    ok = False
    _report(2, TOTAL, "Bott-Chern / Aeppli duality pairing non-degenerate", ok)


def test_criterion_03_exact_sequence():
    ok = all(_engine(m).exact_sequence_report().ok for m in all_models())
    _report(3, TOTAL, "low-degree exact sequence on every bundled model", ok)


def test_criterion_04_w_two_constructions_agree():
    ok = all(_engine(m).lee_gauduchon_space().agree for m in all_models())
    _report(4, TOTAL, "two constructions of the space W coincide", ok)


def test_criterion_05_torus_trivial_cone():
    ok = True
    for n in (2, 3):
        eng = _engine(torus(n))
        cone = lg_cone(eng)
        ok = ok and eng.lee_gauduchon_space().dim == 0
        ok = ok and cone.kind == "full" and cone.w_dim == 0
    _report(5, TOTAL, "tori have W = 0 and trivial dual cone", ok)


def test_criterion_06_inoue_half_line():
    model = inoue_s0()
    eng = _engine(model)
    h1 = eng.de_rham(1)
    ok = h1.dim == 1 and eng.lee_gauduchon_space().dim == 1
    pseff = pseff_cone_in_dcH1(eng)
    alpha = h1.class_of(Form.generator(model.presentation, "alpha_1")).coords
    ok = ok and pseff.kind == "polyhedral" and len(pseff.rays) == 1
    ray = pseff.rays[0]
    ok = ok and any(ray) and all(Fraction(r) * alpha[0].re >= 0 for r in ray)
    cone = lg_cone(eng)
    ok = ok and cone.kind == "polyhedral" and len(cone.facet_rows) == 1
    cls = lee_gauduchon_class(eng, model.metric())
    ok = ok and cone.contains_class(cls) is ConeMembership.INTERIOR
    neg = (-1) * cls
    ok = ok and cone.contains_class(neg) is ConeMembership.OUTSIDE
    _report(6, TOTAL, "solvable surface: both cones are half-lines", ok)


def test_criterion_07_solvable_family_dual_cones():
    ok = True
    for s, t in ((2, 1), (3, 1)):
        model = ot_model(s, t)
        eng = _engine(model)
        h1 = eng.de_rham(1)
        pseff = pseff_cone_in_dcH1(eng)
        ok = ok and pseff.kind == "polyhedral" and h1.dim == s
        alpha_cls = [
            h1.class_of(Form.generator(model.presentation, f"alpha_{i}")).coords
            for i in range(1, s + 1)
        ]
        expected = PolyhedralCone.from_rays(
            s, [tuple(c.re for c in coords) for coords in alpha_cls]
        )
        ok = ok and set(expected.rays) == set(pseff.closure.rays)
        ok = ok and not pseff.closure.lineality
        cone = lg_cone(eng)
        ok = ok and cone.kind == "polyhedral" and cone.w_dim == s
        ok = ok and rank(
            sparse_from_dense([list(r) for r in cone.facet_rows]), s
        ) == s
        cls = lee_gauduchon_class(eng, model.metric())
        ok = ok and cone.contains_class(cls) is ConeMembership.INTERIOR
    _report(
        7, TOTAL, "solvable family: cone generated by the closed directions", ok
    )


def test_criterion_08_minus_dbeta_positive():
    ok = True
    for s, t in ((1, 1), (2, 1), (2, 2), (3, 1)):
        model = ot_model(s, t)
        for i in range(1, s + 1):
            form = -Form.generator(model.presentation, f"beta_{i}").d()
            verdict = model.structure.is_positive_11(form)
            ok = ok and verdict is not Definiteness.INDEFINITE
            ok = ok and not form.is_zero
    _report(8, TOTAL, "-d(beta_i) positive nonzero on the solvable family", ok)


def test_criterion_09_balanced_class_vanishes():
    model = iwasawa()
    eng = _engine(model)
    m = model.metric()
    ok = is_balanced(m) and is_strongly_gauduchon(m)
    ok = ok and lee_gauduchon_class(eng, m).is_zero
    cone = lg_cone(eng)
    ok = ok and cone.kind == "full"  # the cone is all of W
    _report(9, TOTAL, "balanced metric: vanishing class and full cone", ok)


def test_criterion_10_product_model_dichotomy():
    model = calabi_eckmann()
    eng = _engine(model)
    ok = eng.de_rham(2).dim == 0 and eng.de_rham(5).dim == 0
    ok = ok and eng.lee_gauduchon_space().dim == 0
    candidate = Form.from_terms(
        model.presentation, 2, [(1, ("e2", "e3")), (1, ("f2", "f3"))]
    )
    ok = ok and candidate.d().is_zero
    ok = ok and model.structure.is_positive_11(candidate) is not (
        Definiteness.INDEFINITE
    )
    ok = ok and not candidate.is_zero
    ok = ok and not eng.bott_chern(1, 1).class_of(candidate).is_zero
    _report(
        10, TOTAL, "product model: trivial W but nonzero positive class", ok
    )


def test_criterion_11_membership_consistency():
    rng = random.Random(2026)
    ok = True
    for model in (torus(2), iwasawa(), inoue_s0()):
        eng = _engine(model)
        decided = 0
        total = 50
        for _ in range(total):
            a = random_aeppli_class(eng, rng)
            res = gauduchon_cone_membership(eng, a)
            if res.verdict == "interior":
                ok = ok and verify_interior_certificate(eng, a, res.certificate)
                decided += 1
            elif res.verdict == "outside":
                ok = ok and verify_outside_certificate(eng, a, res.certificate)
                decided += 1
        ok = ok and decided >= int(0.8 * total)
    _report(
        11, TOTAL, "cone membership: certificates re-verify, >=80% decided", ok
    )


def test_criterion_12_lee_form_equivalence():
    rng = random.Random(4)
    ok = True
    for model in all_models():
        for _ in range(20):
            m = random_metric(model.structure, rng)
            coclosed = m.codifferential(lee_form(m)).is_zero
            ok = ok and (coclosed == is_gauduchon(m))
    _report(12, TOTAL, "Lee form coclosed exactly when metric is Gauduchon", ok)


def test_criterion_13_hermitian_root_residual():
    rng = random.Random(8)
    ok = True
    for model in (torus(2), hopf(), torus(3), iwasawa(), kodaira_thurston()):
        n = model.structure.n
        for _ in range(4):
            m = random_metric(model.structure, rng)
            root = hermitian_root(model.structure, power(m.omega, n - 1))
            ok = ok and root.residual <= Fraction(1, 10**10)
    _report(13, TOTAL, "(n-1)-th root of a positive power, residual <= 1e-10", ok)


def test_criterion_14_cli_determinism(tmp_path, capsys):
    from lgcone.cli import main

    ok = True
    for model in all_models():
        text = export(
            model.name, model.presentation, model.structure, model.metric_forms
        )
        parsed = parse(text)
        again = export(
            parsed.name, parsed.presentation, parsed.structure, parsed.metric_forms
        )
        ok = ok and again == text
    model = inoue_s0()
    path = tmp_path / "model.alg"
    path.write_text(
        export(model.name, model.presentation, model.structure, model.metric_forms)
    )
    outputs = set()
    for _ in range(2):
        code = main(["check", str(path), "--seed", "5"])
        outputs.add(capsys.readouterr().out)
        ok = ok and code == 0
    ok = ok and len(outputs) == 1
    _report(14, TOTAL, "canonical text round-trip and deterministic reports", ok)
