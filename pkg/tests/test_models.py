"""Bundled models: structure equations, fact tables, text round-trips."""

from fractions import Fraction

import pytest

from lgcone.exterior import HermitianMetric, NotUnimodular
from lgcone.fileformat import export, parse
from lgcone.models import (
    all_models,
    hopf,
    inoue_s0,
    iwasawa,
    ot_model,
    torus,
)

INOUE_CANONICAL = """\
# inoue_s0: structure equations (0,-12,1/2*13+14,-13+1/2*14)
algebra inoue_s0
dim 4
basis alpha_1 beta_1 gamma_1 gamma_2
d alpha_1 = 0
d beta_1 = -1 alpha_1^beta_1
d gamma_1 = 1/2 alpha_1^gamma_1 + 1 alpha_1^gamma_2
d gamma_2 = -1 alpha_1^gamma_1 + 1/2 alpha_1^gamma_2
J: alpha_1 -> beta_1, gamma_1 -> gamma_2
metric standard = 1 alpha_1^beta_1 + 1 gamma_1^gamma_2
metric lck = 1 alpha_1^beta_1 + 1 gamma_1^gamma_2
"""


def test_inoue_canonical_text():
    m = inoue_s0()
    assert export(m.name, m.presentation, m.structure, m.metric_forms) == (
        INOUE_CANONICAL
    )


def test_torus_is_abelian():
    m = torus(3)
    assert m.presentation.dim == 6
    assert all(not terms for terms in m.presentation.differentials)


def test_solvable_model_unimodularity_constraint():
    with pytest.raises(NotUnimodular, match="must equal 1/2"):
        ot_model(2, 1, psi_coeffs=[[Fraction(1, 3), Fraction(1, 3)]])
    # a non-default split that still sums to 1/2 per column is accepted
    ok = ot_model(
        1, 2, psi_coeffs=[[Fraction(1, 3)], [Fraction(1, 6)]]
    )
    assert ok.presentation.validate().ok


def test_all_metrics_positive_definite():
    for model in all_models():
        for label in model.metric_forms:
            HermitianMetric(model.structure, model.metric_forms[label])


def test_export_parse_round_trip():
    for model in all_models():
        text = export(
            model.name, model.presentation, model.structure, model.metric_forms
        )
        parsed = parse(text)
        assert parsed.name == model.name
        assert parsed.presentation == model.presentation
        assert parsed.structure.j_matrix == model.structure.j_matrix
        assert set(parsed.metric_forms) == set(model.metric_forms)
        for label, omega in parsed.metric_forms.items():
            assert (omega - model.metric_forms[label]).is_zero
        # exporting the parsed model is a fixed point
        again = export(
            parsed.name, parsed.presentation, parsed.structure, parsed.metric_forms
        )
        assert again == text


def test_model_names_unique():
    names = [m.name for m in all_models()]
    assert len(names) == len(set(names))


def test_distinguished_metric_labels():
    assert set(inoue_s0().metric_forms) == {"standard", "lck"}
    for model in (torus(2), iwasawa(), hopf()):
        assert "standard" in model.metric_forms
