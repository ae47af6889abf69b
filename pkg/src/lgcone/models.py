"""Bundled models: validated Lie algebra presentations with complex
structures and distinguished Hermitian metrics.

Each constructor returns a ``NamedModel`` whose presentation validates
(Jacobi + unimodular), whose complex structure is integrable, and whose
distinguished metrics are positive definite.  The ``facts`` table records
machine-checkable expected values (dimensions, metric properties) that
``verify_facts`` recomputes from scratch.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .exterior.complex_structure import ComplexStructure
from .exterior.forms import Form, wedge
from .exterior.metrics import HermitianMetric
from .exterior.presentation import LieAlgebraPresentation, NotUnimodular

__all__ = [
    "NamedModel",
    "torus",
    "ot_model",
    "inoue_s0",
    "iwasawa",
    "kodaira_thurston",
    "hopf",
    "calabi_eckmann",
    "all_models",
]


@dataclass(frozen=True)
class NamedModel:
    """A presentation + complex structure + labeled fundamental forms."""

    name: str
    presentation: LieAlgebraPresentation
    structure: ComplexStructure
    metric_forms: Mapping[str, Form] = field(default_factory=dict)
    facts: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        self.presentation.require_valid()

    def metric(self, label: str = "standard") -> HermitianMetric:
        return HermitianMetric(self.structure, self.metric_forms[label])

    @property
    def engine(self):
        return _engine_for(self.structure)

    def verify_facts(self) -> dict[str, bool]:
        """Recompute every expected fact; maps fact key -> pass/fail."""
        out = {}
        for key, expected in self.facts.items():
            out[key] = _evaluate_fact(self, key) == expected
        return out


@functools.lru_cache(maxsize=None)
def _engine_for(structure: ComplexStructure):
    from .cohomology import CohomologyEngine

    return CohomologyEngine(structure)


def _evaluate_fact(model: NamedModel, key: str):
    engine = model.engine
    head, _, arg = key.partition(":")
    if head == "de_rham_dim":
        return engine.de_rham(int(arg)).dim
    if head == "dolbeault_dim":
        p, q = (int(x) for x in arg.split(","))
        return engine.dolbeault(p, q).dim
    if head == "bott_chern_dim":
        p, q = (int(x) for x in arg.split(","))
        return engine.bott_chern(p, q).dim
    if head == "aeppli_dim":
        p, q = (int(x) for x in arg.split(","))
        return engine.aeppli(p, q).dim
    if head == "holomorphic_closed_dim":
        return len(engine.holomorphic_closed_1forms())
    if head == "w_dim":
        return engine.lee_gauduchon_space().dim
    if head == "balanced":
        from .cones import is_balanced

        return is_balanced(model.metric(arg))
    if head == "gauduchon":
        from .cones import is_gauduchon

        return is_gauduchon(model.metric(arg))
    if head == "lck":
        from .cones import NotLCK, lck_lee_form

        try:
            lck_lee_form(model.metric(arg))
            return True
        except NotLCK:
            return False
    raise KeyError(f"unknown fact key {key!r}")


# -- the complex torus -----------------------------------------------------------


def torus(n: int) -> NamedModel:
    """Abelian model of complex dimension n with the flat structure."""
    if n < 1:
        raise ValueError("complex dimension must be at least 1")
    names = []
    pairs = []
    omega_terms = []
    for a in range(1, n + 1):
        names += [f"x{a}", f"y{a}"]
        pairs.append((f"x{a}", f"y{a}"))
        omega_terms.append((1, (f"x{a}", f"y{a}")))
    pres = LieAlgebraPresentation.from_dict(names, {})
    structure = ComplexStructure.from_pairs(pres, pairs)
    omega = Form.from_terms(pres, 2, omega_terms)
    return NamedModel(
        name=f"torus_{n}",
        presentation=pres,
        structure=structure,
        metric_forms={"standard": omega},
        facts={
            "de_rham_dim:1": 2 * n,
            "holomorphic_closed_dim": n,
            "w_dim": 0,
            "gauduchon:standard": True,
            "balanced:standard": True,
        },
    )


# -- solvable models with s real and t complex directions -------------------------


def ot_model(
    s: int,
    t: int,
    psi_coeffs: Sequence[Sequence[Fraction]] | None = None,
    phi_coeffs: Sequence[Sequence[Fraction]] | None = None,
    seed: int = 20,
) -> NamedModel:
    """Solvable model with generators alpha_1..alpha_s, beta_1..beta_s,
    gamma_1..gamma_{2t} and structure equations

        d alpha_i = 0
        d beta_i  = -alpha_i ^ beta_i
        d gamma_{2i-1} =  psi_i ^ gamma_{2i-1} + phi_i ^ gamma_{2i}
        d gamma_{2i}   = -phi_i ^ gamma_{2i-1} + psi_i ^ gamma_{2i}

    with psi_i, phi_i rational combinations of the alpha_j.  Unimodularity
    holds exactly when sum_i psi_coeffs[i][j] = 1/2 for every j, which the
    default psi_coeffs[i][j] = 1/(2t) satisfies; other choices raise
    NotUnimodular with the violated constraint.  phi defaults to generic
    rationals drawn from a fixed-seed generator.
    """
    if s < 1 or t < 1:
        raise ValueError("need at least one real and one complex direction")
    if psi_coeffs is None:
        psi_coeffs = [[Fraction(1, 2 * t)] * s for _ in range(t)]
    psi = [[Fraction(v) for v in row] for row in psi_coeffs]
    if phi_coeffs is None:
        rng = random.Random(seed)
        phi_coeffs = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(s)]
            for _ in range(t)
        ]
    phi = [[Fraction(v) for v in row] for row in phi_coeffs]
    if len(psi) != t or any(len(r) != s for r in psi):
        raise ValueError("psi_coeffs must be a t x s rational matrix")
    if len(phi) != t or any(len(r) != s for r in phi):
        raise ValueError("phi_coeffs must be a t x s rational matrix")
    for j in range(s):
        total = sum(psi[i][j] for i in range(t))
        if total != Fraction(1, 2):
            raise NotUnimodular(
                f"sum_i psi_coeffs[i][{j}] = {total}, must equal 1/2"
            )

    names = (
        [f"alpha_{i}" for i in range(1, s + 1)]
        + [f"beta_{i}" for i in range(1, s + 1)]
        + [f"gamma_{k}" for k in range(1, 2 * t + 1)]
    )
    diff: dict = {}
    for i in range(1, s + 1):
        diff[f"beta_{i}"] = [(-1, f"alpha_{i}", f"beta_{i}")]
    for i in range(1, t + 1):
        g_odd, g_even = f"gamma_{2 * i - 1}", f"gamma_{2 * i}"
        odd_terms, even_terms = [], []
        for j in range(1, s + 1):
            a = f"alpha_{j}"
            if psi[i - 1][j - 1]:
                odd_terms.append((psi[i - 1][j - 1], a, g_odd))
                even_terms.append((psi[i - 1][j - 1], a, g_even))
            if phi[i - 1][j - 1]:
                odd_terms.append((phi[i - 1][j - 1], a, g_even))
                even_terms.append((-phi[i - 1][j - 1], a, g_odd))
        diff[g_odd] = odd_terms
        diff[g_even] = even_terms
    pres = LieAlgebraPresentation.from_dict(names, diff)
    pairs = [(f"alpha_{i}", f"beta_{i}") for i in range(1, s + 1)] + [
        (f"gamma_{2 * i - 1}", f"gamma_{2 * i}") for i in range(1, t + 1)
    ]
    structure = ComplexStructure.from_pairs(pres, pairs)
    omega = Form.from_terms(
        pres,
        2,
        [(1, (f"alpha_{i}", f"beta_{i}")) for i in range(1, s + 1)]
        + [(1, (f"gamma_{2 * i - 1}", f"gamma_{2 * i}")) for i in range(1, t + 1)],
    )
    return NamedModel(
        name=f"ot_{s}_{t}",
        presentation=pres,
        structure=structure,
        metric_forms={"standard": omega},
        facts={
            "de_rham_dim:1": s,
            "holomorphic_closed_dim": 0,
            "w_dim": s,
        },
    )


def inoue_s0(phi_coeff: Fraction = Fraction(1)) -> NamedModel:
    """The s = t = 1 solvable surface, with its standard conformally
    Kaehler metric alpha^beta + gamma_1^gamma_2 attached."""
    base = ot_model(1, 1, phi_coeffs=[[Fraction(phi_coeff)]])
    omega = base.metric_forms["standard"]
    return NamedModel(
        name="inoue_s0",
        presentation=base.presentation,
        structure=base.structure,
        metric_forms={"standard": omega, "lck": omega},
        facts={
            "de_rham_dim:1": 1,
            "holomorphic_closed_dim": 0,
            "w_dim": 1,
            "gauduchon:standard": True,
            "balanced:standard": False,
            "lck:lck": True,
        },
    )


# -- nilpotent models --------------------------------------------------------------


def iwasawa() -> NamedModel:
    """Complex 3-dim 2-step nilpotent model: d e5 = -e13 + e24,
    d e6 = -e14 - e23 (i.e. d phi_3 = -phi_1 ^ phi_2)."""
    pres = LieAlgebraPresentation.from_dict(
        ["e1", "e2", "e3", "e4", "e5", "e6"],
        {
            "e5": [(-1, "e1", "e3"), (1, "e2", "e4")],
            "e6": [(-1, "e1", "e4"), (-1, "e2", "e3")],
        },
    )
    structure = ComplexStructure.from_pairs(
        pres, [("e1", "e2"), ("e3", "e4"), ("e5", "e6")]
    )
    omega = Form.from_terms(
        pres, 2, [(1, ("e1", "e2")), (1, ("e3", "e4")), (1, ("e5", "e6"))]
    )
    return NamedModel(
        name="iwasawa",
        presentation=pres,
        structure=structure,
        metric_forms={"standard": omega},
        facts={
            "de_rham_dim:1": 4,
            "holomorphic_closed_dim": 2,
            "w_dim": 0,
            "balanced:standard": True,
            "gauduchon:standard": True,
        },
    )


def kodaira_thurston() -> NamedModel:
    """Real 4-dim nilpotent model: d e4 = e1 ^ e2."""
    pres = LieAlgebraPresentation.from_dict(
        ["e1", "e2", "e3", "e4"], {"e4": [(1, "e1", "e2")]}
    )
    structure = ComplexStructure.from_pairs(pres, [("e1", "e2"), ("e3", "e4")])
    omega = Form.from_terms(pres, 2, [(1, ("e1", "e2")), (1, ("e3", "e4"))])
    return NamedModel(
        name="kodaira_thurston",
        presentation=pres,
        structure=structure,
        metric_forms={"standard": omega},
        facts={
            "de_rham_dim:1": 3,
            "holomorphic_closed_dim": 1,
            "w_dim": 1,
        },
    )


# -- compact-group models -----------------------------------------------------------


def _su2_differentials(a: str, b: str, c: str) -> dict:
    return {
        a: [(-1, b, c)],
        b: [(1, a, c)],
        c: [(-1, a, b)],
    }


def hopf() -> NamedModel:
    """su(2) + R with the standard integrable structure; the metric
    e1^e4 + e2^e3 is conformally Kaehler with closed Lee form -e4."""
    diff = _su2_differentials("e1", "e2", "e3")
    pres = LieAlgebraPresentation.from_dict(["e1", "e2", "e3", "e4"], diff)
    structure = ComplexStructure.from_pairs(pres, [("e1", "e4"), ("e2", "e3")])
    omega = Form.from_terms(pres, 2, [(1, ("e1", "e4")), (1, ("e2", "e3"))])
    return NamedModel(
        name="hopf",
        presentation=pres,
        structure=structure,
        metric_forms={"standard": omega},
        facts={
            "de_rham_dim:1": 1,
            "holomorphic_closed_dim": 0,
            "w_dim": 1,
            "lck:standard": True,
        },
    )


def calabi_eckmann(fiber_parameter: Fraction = Fraction(1)) -> NamedModel:
    """su(2) + su(2) with the product-of-spheres type structure pairing the
    two central directions; ``fiber_parameter`` scales that pairing."""
    r = Fraction(fiber_parameter)
    if r <= 0:
        raise ValueError("fiber parameter must be positive")
    diff = {}
    diff.update(_su2_differentials("e1", "e2", "e3"))
    diff.update(_su2_differentials("f1", "f2", "f3"))
    names = ["e1", "e2", "e3", "f1", "f2", "f3"]
    pres = LieAlgebraPresentation.from_dict(names, diff)
    pos = {n: k for k, n in enumerate(names)}
    dim = pres.dim
    j = [[Fraction(0)] * dim for _ in range(dim)]
    for x, y in (("e2", "e3"), ("f2", "f3")):
        j[pos[y]][pos[x]] = Fraction(1)
        j[pos[x]][pos[y]] = Fraction(-1)
    j[pos["f1"]][pos["e1"]] = r
    j[pos["e1"]][pos["f1"]] = -1 / r
    structure = ComplexStructure(pres, j)
    omega = Form.from_terms(
        pres, 2, [(r, ("e1", "f1")), (1, ("e2", "e3")), (1, ("f2", "f3"))]
    )
    return NamedModel(
        name="calabi_eckmann",
        presentation=pres,
        structure=structure,
        metric_forms={"standard": omega},
        facts={
            "de_rham_dim:1": 0,
            "de_rham_dim:2": 0,
            "de_rham_dim:5": 0,
            "holomorphic_closed_dim": 0,
            "w_dim": 0,
        },
    )


def all_models() -> list[NamedModel]:
    """The bundled model zoo (used by the cross-cutting test suites)."""
    return [
        torus(2),
        torus(3),
        kodaira_thurston(),
        iwasawa(),
        inoue_s0(),
        ot_model(2, 1),
        hopf(),
        calabi_eckmann(),
    ]
