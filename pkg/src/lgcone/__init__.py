"""Invariant-form cohomology and Lee-Gauduchon cone computations for
compact quotients of Lie groups, with exact rational arithmetic."""

from .cohomology import CohomologyClass, CohomologyEngine, CohomologyGroup
from .cones import (
    gauduchon_cone_membership,
    is_balanced,
    is_gauduchon,
    is_strongly_gauduchon,
    lck_lee_form,
    lee_form,
    lee_gauduchon_class,
    lg_cone,
    pseff_cone_in_dcH1,
)
from .exterior import (
    ComplexStructure,
    Form,
    HermitianMetric,
    LieAlgebraPresentation,
    hermitian_root,
    power,
    wedge,
)
from .fileformat import export, parse
from .models import all_models

__version__ = "0.1.0"

__all__ = [
    "CohomologyClass",
    "CohomologyEngine",
    "CohomologyGroup",
    "ComplexStructure",
    "Form",
    "HermitianMetric",
    "LieAlgebraPresentation",
    "all_models",
    "export",
    "gauduchon_cone_membership",
    "hermitian_root",
    "is_balanced",
    "is_gauduchon",
    "is_strongly_gauduchon",
    "lck_lee_form",
    "lee_form",
    "lee_gauduchon_class",
    "lg_cone",
    "parse",
    "power",
    "pseff_cone_in_dcH1",
    "wedge",
    "__version__",
]
