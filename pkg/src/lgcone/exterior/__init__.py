"""Chevalley-Eilenberg exterior algebra with complex structures and
Hermitian metrics, over exact Gaussian-rational coefficients."""

from .presentation import (
    JacobiFailure,
    NotUnimodular,
    LieAlgebraPresentation,
    ValidationReport,
)
from .forms import DegreeOverflow, Form, wedge, power
from .complex_structure import (
    ComplexStructure,
    NotComplexStructure,
    NotIntegrable,
    WrongBidegree,
)
from .metrics import (
    HermitianMetric,
    HermitianRoot,
    NotPositiveDefinite,
    NotStrictlyPositive,
    codifferential,
    hermitian_root,
    hodge_star,
)

__all__ = [
    "JacobiFailure",
    "NotUnimodular",
    "LieAlgebraPresentation",
    "ValidationReport",
    "DegreeOverflow",
    "Form",
    "wedge",
    "power",
    "ComplexStructure",
    "NotComplexStructure",
    "NotIntegrable",
    "WrongBidegree",
    "HermitianMetric",
    "HermitianRoot",
    "NotPositiveDefinite",
    "NotStrictlyPositive",
    "codifferential",
    "hermitian_root",
    "hodge_star",
]
