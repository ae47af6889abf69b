"""Exact linear algebra over rationals and Gaussian rationals."""

from .matrices import (
    QuotientSpace,
    Subspace,
    SubspaceNotContained,
    apply_rows,
    dense_from_sparse,
    det,
    inverse,
    kernel,
    quotient,
    rank,
    rref,
    solve,
    sparse_from_dense,
)
from .polyhedral import (
    ConeMembership,
    DegeneratePairing,
    PolyhedralCone,
    cone_from_inequalities,
    cone_from_rays,
    dual_cone_polyhedral,
)
from .psd import Definiteness, NotHermitian, charpoly, is_psd_hermitian
from .scalars import GaussianRational, as_gaussian

__all__ = [
    "GaussianRational",
    "as_gaussian",
    "Subspace",
    "QuotientSpace",
    "SubspaceNotContained",
    "quotient",
    "kernel",
    "rank",
    "rref",
    "solve",
    "det",
    "inverse",
    "apply_rows",
    "sparse_from_dense",
    "dense_from_sparse",
    "Definiteness",
    "NotHermitian",
    "charpoly",
    "is_psd_hermitian",
    "PolyhedralCone",
    "ConeMembership",
    "DegeneratePairing",
    "cone_from_inequalities",
    "cone_from_rays",
    "dual_cone_polyhedral",
]
