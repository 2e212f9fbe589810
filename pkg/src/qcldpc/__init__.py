"""Quasi-cyclic LDPC codes from terminated protographs: construction, distance bounds, BEC thresholds."""

from .bounds import (
    BoundReport,
    CofactorCodeword,
    cofactor_codeword,
    exhaustive_dmin,
    isd_search,
    permanent,
    theorem1_bound,
)
from .density_evolution import DEConfig, ThresholdReport, de_converges, threshold
from .protograph import (
    BaseMatrix,
    EdgeSpreading,
    GraphCover,
    TerminatedProtograph,
    check_cover,
    degree_profile,
    design_rate,
    terminate,
    validate_spreading,
)
from .qc_lift import (
    PolyMatrix,
    QCParityCheck,
    ShiftAssignment,
    code_params,
    gf2_rank,
    girth,
    is_codeword,
    lift,
)

__all__ = [
    "BaseMatrix", "EdgeSpreading", "GraphCover", "TerminatedProtograph",
    "validate_spreading", "terminate", "design_rate", "degree_profile", "check_cover",
    "ShiftAssignment", "QCParityCheck", "PolyMatrix",
    "lift", "girth", "gf2_rank", "code_params", "is_codeword",
    "BoundReport", "CofactorCodeword", "permanent", "theorem1_bound", "cofactor_codeword",
    "exhaustive_dmin", "isd_search",
    "DEConfig", "ThresholdReport", "de_converges", "threshold",
]
