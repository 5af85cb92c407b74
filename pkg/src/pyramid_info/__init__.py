"""Discrimination and mutual-information analysis of symmetric pyramid state ensembles."""

from .ensemble import (
    PyramidEnsemble,
    Spectrum,
    axis_overlap,
    gamma_bounds,
    holevo_chi,
    make_ensemble,
    spectrum,
)
from .errors import DimensionMismatch, DomainError, SingularStart
from .information import (
    DenseChannel,
    SymmetricChannel,
    adjusted_success_probability,
    channel,
    channel_dense,
    dense_information,
    edge_channel_information,
    mutual_information,
    success_probability,
    symmetric_amplitudes,
)
from .measurements import (
    DensePovm,
    SymmetricPovm,
    ValidationReport,
    edge_cosine,
    srm,
    symmetric_povm,
    to_dense,
    validate_povm,
)
from .optimize import (
    GridSpec,
    ImsResult,
    OracleResult,
    SweepRecord,
    accessible_info_oracle,
    compare_point,
    default_outcome_count,
    max_success_oracle,
    optimize_ims,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "DenseChannel",
    "DensePovm",
    "DimensionMismatch",
    "DomainError",
    "GridSpec",
    "ImsResult",
    "OracleResult",
    "PyramidEnsemble",
    "SingularStart",
    "Spectrum",
    "SweepRecord",
    "SymmetricChannel",
    "SymmetricPovm",
    "ValidationReport",
    "accessible_info_oracle",
    "adjusted_success_probability",
    "axis_overlap",
    "channel",
    "channel_dense",
    "compare_point",
    "default_outcome_count",
    "dense_information",
    "edge_channel_information",
    "edge_cosine",
    "gamma_bounds",
    "holevo_chi",
    "make_ensemble",
    "max_success_oracle",
    "mutual_information",
    "optimize_ims",
    "spectrum",
    "srm",
    "success_probability",
    "sweep",
    "symmetric_amplitudes",
    "symmetric_povm",
    "to_dense",
    "validate_povm",
]
