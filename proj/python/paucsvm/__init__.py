"""Linear scorers trained to maximize partial AUC in an FPR interval."""

from ._core import (
    ConfigError,
    ConvergenceError,
    DataError,
    Error,
    auc,
    cross_validate,
    hinge_surrogate,
    load_svmlight,
    normalize,
    pauc,
    pauc_risk,
    roc_points,
    scores,
    structural_surrogate,
    tpr_at_fpr,
    train,
)

__all__ = [
    "ConfigError",
    "ConvergenceError",
    "DataError",
    "Error",
    "auc",
    "cross_validate",
    "hinge_surrogate",
    "load_svmlight",
    "normalize",
    "pauc",
    "pauc_risk",
    "roc_points",
    "scores",
    "structural_surrogate",
    "tpr_at_fpr",
    "train",
]
