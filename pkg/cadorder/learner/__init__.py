# RBF support vector machine: training, scoring and model search
from cadorder.learner.kernel import KernelParams, rbf_kernel, gram_matrix
from cadorder.learner.metrics import ConfusionCounts, mcc, f1
from cadorder.learner.smo import (
    SvmModel,
    SvmFit,
    decision_value,
    predict,
    cost_factor,
    train_svm,
    solve_svm,
    dual_objective,
    kkt_violations,
)
from cadorder.learner.grid import GAMMA_EXPONENTS, C_EXPONENTS, GridSearchResult, grid_search
from cadorder.learner.model_io import save_model, load_model

__all__ = [
    "KernelParams",
    "rbf_kernel",
    "gram_matrix",
    "ConfusionCounts",
    "mcc",
    "f1",
    "SvmModel",
    "SvmFit",
    "decision_value",
    "predict",
    "cost_factor",
    "train_svm",
    "solve_svm",
    "dual_objective",
    "kkt_violations",
    "GAMMA_EXPONENTS",
    "C_EXPONENTS",
    "GridSearchResult",
    "grid_search",
    "save_model",
    "load_model",
]
