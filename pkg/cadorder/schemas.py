"""
Pydantic schemas for experiment configuration and reports.
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from cadorder.ingest.split import DEFAULT_FRACTIONS
from cadorder.settings import get_settings


# --- Configuration ---

class ExperimentConfig(BaseModel):
    """Everything that parameterizes one experiment run."""
    model_config = ConfigDict(extra="forbid")

    seed: Optional[int] = None
    fractions: tuple[float, float, float] = DEFAULT_FRACTIONS
    gamma_exponents: tuple[int, int] = (-15, 3)
    c_exponents: tuple[int, int] = (-5, 15)
    metric: Literal["mcc", "f1"] = "mcc"
    kkt_tol: float = Field(default_factory=lambda: get_settings().KKT_TOL, gt=0)
    max_passes: int = Field(default_factory=lambda: get_settings().MAX_PASSES, ge=1)
    workers: int = Field(default_factory=lambda: get_settings().WORKERS, ge=1)
    sotd_include_input: bool = True
    ndrr_all_levels: bool = False

    @field_validator("gamma_exponents", "c_exponents")
    @classmethod
    def _ascending(cls, value: tuple[int, int]) -> tuple[int, int]:
        if value[0] > value[1]:
            raise ValueError(f"exponent range {value} is empty")
        return value

    @property
    def gamma_range(self) -> range:
        return range(self.gamma_exponents[0], self.gamma_exponents[1] + 1)

    @property
    def c_range(self) -> range:
        return range(self.c_exponents[0], self.c_exponents[1] + 1)


# --- Report ---

class SplitSizes(BaseModel):
    train: int
    validation: int
    test: int


class ClassifierSummary(BaseModel):
    """The classifier trained for one heuristic."""
    heuristic: str
    gamma: Optional[float] = None
    C: Optional[float] = None
    cost_factor: Optional[float] = None
    validation_score: Optional[float] = None
    support_vectors: int = 0
    converged: bool = True
    nonconverged_cells: int = 0
    constant_label: Optional[int] = None


class CaseRow(BaseModel):
    case: int
    ml: bool
    sotd: bool
    ndrr: bool
    brown: bool
    count: int


class ConditionalRowOut(BaseModel):
    sotd: bool
    ndrr: bool
    brown: bool
    ml_yes: int
    ml_no: int
    proportion: Optional[float] = None
    comparator: float


class SelectionOut(BaseModel):
    problem_id: str
    margins: dict[str, float]
    selected: str
    success: dict[str, bool]
    ml_success: bool
    case: int


class QuarantinedProblem(BaseModel):
    problem_id: str
    error: str


class ExperimentReport(BaseModel):
    """Outcome of one run: the case breakdown and everything derived from it."""
    label_metric: str
    seed: int
    config: ExperimentConfig
    problems: int
    split: SplitSizes
    classifiers: list[ClassifierSummary] = Field(default_factory=list)
    cases: list[CaseRow] = Field(default_factory=list)
    conditional: list[ConditionalRowOut] = Field(default_factory=list)
    totals: dict[str, int] = Field(default_factory=dict)
    test_size: int = 0
    ml_rate: Optional[float] = None
    random_baseline: Optional[float] = None
    best_single: Optional[str] = None
    best_single_rate: Optional[float] = None
    selections: list[SelectionOut] = Field(default_factory=list)
    quarantined: list[QuarantinedProblem] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)
