"""Greedy maximization of non-monotone submodular functions under multiple
knapsack constraints, in static and dynamically-changing-budget settings."""

from .core import (
    EmptyAfterReductionError,
    GroundSet,
    Instance,
    InvalidInstanceError,
    KnapsackConstraints,
    Objective,
    Solution,
    marginal,
    reduce_instance,
    set_cost,
    validate,
)
from .dynamic import DynamicGreedy, WeightUpdate
from .harness import (
    RunTrace,
    SimConfig,
    load_updates,
    perturb_weights,
    run_dynamic,
    run_with_updates,
    summarize,
)
from .io import instance_from_dict, load_instance
from .objectives import (
    DirectedCutObjective,
    DppLogDetObjective,
    EntropyObjective,
    ModularObjective,
    NotPositiveDefiniteError,
    PartitionBudget,
    QdKernelSpec,
    build_qd_kernel,
)
from .oracle import (
    CurvatureDegenerateError,
    OracleCapError,
    OracleReport,
    brute_force_curvature,
    brute_force_opt,
    check_guarantee,
    guarantee_bound,
)
from .solver import (
    Partition,
    SolveResult,
    chi,
    complement_search,
    greedy_phase,
    lambda_greedy,
    split_by_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "EmptyAfterReductionError",
    "GroundSet",
    "Instance",
    "InvalidInstanceError",
    "KnapsackConstraints",
    "Objective",
    "Solution",
    "marginal",
    "reduce_instance",
    "set_cost",
    "validate",
    "DynamicGreedy",
    "WeightUpdate",
    "RunTrace",
    "SimConfig",
    "perturb_weights",
    "run_dynamic",
    "run_with_updates",
    "load_updates",
    "summarize",
    "instance_from_dict",
    "load_instance",
    "DirectedCutObjective",
    "DppLogDetObjective",
    "EntropyObjective",
    "ModularObjective",
    "NotPositiveDefiniteError",
    "PartitionBudget",
    "QdKernelSpec",
    "build_qd_kernel",
    "CurvatureDegenerateError",
    "OracleCapError",
    "OracleReport",
    "brute_force_curvature",
    "brute_force_opt",
    "check_guarantee",
    "guarantee_bound",
    "Partition",
    "SolveResult",
    "chi",
    "complement_search",
    "greedy_phase",
    "lambda_greedy",
    "split_by_threshold",
]
