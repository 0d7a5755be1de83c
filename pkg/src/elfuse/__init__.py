"""Fused empirical-likelihood location estimation.

A Gaussian primary sample with plug-in MLE variance is combined with a
second sample of unknown distribution sharing the same center; the
second sample enters through an empirical likelihood built on a median
estimating equation (exact indicator or kernel-smoothed).  Subpackages
cover the inner Lagrange solver, the outer maximizer, limiting-law
formulas, percentile bootstrap intervals, and the seeded Monte Carlo
harness that reproduces the six result tables.
"""

from .asymptotics import (
    AsymptoticCovariances,
    AsymptoticInputs,
    asymptotic_inputs,
    covariances,
    empirical_inputs,
    lr_null_sample,
    lr_statistic,
)
from .bootstrap import BootstrapConfig, Interval, IntervalSet, bootstrap_ci
from .distributions import DistributionSpec, label, parse_label, sample, standard_normal
from .el_inner_solver import ELSolution, indicator_closed_form, solve_lambda
from .estimating_equations import (
    EquationSpec,
    Kernel,
    bandwidth,
    epanechnikov_kernel,
    g_eval,
    median_indicator,
    smoothed_median,
)
from .fusion_estimator import (
    EstimationError,
    FusionEstimate,
    FusionProblem,
    estimate,
    estimate_indicator,
    estimate_smoothed,
    mle_baseline,
    objective,
)
from .sim_harness import (
    ScenarioResult,
    ScenarioSpec,
    TableArtifact,
    load_scenario,
    reproduce_table,
    run_scenario,
)

__all__ = [
    "AsymptoticCovariances",
    "AsymptoticInputs",
    "BootstrapConfig",
    "DistributionSpec",
    "ELSolution",
    "EquationSpec",
    "EstimationError",
    "FusionEstimate",
    "FusionProblem",
    "Interval",
    "IntervalSet",
    "Kernel",
    "ScenarioResult",
    "ScenarioSpec",
    "TableArtifact",
    "asymptotic_inputs",
    "bandwidth",
    "bootstrap_ci",
    "covariances",
    "empirical_inputs",
    "epanechnikov_kernel",
    "estimate",
    "estimate_indicator",
    "estimate_smoothed",
    "g_eval",
    "indicator_closed_form",
    "label",
    "load_scenario",
    "lr_null_sample",
    "lr_statistic",
    "median_indicator",
    "mle_baseline",
    "objective",
    "parse_label",
    "reproduce_table",
    "run_scenario",
    "sample",
    "smoothed_median",
    "solve_lambda",
    "standard_normal",
]

__version__ = "0.1.0"
