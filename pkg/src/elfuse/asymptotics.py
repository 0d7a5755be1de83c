"""Scalar limiting covariances and the likelihood-ratio statistic.

The covariance formulas take four scalars: the limiting primary-sample
fraction b, the primary Fisher information I, the mean derivative
dg = E[d/dtheta g(Y, theta)] of the estimating function at the true
center, and phi = E[g^2].  The displayed
matrix algebra collapses to arithmetic at scalar dimension; the
simplified closed form of the center-estimate variance is recorded
alongside the verbatim evaluation so any discrepancy would surface.

The likelihood-ratio statistic's null law is sampled by Monte Carlo from
its quadratic-form representation in two independent Gaussians.  The
default drops the off-diagonal (cross) terms of the middle matrix: the
retained diagonal form is the exact weak limit of the nonnegative
statistic (it reduces to a single squared standardized Gaussian, i.e.
chi-square with 1 df), whereas the cross terms make the form indefinite
and are kept only behind a flag for diagnostic comparison.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from . import distributions
from .distributions import DistributionSpec
from .estimating_equations import SQRT5, EquationSpec, g_eval
from .fusion_estimator import FusionProblem, estimate, objective


@dataclass(frozen=True)
class AsymptoticInputs:
    b: float
    fisher: float
    dg: float
    phi: float

    def __post_init__(self) -> None:
        if not 0.0 < self.b < 1.0:
            raise ValueError(f"b must be in (0,1), got {self.b}")
        if self.fisher <= 0.0:
            raise ValueError(f"fisher must be > 0, got {self.fisher}")
        if self.phi <= 0.0:
            raise ValueError(f"phi must be > 0, got {self.phi}")


@dataclass(frozen=True)
class AsymptoticCovariances:
    s0: float
    s1: float
    s2: float
    s1_simplified: float


def covariances(inputs: AsymptoticInputs) -> AsymptoticCovariances:
    """Verbatim scalar evaluation of the three covariance displays."""
    b, fisher, dg, phi = inputs.b, inputs.fisher, inputs.dg, inputs.phi
    s0 = b * fisher + (1.0 - b) * dg * (1.0 / phi) * dg
    s1 = (
        b * (1.0 / s0) * fisher * (1.0 / s0)
        + (1.0 - b) * (1.0 / s0) * dg * (1.0 / phi) * dg * (1.0 / s0)
    )
    left = -1.0 / phi + (1.0 - b) * (1.0 / phi) * dg * (1.0 / s0) * dg * (1.0 / phi)
    right = -1.0 / ((1.0 - b) * phi) + (1.0 / phi) * dg * (1.0 / s0) * dg * (1.0 / phi)
    s2 = (
        b * (1.0 / phi) * dg * (1.0 / s0) * fisher * (1.0 / s0) * dg * (1.0 / phi)
        + left * phi * right
    )
    return AsymptoticCovariances(float(s0), float(s1), float(s2), float(1.0 / s0))


def equation_moments(dist2: DistributionSpec, equation: EquationSpec) -> tuple[float, float]:
    """(dg, phi) of the estimating function at the true center of dist2.

    Indicator: dg is the density at the median and phi is exactly 1/4.
    Smoothed: adaptive quadrature against the known density, with the
    off-support tails of phi contributing 1/4 of their probability mass.
    """
    theta0 = distributions.median(dist2)
    if equation.variant == "median":
        return float(distributions.pdf(dist2, theta0)), 0.25
    h = equation.h
    lo, hi = theta0 - h * SQRT5, theta0 + h * SQRT5

    def dg_integrand(yv: float) -> float:
        u = (theta0 - yv) / h
        return float(equation.kernel.density(u)) / h * float(distributions.pdf(dist2, yv))

    dg, _ = integrate.quad(dg_integrand, lo, hi, epsabs=1e-10, limit=200)

    def phi_integrand(yv: float) -> float:
        g = float(g_eval(equation, yv, theta0))
        return g * g * float(distributions.pdf(dist2, yv))

    phi_core, _ = integrate.quad(phi_integrand, lo, hi, epsabs=1e-10, limit=200)
    tail_mass = float(distributions.cdf(dist2, lo)) + 1.0 - float(distributions.cdf(dist2, hi))
    return float(dg), float(phi_core + 0.25 * tail_mass)


def asymptotic_inputs(
    dist2: DistributionSpec, equation: EquationSpec, b: float, fisher: float = 1.0
) -> AsymptoticInputs:
    dg, phi = equation_moments(dist2, equation)
    return AsymptoticInputs(b, fisher, dg, phi)


def empirical_inputs(problem: FusionProblem, theta0: float) -> AsymptoticInputs:
    """Plug-in inputs estimated from one dataset, for null-law sampling."""
    n1, n2 = problem.x.size, problem.y.size
    b = n1 / (n1 + n2)
    fisher = 1.0 / problem.s1_sq
    g = np.asarray(g_eval(problem.equation, problem.y, theta0), dtype=float)
    phi = float(np.mean(g * g))
    if problem.equation.variant == "smoothed":
        h = problem.equation.h
        kernel = problem.equation.kernel
    else:
        from .estimating_equations import epanechnikov_kernel

        h = float(n2) ** -0.5
        kernel = epanechnikov_kernel()
    dg = float(np.mean(kernel.density((theta0 - problem.y) / h)) / h)
    if phi <= 0.0:
        phi = 0.25
    return AsymptoticInputs(b, fisher, dg, phi)


def lr_statistic(problem: FusionProblem, theta0: float) -> float:
    """2*[l(theta_hat, lam_hat) - l(theta0, lam0)] with lam0 solved at theta0."""
    if not np.isfinite(theta0):
        raise ValueError("theta0 must be finite")
    obj0 = objective(problem, theta0)
    if not np.isfinite(obj0):
        raise ValueError("inner problem infeasible at theta0; statistic undefined")
    est = estimate(problem)
    return float(2.0 * (est.objective - obj0))


def lr_null_sample(
    inputs: AsymptoticInputs,
    draws: int,
    rng: np.random.Generator,
    include_cross_terms: bool = False,
) -> np.ndarray:
    """Monte Carlo draws of the limiting law of the LR statistic.

    U1 ~ N(0, b*I) and U2 ~ N(0, (1-b)*phi) are independent; the
    statistic is w^T M w for w = V_inv (U1, U2)^T.  The default
    M = diag(S0, 0) yields exactly chi-square(1); include_cross_terms
    restores the off-diagonal entries (1-b)*dg of M.
    """
    if draws < 1:
        raise ValueError(f"draws must be >= 1, got {draws}")
    b, fisher, dg, phi = inputs.b, inputs.fisher, inputs.dg, inputs.phi
    det_v = b * fisher * (-(1.0 - b) * phi) - ((1.0 - b) * dg) ** 2
    if abs(det_v) < 1e-300:
        raise ValueError(f"coupling matrix is singular (determinant {det_v})")
    s0 = covariances(inputs).s0
    u1 = np.sqrt(b * fisher) * rng.standard_normal(draws)
    u2 = np.sqrt((1.0 - b) * phi) * rng.standard_normal(draws)
    w1 = (u1 + (dg / phi) * u2) / s0
    stats = s0 * w1 * w1
    if include_cross_terms:
        v22 = -1.0 / ((1.0 - b) * phi) + dg * dg / (phi * phi * s0)
        w2 = (dg / (phi * s0)) * u1 + v22 * u2
        stats = stats + 2.0 * (1.0 - b) * dg * w1 * w2
    return stats
