"""Inner empirical-likelihood problem at a fixed candidate center.

Given the estimating-function values g_1..g_n2, find the multiplier
lambda with sum g_i/(1 + lambda*g_i) = 0; the maximizing weights are
then p_i = 1/(n2*(1 + lambda*g_i)) and the log-EL penalty (the term
subtracted from the fused objective) is sum log(1 + lambda*g_i).
Infeasibility (zero outside the convex hull of the g values) is a +inf
penalty sentinel, not an error, so outer searches can treat infeasible
regions as dominated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _fast


@dataclass(frozen=True)
class ELSolution:
    lam: float
    weights: np.ndarray
    penalty: float
    feasible: bool
    iterations: int


_INFEASIBLE_WEIGHTS = np.empty(0)


def solve_lambda(gvals) -> ELSolution:
    """Solve the inner problem for an arbitrary vector of g values."""
    g = np.ascontiguousarray(gvals, dtype=float)
    if g.size == 0:
        raise ValueError("gvals must be nonempty")
    if not np.all(np.isfinite(g)):
        raise ValueError("gvals must be finite")
    lam, penalty, feasible, iters = _fast.el_solve(g)
    if not feasible:
        return ELSolution(np.nan, _INFEASIBLE_WEIGHTS, np.inf, False, int(iters))
    weights = 1.0 / (g.size * (1.0 + lam * g))
    return ELSolution(float(lam), weights, float(penalty), True, int(iters))


def indicator_closed_form(n2: int, k: int) -> ELSolution:
    """Exact solution when g takes only the values +-1/2.

    k is the number of +1/2 entries; the weight is 1/(2k) on each of
    those and 1/(2(n2-k)) on the rest.  k in {0, n2} is infeasible.
    """
    if not 0 <= k <= n2:
        raise ValueError(f"k must be in [0, n2], got k={k}, n2={n2}")
    if n2 < 1:
        raise ValueError(f"n2 must be >= 1, got {n2}")
    if k == 0 or k == n2:
        return ELSolution(np.nan, _INFEASIBLE_WEIGHTS, np.inf, False, 0)
    lam = 2.0 * (2.0 * k - n2) / n2
    penalty = float(_fast.indicator_penalty(n2, k))
    weights = np.full(n2, 1.0 / (2.0 * (n2 - k)))
    weights[:k] = 1.0 / (2.0 * k)
    return ELSolution(lam, weights, penalty, True, 0)
