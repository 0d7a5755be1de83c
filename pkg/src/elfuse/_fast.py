"""Compiled numeric kernels shared by the solver, estimators, and bootstrap.

Everything here is nopython-compiled, allocation-light, and releases the
GIL so the simulation harness can run replications on worker threads.
Wrappers in the public modules own validation and result packaging; these
functions assume clean inputs.
"""

from __future__ import annotations

import numpy as np
from numba import njit

# Tie convention makes intervals right-open; suprema at the open end are
# approached within this offset so the returned point stays feasible.
OPEN_OFFSET: float = 1e-12

_SQRT5: float = float(np.sqrt(5.0))
_NEG_INF: float = float(-np.inf)


@njit(cache=True, nogil=True)
def el_solve(g):
    """Lagrange multiplier for the constraint sum p_i g_i = 0.

    Returns (lam, penalty, feasible, iterations) where penalty =
    sum log(1 + lam*g_i).  Solves R(lam) = sum g_i/(1+lam*g_i) = 0 by
    safeguarded Newton on the strictly decreasing R, starting inside the
    bracket where every 1+lam*g_i >= 1/n (the solution always satisfies
    the bound strictly because every weight is < 1).
    """
    n = g.size
    gmin = g[0]
    gmax = g[0]
    for i in range(1, n):
        if g[i] < gmin:
            gmin = g[i]
        if g[i] > gmax:
            gmax = g[i]
    if gmin == 0.0 and gmax == 0.0:
        return 0.0, 0.0, True, 0
    if not (gmin < 0.0 < gmax):
        return np.nan, np.inf, False, 0

    margin = 1.0 - 1.0 / n
    lo = -margin / gmax
    hi = margin / (-gmin)
    lam = 0.0
    iters = 0
    tol = 1e-12 * n
    converged = False
    for _ in range(100):
        iters += 1
        r = 0.0
        dr = 0.0
        for i in range(n):
            t = g[i] / (1.0 + lam * g[i])
            r += t
            dr -= t * t
        if abs(r) < tol:
            converged = True
            break
        if r > 0.0:
            lo = lam
        else:
            hi = lam
        step = -r / dr
        cand = lam + step
        if cand <= lo or cand >= hi:
            cand = 0.5 * (lo + hi)
        lam = cand
    if not converged:
        # Bisection rescue: R is monotone, so the bracket is valid.
        while hi - lo > 1e-14:
            iters += 1
            mid = 0.5 * (lo + hi)
            r = 0.0
            for i in range(n):
                r += g[i] / (1.0 + mid * g[i])
            if r > 0.0:
                lo = mid
            else:
                hi = mid
        lam = 0.5 * (lo + hi)

    penalty = 0.0
    for i in range(n):
        penalty += np.log(1.0 + lam * g[i])
    return lam, penalty, True, iters


@njit(cache=True, nogil=True)
def indicator_penalty(n2, k):
    """Closed-form penalty when g takes only the values +-1/2; k = #{+1/2}."""
    if k <= 0 or k >= n2:
        return np.inf
    return k * np.log(2.0 * k / n2) + (n2 - k) * np.log(2.0 * (n2 - k) / n2)


@njit(cache=True, nogil=True)
def gauss_part(theta, n1, xbar, s1sq):
    """Gaussian log likelihood at (theta, plug-in s1sq), constants included."""
    c = -0.5 * n1 * (np.log(2.0 * np.pi * s1sq) + 1.0)
    d = xbar - theta
    return c - 0.5 * n1 * d * d / s1sq


@njit(cache=True, nogil=True)
def indicator_best(ys, n1, xbar, s1sq):
    """Exact global maximizer of the indicator-equation objective.

    ys must be sorted ascending.  On [ys[j], ys[j+1]) the count
    k = #{y <= theta} equals j+1, so the penalty is piecewise constant
    and the per-interval supremum is the clamped Gaussian peak; the best
    interval wins.  Unbounded tails have k in {0, n2} and are infeasible.

    Returns (theta, lam, objective, interval_index, distinct); distinct
    < 2 signals the degenerate all-tied case (no feasible interval).
    """
    n2 = ys.size
    best_obj = _NEG_INF
    best_theta = np.nan
    best_lam = np.nan
    best_j = -1
    distinct = 1 if n2 > 0 else 0
    for j in range(n2 - 1):
        lo = ys[j]
        hi = ys[j + 1]
        if hi <= lo:
            continue
        distinct += 1
        k = j + 1
        pen = indicator_penalty(n2, k)
        theta = xbar
        cap = hi - OPEN_OFFSET
        if theta > cap:
            theta = cap
        if theta < lo:
            theta = lo
        obj = gauss_part(theta, n1, xbar, s1sq) - pen
        if obj > best_obj:
            best_obj = obj
            best_theta = theta
            best_lam = 2.0 * (2.0 * k - n2) / n2
            best_j = j
    return best_theta, best_lam, best_obj, best_j, distinct


@njit(cache=True, nogil=True)
def psi(u):
    """CDF of the unit-second-moment Epanechnikov kernel (exact cubic)."""
    if u <= -_SQRT5:
        return 0.0
    if u >= _SQRT5:
        return 1.0
    return 0.5 + (3.0 / (4.0 * _SQRT5)) * (u - u * u * u / 15.0)


@njit(cache=True, nogil=True)
def smoothed_objective(theta, y, h, n1, xbar, s1sq, gbuf):
    """Smoothed-equation objective at theta; -inf when infeasible."""
    n2 = y.size
    for i in range(n2):
        gbuf[i] = psi((theta - y[i]) / h) - 0.5
    lam, pen, feasible, _ = el_solve(gbuf)
    if not feasible:
        return _NEG_INF, np.nan
    return gauss_part(theta, n1, xbar, s1sq) - pen, lam


@njit(cache=True, nogil=True)
def smoothed_best(y, h, n1, xbar, s1sq, lo, hi, ngrid):
    """Grid scan plus golden-section refinement of the smoothed objective.

    Probes ngrid equally spaced points on [lo, hi], then refines inside
    the bracket around the best grid point to width 1e-10.  The returned
    point is the best point probed anywhere, so its objective is >= the
    objective at every grid point.

    Returns (theta, lam, objective, grid_index, refine_iters); objective
    = -inf means every probe was infeasible.
    """
    gbuf = np.empty(y.size)
    best_obj = _NEG_INF
    best_theta = np.nan
    best_lam = np.nan
    best_i = -1
    step = (hi - lo) / (ngrid - 1)
    for i in range(ngrid):
        theta = lo + step * i
        obj, lam = smoothed_objective(theta, y, h, n1, xbar, s1sq, gbuf)
        if obj > best_obj:
            best_obj = obj
            best_theta = theta
            best_lam = lam
            best_i = i
    if best_i < 0:
        return np.nan, np.nan, _NEG_INF, -1, 0

    a = lo + step * (best_i - 1) if best_i > 0 else lo
    b = lo + step * (best_i + 1) if best_i < ngrid - 1 else hi
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, lc = smoothed_objective(c, y, h, n1, xbar, s1sq, gbuf)
    fd, ld = smoothed_objective(d, y, h, n1, xbar, s1sq, gbuf)
    if fc > best_obj:
        best_obj, best_theta, best_lam = fc, c, lc
    if fd > best_obj:
        best_obj, best_theta, best_lam = fd, d, ld
    iters = 0
    while b - a > 1e-10 and iters < 200:
        iters += 1
        if fc >= fd:
            b = d
            d = c
            fd = fc
            c = b - invphi * (b - a)
            fc, lc = smoothed_objective(c, y, h, n1, xbar, s1sq, gbuf)
            if fc > best_obj:
                best_obj, best_theta, best_lam = fc, c, lc
        else:
            a = c
            c = d
            fc = fd
            d = a + invphi * (b - a)
            fd, ld = smoothed_objective(d, y, h, n1, xbar, s1sq, gbuf)
            if fd > best_obj:
                best_obj, best_theta, best_lam = fd, d, ld
    return best_theta, best_lam, best_obj, best_i, iters


@njit(cache=True, nogil=True)
def plugin_stats(x):
    """(mean, MLE variance) of the primary sample, two-pass for accuracy."""
    n = x.size
    s = 0.0
    for i in range(n):
        s += x[i]
    mean = s / n
    v = 0.0
    for i in range(n):
        d = x[i] - mean
        v += d * d
    return mean, v / n


@njit(cache=True, nogil=True)
def boot_indicator(x, y, ix, iy, out, ok):
    """Indicator-equation estimates for each resample row of (ix, iy).

    ok[b] = False marks rows needing a redraw (zero plug-in variance or
    all-tied y, where the estimator would fall back instead of resample).
    """
    nb = ix.shape[0]
    n1 = ix.shape[1]
    n2 = iy.shape[1]
    xb = np.empty(n1)
    yb = np.empty(n2)
    for b in range(nb):
        for i in range(n1):
            xb[i] = x[ix[b, i]]
        xbar, s1sq = plugin_stats(xb)
        if s1sq <= 0.0:
            # Degenerate primary resample: the estimator falls back to the
            # mean rather than failing, mirroring the point-estimate path.
            ok[b] = True
            out[b] = xbar
            continue
        for i in range(n2):
            yb[i] = y[iy[b, i]]
        yb.sort()
        theta, _, obj, _, distinct = indicator_best(yb, n1, xbar, s1sq)
        if distinct < 2:
            ok[b] = True
            out[b] = xbar
        elif obj == _NEG_INF:
            ok[b] = False
            out[b] = np.nan
        else:
            ok[b] = True
            out[b] = theta


@njit(cache=True, nogil=True)
def boot_smoothed(x, y, h, ix, iy, ngrid, out, ok):
    """Smoothed-equation estimates for each resample row of (ix, iy)."""
    nb = ix.shape[0]
    n1 = ix.shape[1]
    n2 = iy.shape[1]
    xb = np.empty(n1)
    yb = np.empty(n2)
    for b in range(nb):
        for i in range(n1):
            xb[i] = x[ix[b, i]]
        xbar, s1sq = plugin_stats(xb)
        if s1sq <= 0.0:
            ok[b] = True
            out[b] = xbar
            continue
        ymin = y[iy[b, 0]]
        ymax = ymin
        for i in range(n2):
            yb[i] = y[iy[b, i]]
            if yb[i] < ymin:
                ymin = yb[i]
            if yb[i] > ymax:
                ymax = yb[i]
        if ymax <= ymin:
            # All-tied secondary resample: fall back like the estimator does.
            ok[b] = True
            out[b] = xbar
            continue
        sd3 = 3.0 * np.sqrt(s1sq)
        lo = min(xb.min(), ymin) - sd3
        hi = max(xb.max(), ymax) + sd3
        theta, _, obj, _, _ = smoothed_best(yb, h, n1, xbar, s1sq, lo, hi, ngrid)
        if obj == _NEG_INF:
            ok[b] = False
            out[b] = np.nan
        else:
            ok[b] = True
            out[b] = theta
