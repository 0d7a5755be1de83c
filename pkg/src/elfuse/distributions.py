"""Second-population distribution families: sampling, pdf, cdf, quantile.

Three families are supported for the distribution-free sample (normal,
Student t, double exponential) plus the standard normal used for the
primary sample.  The normal's second parameter is a VARIANCE; the double
exponential's is the Laplace scale b in (1/2b)exp(-|y-loc|/b); Student t
is location 0, scale 1, with integer degrees of freedom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np
from scipy import stats as sp_stats

FAMILIES: tuple[str, ...] = ("normal", "t", "double_exponential")


@dataclass(frozen=True)
class DistributionSpec:
    """One member of the supported families; immutable and thread-safe."""

    family: str
    location: float
    scale_param: float

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.family == "t":
            nu = self.scale_param
            if nu < 1 or nu != int(nu):
                raise ValueError(f"t degrees of freedom must be an integer >= 1, got {nu}")
            if self.location != 0.0:
                raise ValueError("t family is fixed at location 0")
        elif self.scale_param <= 0:
            raise ValueError(f"scale_param must be > 0, got {self.scale_param}")


def _frozen(spec: DistributionSpec):
    """scipy frozen distribution carrying pdf/cdf/ppf for a DistributionSpec."""
    if spec.family == "normal":
        return sp_stats.norm(loc=spec.location, scale=np.sqrt(spec.scale_param))
    if spec.family == "t":
        return sp_stats.t(df=int(spec.scale_param))
    return sp_stats.laplace(loc=spec.location, scale=spec.scale_param)


def sample(spec: DistributionSpec, n: int, rng: np.random.Generator) -> np.ndarray:
    """n i.i.d. draws; deterministic given the generator state.

    Draw methods consume generator state value-by-value, so a size-m
    prefix of a size-n draw (m < n) equals the size-m draw from an
    equally seeded generator.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if spec.family == "normal":
        return spec.location + np.sqrt(spec.scale_param) * rng.standard_normal(n)
    if spec.family == "t":
        return rng.standard_t(int(spec.scale_param), size=n)
    return rng.laplace(loc=spec.location, scale=spec.scale_param, size=n)


def pdf(spec: DistributionSpec, y):
    return _frozen(spec).pdf(y)


def cdf(spec: DistributionSpec, y):
    return _frozen(spec).cdf(y)


def quantile(spec: DistributionSpec, p):
    p_arr = np.asarray(p, dtype=float)
    if np.any((p_arr <= 0.0) | (p_arr >= 1.0)):
        raise ValueError("quantile level must be in (0, 1)")
    return _frozen(spec).ppf(p)


def median(spec: DistributionSpec) -> float:
    """Exact median: the location for all three symmetric families."""
    return float(spec.location)


def label(spec: DistributionSpec) -> str:
    """Column label, e.g. N(0,1.25) / t3 / DE(0,0.5)."""
    loc = f"{spec.location:g}"
    sc = f"{spec.scale_param:g}"
    if spec.family == "normal":
        return f"N({loc},{sc})"
    if spec.family == "t":
        return f"t{int(spec.scale_param)}"
    return f"DE({loc},{sc})"


def parse_label(text: str) -> DistributionSpec:
    """Inverse of label(); accepts N(loc,var), t<nu>, DE(loc,b)."""
    m = re.fullmatch(r"\s*N\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)\s*", text)
    if m:
        return DistributionSpec("normal", float(m.group(1)), float(m.group(2)))
    m = re.fullmatch(r"\s*DE\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)\s*", text)
    if m:
        return DistributionSpec("double_exponential", float(m.group(1)), float(m.group(2)))
    m = re.fullmatch(r"\s*t\s*(\d+)\s*", text)
    if m:
        return DistributionSpec("t", 0.0, float(m.group(1)))
    raise ValueError(f"unrecognized distribution label {text!r}")


def standard_normal() -> DistributionSpec:
    return DistributionSpec("normal", 0.0, 1.0)
