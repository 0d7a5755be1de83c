"""Seeded Monte Carlo engine for the six result tables.

Tables T1/T2 are MSE ratios of the fused estimator to the Gaussian MLE
(indicator equation for T1, bandwidth sweep for T2); T3 is MLE bootstrap
coverage; T4 is fused-estimator coverage under the indicator equation;
T5/T6 repeat T4 with smoothed equations at bandwidths n2^-1 and n2^-1/2.

Replication r of a scenario draws its samples from generators derived
from (seed, stream tag, r).  The primary-sample tag path excludes both
the second population and n2, so every quantity computed from the
primary sample alone (notably all MLE results) is identical across
second-population variations at a fixed seed.  Replications are
embarrassingly parallel; results are buffered by replication index and
folded in index order, so outputs are byte-identical for any thread
count.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._streams import STREAM_BOOT, STREAM_X, STREAM_Y, derive_rng
from .bootstrap import DEFAULT_LEVELS, BootstrapConfig, bootstrap_ci
from .distributions import DistributionSpec, label, parse_label, sample, standard_normal
from .estimating_equations import bandwidth, median_indicator, smoothed_median
from .fusion_estimator import FusionProblem, estimate

TABLE_IDS: tuple[str, ...] = ("T1", "T2", "T3", "T4", "T5", "T6")

N1_DEFAULT: int = 10
N2_VALUES: tuple[int, ...] = (10, 20, 30)
SWEEP_EXPONENTS: tuple[float, ...] = (-1.0, -0.75, -0.5, -0.25)
THETA0: float = 0.0


def _norm(var: float) -> DistributionSpec:
    return DistributionSpec("normal", 0.0, var)


def _t(nu: int) -> DistributionSpec:
    return DistributionSpec("t", 0.0, nu)


def _de(b: float) -> DistributionSpec:
    return DistributionSpec("double_exponential", 0.0, b)


# Column sets follow the reference table layouts; the N(0,2) column
# appears in two panels of the coverage tables and is computed once per run.
RATIO_COLUMNS: tuple[DistributionSpec, ...] = (
    _norm(1.0), _norm(1.25), _norm(1.5), _norm(2.0), _norm(3.0),
    _t(3), _t(5), _de(0.5), _de(1.0), _de(1.5),
)
COVERAGE_COLUMNS: tuple[DistributionSpec, ...] = (
    _norm(1.0), _norm(2.0), _de(0.5),
    _norm(1.5), _t(3), _de(1.0),
    _norm(2.0), _t(5), _de(2.0),
)
# MLE results do not depend on the second population; the panel labels
# mirror the reference table presentation.
MLE_PANELS: tuple[tuple[str, DistributionSpec], ...] = (
    ("Normal", _norm(1.0)),
    ("t3", _t(3)),
    ("t5", _t(5)),
    ("Double Exponential", _de(1.0)),
)


@dataclass(frozen=True)
class ScenarioSpec:
    """One simulation cell; theta0 = 0 and x ~ N(0,1) throughout."""

    dist2: DistributionSpec
    n2: int
    replications: int
    metric: str  # "mse_ratio" | "coverage"
    equation_variant: str = "median"
    h_exponent: float | None = None
    bootstrap: BootstrapConfig | None = None
    seed: int = 0
    n1: int = N1_DEFAULT

    def __post_init__(self) -> None:
        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        if self.metric not in ("mse_ratio", "coverage"):
            raise ValueError(f"unknown metric {self.metric!r}")
        if self.metric == "coverage" and self.bootstrap is None:
            raise ValueError("coverage scenarios require a bootstrap config")
        if self.equation_variant == "smoothed" and self.h_exponent is None:
            raise ValueError("smoothed scenarios require h_exponent")

    def equation(self):
        if self.equation_variant == "median":
            return median_indicator()
        return smoothed_median(bandwidth(self.n2, self.h_exponent))


@dataclass(frozen=True)
class LevelStats:
    coverage: float
    avg_length: float
    coverage_stderr: float
    length_stderr: float


@dataclass(frozen=True)
class ScenarioResult:
    replications_used: int
    degenerate_count: int
    mse_rspele: float | None = None
    mse_mle: float | None = None
    ratio: float | None = None
    mc_stderr: float | None = None
    rspele_levels: dict[float, LevelStats] | None = None
    mle_levels: dict[float, LevelStats] | None = None


def _boot_seed(seed: int, r: int) -> int:
    """Per-replication bootstrap seed; path excludes dist2 and n2."""
    ss = np.random.SeedSequence(seed, spawn_key=(STREAM_BOOT, r))
    return int(ss.generate_state(1, np.uint64)[0])


def _run_indexed(worker, reps: int, threads: int) -> None:
    """Run worker(r) for r in range(reps), optionally on worker threads."""
    if threads <= 1:
        for r in range(reps):
            worker(r)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, reps // (threads * 8))
            list(pool.map(worker, range(reps), chunksize=chunk))


def run_scenario(spec: ScenarioSpec, threads: int = 1) -> ScenarioResult:
    """Aggregate the scenario's metric over seeded replications."""
    equation = spec.equation()
    reps = spec.replications
    x_spec = standard_normal()

    def draw(r: int) -> tuple[np.ndarray, np.ndarray]:
        x = sample(x_spec, spec.n1, derive_rng(spec.seed, STREAM_X, r))
        y = sample(spec.dist2, spec.n2, derive_rng(spec.seed, STREAM_Y, r))
        return x, y

    degen = np.zeros(reps, dtype=bool)

    if spec.metric == "mse_ratio":
        theta = np.empty(reps)
        mle = np.empty(reps)

        def worker(r: int) -> None:
            x, y = draw(r)
            problem = FusionProblem(x, y, equation)
            est = estimate(problem)
            theta[r] = est.theta_hat
            mle[r] = est.mle
            degen[r] = bool(est.diagnostics.get("fallback", False))

        _run_indexed(worker, reps, threads)
        err_r = (theta - THETA0) ** 2
        err_m = (mle - THETA0) ** 2
        mse_r = float(np.mean(err_r))
        mse_m = float(np.mean(err_m))
        ratio = mse_r / mse_m
        # Delta-method standard error for a ratio of paired means.
        if reps > 1:
            d = err_r - ratio * err_m
            se = float(np.sqrt(np.var(d, ddof=1) / reps) / np.mean(err_m))
        else:
            se = float("nan")
        return ScenarioResult(
            replications_used=reps,
            degenerate_count=int(degen.sum()),
            mse_rspele=mse_r,
            mse_mle=mse_m,
            ratio=float(ratio),
            mc_stderr=se,
        )

    levels = spec.bootstrap.levels
    nlev = len(levels)
    cov_r = np.empty((nlev, reps), dtype=bool)
    len_r = np.empty((nlev, reps))
    cov_m = np.empty((nlev, reps), dtype=bool)
    len_m = np.empty((nlev, reps))

    def worker(r: int) -> None:
        x, y = draw(r)
        problem = FusionProblem(x, y, equation)
        degen[r] = bool(np.ptp(x) == 0.0 or np.ptp(y) == 0.0)
        config = dataclasses.replace(spec.bootstrap, seed=_boot_seed(spec.seed, r))
        iv_r = bootstrap_ci(problem, "rspele", config)
        iv_m = bootstrap_ci(problem, "mle", config)
        for i, level in enumerate(levels):
            cov_r[i, r] = iv_r[level].contains(THETA0)
            len_r[i, r] = iv_r[level].length
            cov_m[i, r] = iv_m[level].contains(THETA0)
            len_m[i, r] = iv_m[level].length

    _run_indexed(worker, reps, threads)

    def fold(cov: np.ndarray, lens: np.ndarray) -> dict[float, LevelStats]:
        out: dict[float, LevelStats] = {}
        for i, level in enumerate(levels):
            p = float(np.mean(cov[i]))
            al = float(np.mean(lens[i]))
            p_se = float(np.sqrt(p * (1.0 - p) / reps))
            al_se = float(np.std(lens[i], ddof=1) / np.sqrt(reps)) if reps > 1 else 0.0
            out[level] = LevelStats(p, al, p_se, al_se)
        return out

    return ScenarioResult(
        replications_used=reps,
        degenerate_count=int(degen.sum()),
        rspele_levels=fold(cov_r, len_r),
        mle_levels=fold(cov_m, len_m),
    )


def load_scenario(path: str | Path) -> ScenarioSpec:
    """Parse a key = value scenario file (blank lines and # comments ok).

    Keys: dist2 (label form, e.g. DE(0,1)), n1, n2, replications,
    equation (median|smoothed), h_exponent, metric (mse_ratio|coverage),
    bootstrap_replicates, levels (comma-separated), seed.
    """
    fields: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()

    known = {
        "dist2", "n1", "n2", "replications", "equation", "h_exponent",
        "metric", "bootstrap_replicates", "levels", "seed",
    }
    unknown = set(fields) - known
    if unknown:
        raise ValueError(f"unknown scenario keys: {sorted(unknown)}")
    for required in ("dist2", "n2", "replications"):
        if required not in fields:
            raise ValueError(f"scenario file missing required key {required!r}")

    metric = fields.get("metric", "mse_ratio")
    bootstrap = None
    if metric == "coverage" or "bootstrap_replicates" in fields or "levels" in fields:
        levels = DEFAULT_LEVELS
        if "levels" in fields:
            levels = tuple(float(v) for v in fields["levels"].split(","))
        bootstrap = BootstrapConfig(
            replicates=int(fields.get("bootstrap_replicates", 200)), levels=levels
        )
    return ScenarioSpec(
        dist2=parse_label(fields["dist2"]),
        n2=int(fields["n2"]),
        replications=int(fields["replications"]),
        metric=metric,
        equation_variant=fields.get("equation", "median"),
        h_exponent=float(fields["h_exponent"]) if "h_exponent" in fields else None,
        bootstrap=bootstrap,
        seed=int(fields.get("seed", 0)),
        n1=int(fields.get("n1", N1_DEFAULT)),
    )


@dataclass(frozen=True)
class TableArtifact:
    table_id: str
    paths: dict[str, Path]
    # T1/T2: (h_exponent or None, n2, column label) -> value
    ratios: dict | None = None
    ratio_stderr: dict | None = None
    # T3-T6: (panel_index, n2, level) -> value
    coverage: dict | None = None
    avg_length: dict | None = None
    coverage_stderr: dict | None = None
    length_stderr: dict | None = None
    panel_labels: tuple[str, ...] | None = None


def _apply_reading(spec: DistributionSpec, normal_reading: str) -> DistributionSpec:
    """Map a nominal normal column N(0,s) to a sampling spec.

    The reference tables are only reproduced when s is read as a
    standard deviation (under the variance reading the wide-normal
    ratio columns come out far below the reference values), so "sd"
    is the default and "variance" is the override.  Column labels
    always show the nominal s.
    """
    if normal_reading == "variance" or spec.family != "normal":
        return spec
    return DistributionSpec("normal", spec.location, spec.scale_param**2)


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _csv_cell(text: str) -> str:
    # Distribution labels contain commas, so they need CSV quoting.
    return f'"{text}"' if "," in text else text


def _write_lines(path: Path, lines: list[str]) -> None:
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _ratio_files(
    out_dir: Path, table_id: str, blocks: list[tuple[float | None, dict]], col_labels: list[str]
) -> dict[str, Path]:
    """CSV/MD/stderr emission for the ratio tables (T1: one block; T2: four)."""
    swept = blocks[0][0] is not None
    head = ("h_exponent,n2," if swept else "n2,") + ",".join(
        _csv_cell(lab) for lab in col_labels
    )
    csv_lines = [head]
    se_lines = [head]
    md_lines: list[str] = []
    for exponent, cells in blocks:
        if swept:
            md_lines.append(f"**h = n2^{exponent:g}**")
            md_lines.append("")
        md_lines.append("| n2 | " + " | ".join(col_labels) + " |")
        md_lines.append("|" + "---:|" * (len(col_labels) + 1))
        for n2 in N2_VALUES:
            prefix = (f"{exponent:g},{n2}," if swept else f"{n2},")
            csv_lines.append(prefix + ",".join(_fmt(cells[(n2, c)][0]) for c in col_labels))
            se_lines.append(prefix + ",".join(_fmt(cells[(n2, c)][1]) for c in col_labels))
            md_lines.append(
                f"| {n2} | " + " | ".join(f"{cells[(n2, c)][0]:.3f}" for c in col_labels) + " |"
            )
        md_lines.append("")
    paths = {
        "csv": out_dir / f"{table_id}.csv",
        "md": out_dir / f"{table_id}.md",
        "stderr": out_dir / f"{table_id}_stderr.csv",
    }
    _write_lines(paths["csv"], csv_lines)
    _write_lines(paths["stderr"], se_lines)
    _write_lines(paths["md"], md_lines[:-1] if md_lines[-1] == "" else md_lines)
    return paths


def _coverage_files(
    out_dir: Path,
    table_id: str,
    panel_labels: list[str],
    levels: tuple[float, ...],
    cov: dict,
    al: dict,
    cov_se: dict,
    al_se: dict,
) -> dict[str, Path]:
    level_cols = ",".join(f"cov_{lv:.2f},al_{lv:.2f}" for lv in levels)
    head = f"panel_index,distribution,n2,{level_cols}"
    csv_lines = [head]
    se_lines = [head]
    md_lines: list[str] = []
    for p, plabel in enumerate(panel_labels):
        md_lines.append(f"**{plabel}**")
        md_lines.append("")
        md_lines.append("| n2 | " + " | ".join(f"{lv:.2f}" for lv in levels) + " |")
        md_lines.append("|" + "---:|" * (len(levels) + 1))
        for n2 in N2_VALUES:
            vals = []
            ses = []
            mds = []
            for lv in levels:
                key = (p, n2, lv)
                vals.append(f"{_fmt(cov[key])},{_fmt(al[key])}")
                ses.append(f"{_fmt(cov_se[key])},{_fmt(al_se[key])}")
                mds.append(f"{cov[key]:.3f} ({al[key]:.3f})")
            csv_lines.append(f"{p},{_csv_cell(plabel)},{n2}," + ",".join(vals))
            se_lines.append(f"{p},{_csv_cell(plabel)},{n2}," + ",".join(ses))
            md_lines.append(f"| {n2} | " + " | ".join(mds) + " |")
        md_lines.append("")
    paths = {
        "csv": out_dir / f"{table_id}.csv",
        "md": out_dir / f"{table_id}.md",
        "stderr": out_dir / f"{table_id}_stderr.csv",
    }
    _write_lines(paths["csv"], csv_lines)
    _write_lines(paths["stderr"], se_lines)
    _write_lines(paths["md"], md_lines[:-1] if md_lines[-1] == "" else md_lines)
    return paths


def reproduce_table(
    table_id: str,
    seed: int,
    reps: int | None = None,
    out_dir: str | Path = ".",
    threads: int = 1,
    boot_replicates: int | None = None,
    normal_reading: str = "sd",
) -> TableArtifact:
    """Run every scenario of one table and emit CSV/MD/stderr files."""
    if table_id not in TABLE_IDS:
        raise ValueError(f"table_id must be one of {TABLE_IDS}, got {table_id!r}")
    if normal_reading not in ("variance", "sd"):
        raise ValueError(f"normal_reading must be 'variance' or 'sd', got {normal_reading!r}")
    reps = 1000 if reps is None else reps
    out_path = Path(out_dir)
    out_path.mkdir(parents=True, exist_ok=True)
    cache: dict[ScenarioSpec, ScenarioResult] = {}

    def run(spec: ScenarioSpec) -> ScenarioResult:
        if spec not in cache:
            cache[spec] = run_scenario(spec, threads=threads)
        return cache[spec]

    if table_id in ("T1", "T2"):
        exponents: tuple[float | None, ...] = (None,) if table_id == "T1" else SWEEP_EXPONENTS
        col_specs = [_apply_reading(c, normal_reading) for c in RATIO_COLUMNS]
        col_labels = [label(c) for c in RATIO_COLUMNS]
        ratios: dict = {}
        stderrs: dict = {}
        blocks = []
        for exponent in exponents:
            cells: dict = {}
            for n2 in N2_VALUES:
                for col, lab in zip(col_specs, col_labels):
                    spec = ScenarioSpec(
                        dist2=col,
                        n2=n2,
                        replications=reps,
                        metric="mse_ratio",
                        equation_variant="median" if exponent is None else "smoothed",
                        h_exponent=exponent,
                        seed=seed,
                    )
                    res = run(spec)
                    cells[(n2, lab)] = (res.ratio, res.mc_stderr)
                    ratios[(exponent, n2, lab)] = res.ratio
                    stderrs[(exponent, n2, lab)] = res.mc_stderr
            blocks.append((exponent, cells))
        paths = _ratio_files(out_path, table_id, blocks, col_labels)
        return TableArtifact(table_id, paths, ratios=ratios, ratio_stderr=stderrs)

    boot = BootstrapConfig(replicates=200 if boot_replicates is None else boot_replicates)
    if table_id == "T3":
        panels = [(plabel, dist) for plabel, dist in MLE_PANELS]
        variant, exponent, side = "median", None, "mle"
    else:
        exponent = {"T4": None, "T5": -1.0, "T6": -0.5}[table_id]
        variant = "median" if table_id == "T4" else "smoothed"
        specs = [_apply_reading(c, normal_reading) for c in COVERAGE_COLUMNS]
        panels = [(label(c), s) for c, s in zip(COVERAGE_COLUMNS, specs)]
        side = "rspele"

    cov: dict = {}
    al: dict = {}
    cov_se: dict = {}
    al_se: dict = {}
    for p, (_, dist) in enumerate(panels):
        for n2 in N2_VALUES:
            spec = ScenarioSpec(
                dist2=dist,
                n2=n2,
                replications=reps,
                metric="coverage",
                equation_variant=variant,
                h_exponent=exponent,
                bootstrap=boot,
                seed=seed,
            )
            res = run(spec)
            stats = res.mle_levels if side == "mle" else res.rspele_levels
            for lv, st in stats.items():
                cov[(p, n2, lv)] = st.coverage
                al[(p, n2, lv)] = st.avg_length
                cov_se[(p, n2, lv)] = st.coverage_stderr
                al_se[(p, n2, lv)] = st.length_stderr
    panel_labels = [plabel for plabel, _ in panels]
    paths = _coverage_files(
        out_path, table_id, panel_labels, boot.levels, cov, al, cov_se, al_se
    )
    return TableArtifact(
        table_id,
        paths,
        coverage=cov,
        avg_length=al,
        coverage_stderr=cov_se,
        length_stderr=al_se,
        panel_labels=tuple(panel_labels),
    )
