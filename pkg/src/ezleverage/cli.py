"""Command-line front end.

Commands: ``solve``, ``benchmark``, ``regions``, ``validate``, ``sweep`` and
``print-default-config``. Every command reads one YAML file whose sections
override the defaults printed by ``print-default-config``.

Exit codes: 0 when every requested check passed, 1 when a validation check
failed, 2 on configuration or solver errors.
"""

from __future__ import annotations

import argparse
import copy
import csv
import json
import logging
import sys
import warnings
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import yaml

from . import bsde_mc, closed_form, hjb, regions
from .errors import ConstraintNotBinding, EZError, NotConverged, StructureViolation
from .model import Linear, ModelParams, PiecewiseLinear, Unbounded
from .report import ValidationReport, _plain

log = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2

DEFAULT_CONFIG = {
    "market": {"mu": 0.08, "sigma": 0.2, "r": 0.02},
    "preferences": {"R": 0.8, "S": 0.5, "delta": 0.1},
    "leverage": {"type": "linear", "k": 1.0, "L": 0.0},
    "grid": {"x_min": 1.0e-3, "x_max": 50.0, "M": 2000, "spacing": "log"},
    "solver": {
        "tol_value": 1.0e-10,
        "tol_residual": 1.0e-8,
        "max_iterations": 200,
        "damping": 1.0,
        "linearize_aggregator": True,
        "scheme": "upwind",
        "lower_boundary": "homogeneous",
        "upper_boundary": "robin",
    },
    "mc": {
        "enabled": True,
        "n_paths": 20000,
        "horizon": 120.0,
        "dt": 0.24,
        "seed": 0,
        "picard_iterations": 50,
        "picard_tol": 1.0e-10,
        "regression_degree": 3,
        "truncation_m": None,
        "x0": 1.0,
        "bootstrap_resamples": 400,
        "dump_paths": 0,
    },
    "sweep": {"param": "L", "values": [0.25, 0.5, 1.0], "x0": 1.0},
    "output_dir": "ezleverage-out",
    "emit_plots": False,
    "testing": {"kappa_sign": 1},
}

SWEEPABLE = ("k", "L", "R", "S", "delta", "mu", "sigma")
SOLUTION_HEADER = ["x", "J", "Jx", "Jxx", "c_star", "pi_star", "region", "residual"]


class ConfigError(EZError, ValueError):
    pass


# -- configuration -----------------------------------------------------------


def _coerce(value):
    # YAML 1.1 reads 1e-10 (no dot) as a string
    if isinstance(value, str):
        try:
            return float(value)
        except ValueError:
            return value
    if isinstance(value, dict):
        return {k: _coerce(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_coerce(v) for v in value]
    return value


def _merge(base, override):
    out = copy.deepcopy(base)
    for key, val in (override or {}).items():
        if key not in out:
            raise ConfigError(f"unknown config key {key!r}")
        if isinstance(out[key], dict) and key != "leverage":
            if not isinstance(val, dict):
                raise ConfigError(f"section {key!r} must be a mapping")
            out[key] = _merge(out[key], val)
        else:
            out[key] = val
    return out


def build_leverage(spec: dict):
    kind = str(spec.get("type", "linear")).lower()
    if kind == "linear":
        return Linear(float(spec.get("k", 0.0)), float(spec.get("L", 0.0)))
    if kind in ("piecewise", "piecewise_linear"):
        return PiecewiseLinear(tuple(spec["thresholds"]), tuple(spec["slopes"]), float(spec.get("offset", 0.0)))
    if kind == "unbounded":
        return Unbounded()
    raise ConfigError(f"unknown leverage type {kind!r}")


@dataclass(frozen=True)
class RunConfig:
    params: ModelParams
    leverage: object
    grid: hjb.WealthGrid
    solver: hjb.SolverConfig
    mc: bsde_mc.MCConfig
    mc_enabled: bool
    dump_paths: int
    sweep: dict
    output_dir: Path
    emit_plots: bool
    kappa_sign: float
    raw: dict = field(compare=False, default_factory=dict)

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        """Validate every section through its owning module."""
        cfg = _coerce(_merge(DEFAULT_CONFIG, raw))
        m, p = cfg["market"], cfg["preferences"]
        params = ModelParams.create(float(m["mu"]), float(m["sigma"]), float(m["r"]),
                                    float(p["R"]), float(p["S"]), float(p["delta"]))
        lev = build_leverage(cfg["leverage"])
        g = cfg["grid"]
        grid = hjb.build_grid(float(g["x_min"]), float(g["x_max"]), g["M"], str(g["spacing"]))
        hjb.check_solver_grid(grid)
        s = dict(cfg["solver"])
        s["max_iterations"] = int(s["max_iterations"])
        solver = hjb.SolverConfig(**s)
        mc_raw = dict(cfg["mc"])
        enabled = bool(mc_raw.pop("enabled"))
        dump = int(mc_raw.pop("dump_paths"))
        for key in ("n_paths", "seed", "picard_iterations", "regression_degree", "bootstrap_resamples"):
            mc_raw[key] = int(mc_raw[key])
        mc = bsde_mc.MCConfig(**mc_raw)
        if enabled:
            mc.check(params)
        sign = float(cfg["testing"].get("kappa_sign", 1))
        if sign not in (1.0, -1.0):
            raise ConfigError("testing.kappa_sign must be 1 or -1")
        return cls(params, lev, grid, solver, mc, enabled, dump, dict(cfg["sweep"]), Path(cfg["output_dir"]),
                   bool(cfg["emit_plots"]), sign, cfg)

    @classmethod
    def load(cls, path: str | None) -> "RunConfig":
        raw = {}
        if path:
            with open(path, encoding="utf-8") as fh:
                raw = yaml.safe_load(fh) or {}
            if not isinstance(raw, dict):
                raise ConfigError("config file must hold a mapping")
        return cls.from_dict(raw)


@dataclass
class RunArtifacts:
    solution_csv: Path | None = None
    regions_csv: Path | None = None
    report: Path | None = None
    plots: list = field(default_factory=list)
    exit_code: int = EXIT_OK
    extra: dict = field(default_factory=dict)


# -- output helpers ----------------------------------------------------------


def fmt(v) -> str:
    """12 significant digits in positional notation."""
    if isinstance(v, str):
        return v
    v = float(v)
    if not np.isfinite(v):
        return "nan" if v != v else ("inf" if v > 0 else "-inf")
    return np.format_float_positional(v, precision=12, unique=False, fractional=False, trim="-")


def _write_csv(path: Path, header, rows) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])
    return path


def _write_json(path: Path, payload) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_plain(payload), fh, indent=2, sort_keys=True)
        fh.write("\n")
    return path


def write_solution_csv(path: Path, sol: hjb.SolutionField) -> Path:
    rows = zip(sol.x, sol.J, sol.Jx, sol.Jxx, sol.c_star, sol.pi_star, sol.region, sol.residual)
    return _write_csv(path, SOLUTION_HEADER, rows)


def read_solution_csv(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    out = {k: np.array([float(r[k]) for r in rows]) for k in SOLUTION_HEADER if k != "region"}
    out["region"] = np.array([r["region"] for r in rows])
    return out


def _solve(cfg: RunConfig, allow_unconverged: bool, params=None, leverage=None, grid=None):
    params = params or cfg.params
    leverage = leverage if leverage is not None else cfg.leverage
    try:
        return hjb.policy_iteration_solve(params, leverage, grid or cfg.grid, cfg.solver)
    except NotConverged as exc:
        if allow_unconverged and exc.field is not None:
            warnings.warn(str(exc))
            return exc.field
        raise


def _solver_summary(sol):
    hist = sol.diagnostics.get("history", [])
    last = hist[-1] if hist else {}
    return {"converged": sol.converged, "iterations": sol.iterations, "last_change": last.get("change"),
            "last_residual": last.get("residual"), "scheme": sol.diagnostics.get("scheme"),
            "lower_boundary": sol.diagnostics.get("lower_boundary")}


def _plot(cfg: RunConfig, sol, leverage, name: str) -> list:
    """Best-effort static plots; any failure is downgraded to a warning."""
    if not cfg.emit_plots:
        return []
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        x = sol.x
        fig, axes = plt.subplots(2, 2, figsize=(10, 7))
        axes[0, 0].plot(x, sol.J)
        axes[0, 0].set_title("value J(x)")
        axes[0, 1].plot(x, sol.c_star)
        axes[0, 1].set_title("consumption c*(x)")
        axes[1, 0].plot(x, sol.pi_star, label="pi*")
        if not isinstance(leverage, Unbounded):
            axes[1, 0].plot(x, leverage(x), "--", label="g")
        axes[1, 0].legend()
        axes[1, 0].set_title("portfolio")
        ind = regions.binding_indicator(sol, leverage).values
        axes[1, 1].plot(x, np.where(np.isfinite(ind), ind, np.nan))
        axes[1, 1].axhline(0.0, color="k", lw=0.5)
        for lo, hi, label in regions.region_map(sol, leverage).intervals:
            if label == hjb.CONSTRAINED:
                for ax in axes.flat:
                    ax.axvspan(lo, hi, color="0.9")
        axes[1, 1].set_title("pi_M - g")
        for ax in axes.flat:
            ax.set_xscale("log" if x[0] > 0 else "linear")
        fig.tight_layout()
        path = cfg.output_dir / f"{name}.png"
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, dpi=100)
        plt.close(fig)
        return [path]
    except Exception as exc:  # plotting never changes the outcome
        warnings.warn(f"plotting failed: {exc}")
        return []


# -- commands ----------------------------------------------------------------


def cmd_solve(cfg: RunConfig, allow_unconverged: bool = False) -> RunArtifacts:
    sol = _solve(cfg, allow_unconverged)
    out = cfg.output_dir
    art = RunArtifacts(solution_csv=write_solution_csv(out / "solution.csv", sol))
    rep = {"command": "solve", "config": cfg.raw, "solver": _solver_summary(sol),
           "max_abs_residual": float(np.max(np.abs(sol.residual[1:-1])))}
    art.report = _write_json(out / "report.json", rep)
    art.plots = _plot(cfg, sol, cfg.leverage, "solution")
    art.exit_code = EXIT_OK if sol.converged else EXIT_FAILED
    return art


def cmd_benchmark(cfg: RunConfig) -> RunArtifacts:
    params, x = cfg.params, cfg.grid.nodes
    ez = closed_form.benchmark_solution(params)
    lo, hi = closed_form.value_bounds(x, params)
    header = ["x", "J_ez", "c_ez", "pi_ez", "bond_only", "lower", "upper"]
    cols = [x, ez.value(x), ez.consumption(x), ez.portfolio(x), closed_form.bond_only_utility(x, params), lo, hi]
    summary = {"eta": params.eta, "nu": params.nu, "rho": params.rho, "kappa": params.kappa,
               "merton_ratio": params.merton_ratio}
    lev = cfg.leverage
    k = lev.k if isinstance(lev, Linear) else None
    if k is not None and k > 0:
        try:
            p0 = closed_form.proportional_solution(k, params)
        except ConstraintNotBinding:
            summary["constraint"] = f"not binding: k={k} >= Merton ratio {params.merton_ratio:.6g}"
        else:
            summary.update(k=k, eta0=p0.consumption_rate, lambda0=p0.value_coefficient,
                           constraint="binding")
            header += ["J0", "c0", "pi0"]
            cols += [p0.value(x), p0.consumption(x), p0.portfolio(x)]
    out = cfg.output_dir
    art = RunArtifacts()
    art.extra["benchmark_csv"] = _write_csv(out / "benchmark.csv", header, zip(*cols))
    art.report = _write_json(out / "report.json", {"command": "benchmark", "config": cfg.raw, "summary": summary})
    for key, val in summary.items():
        print(f"{key} = {fmt(val) if isinstance(val, float) else val}")
    return art


def region_report(sol, params, leverage) -> tuple[ValidationReport, regions.RegionMap]:
    """Region structure checks for the configured leverage family."""
    rep = ValidationReport("regions")
    rmap = regions.region_map(sol, leverage)
    labels = [lab for _, _, lab in rmap.intervals]
    ind = regions.binding_indicator(sol, leverage)
    match = bool(np.all(ind.labels() == sol.region)) if not isinstance(leverage, Unbounded) \
        else bool(np.all(sol.region == hjb.UNCONSTRAINED))
    # crossings outside the cases with a known structure are reported, not asserted
    rep.add("labels_match_field", match, crossings=len(rmap.boundaries),
            x_star=[b.x_star for b in rmap.boundaries])
    if isinstance(leverage, Unbounded) or (isinstance(leverage, Linear) and leverage.k >= params.merton_ratio):
        rep.add("all_unconstrained", labels == [hjb.UNCONSTRAINED], intervals=len(labels))
    elif isinstance(leverage, Linear) and leverage.k == 0 and leverage.L > 0:
        try:
            b = regions.find_free_boundary(sol, leverage)[0]
            rep.add("single_free_boundary", labels == [hjb.UNCONSTRAINED, hjb.CONSTRAINED], x_star=b.x_star,
                    smooth_fit_residual=b.smooth_fit_residual)
        except StructureViolation as exc:
            rep.add("single_free_boundary", False, error=str(exc))
    elif isinstance(leverage, Linear) and leverage.L == 0:
        rep.add("all_constrained", labels == [hjb.CONSTRAINED], intervals=len(labels))
    elif isinstance(leverage, Linear):
        rep.add("first_interval_unconstrained", labels[0] == hjb.UNCONSTRAINED, first=labels[0])
    return rep, rmap


def _write_regions(out: Path, rmap) -> Path:
    _write_csv(out / "boundaries.csv", ["x_star", "bound", "smooth_fit_residual", "direction"],
               [(b.x_star, b.bound, b.smooth_fit_residual, b.direction) for b in rmap.boundaries])
    return _write_csv(out / "regions.csv", ["interval_lo", "interval_hi", "label"], rmap.intervals)


def cmd_regions(cfg: RunConfig, allow_unconverged: bool = False) -> RunArtifacts:
    sol = _solve(cfg, allow_unconverged)
    rep, rmap = region_report(sol, cfg.params, cfg.leverage)
    out = cfg.output_dir
    art = RunArtifacts(regions_csv=_write_regions(out, rmap))
    art.report = _write_json(out / "report.json", {"command": "regions", "config": cfg.raw,
                                                   "solver": _solver_summary(sol), "report": rep.to_dict()})
    art.plots = _plot(cfg, sol, cfg.leverage, "regions")
    print("\n".join(rep.lines()))
    art.exit_code = EXIT_OK if rep.passed else EXIT_FAILED
    return art


def _oracle_check(sol, params, leverage) -> ValidationReport:
    rep = ValidationReport("oracle")
    x = sol.x
    sel = x > 0
    oracle = None
    if isinstance(leverage, Unbounded) or (isinstance(leverage, Linear) and leverage.k >= params.merton_ratio):
        oracle = closed_form.benchmark_solution(params)
    elif isinstance(leverage, Linear) and leverage.L == 0 and leverage.k > 0:
        oracle = closed_form.proportional_solution(leverage.k, params)
    if oracle is None:
        rep.skip("closed_form", "no closed form for this leverage bound")
        return rep
    err = float(np.max(np.abs(sol.J[sel] / oracle.value(x[sel]) - 1)))
    rep.add("closed_form", err <= 1e-3, kind=oracle.kind, max_rel_error=err, tol=1e-3)
    return rep


def _homogeneity(cfg: RunConfig, sol, allow_unconverged) -> ValidationReport:
    lev = cfg.leverage
    if not (isinstance(lev, Linear) and lev.L > 0):
        rep = ValidationReport("homogeneity")
        rep.skip("scaling", "needs Linear with L > 0")
        return rep

    def solve_fn(k, L, m):
        if m == 1.0 and L == lev.L:
            return sol
        return _solve(cfg, allow_unconverged, leverage=Linear(k, L), grid=cfg.grid.scaled(m))

    return regions.homogeneity_check(solve_fn, cfg.params, lev.k, lev.L, [(1.0, 2.0)], 3 * cfg.solver.tol_value)


def cmd_validate(cfg: RunConfig, allow_unconverged: bool = False) -> RunArtifacts:
    sol = _solve(cfg, allow_unconverged)
    params, lev = cfg.params, cfg.leverage
    # test hook: checks see a flipped risk-premium term
    check_params = params
    if cfg.kappa_sign < 0:
        check_params = replace(params)
        object.__setattr__(check_params, "derived", replace(params.derived, kappa=-params.kappa))

    full = ValidationReport("validate")
    full.extend(hjb.check_solution(sol, params, lev), "solution")
    full.extend(_oracle_check(sol, params, lev), "oracle")
    rrep, rmap = region_report(sol, params, lev)
    full.extend(rrep, "regions")
    full.extend(regions.check_region_odes(sol, rmap, check_params, lev), "region_odes")
    if isinstance(lev, Linear) and lev.k > 0 and lev.L > 0:
        full.extend(regions.check_bound_chains(sol, params, lev), "bound_chains")
    else:
        full.skip("bound_chains", "needs Linear(k > 0, L > 0)")
    full.extend(_homogeneity(cfg, sol, allow_unconverged), "homogeneity")
    mc_summary = None
    if cfg.mc_enabled:
        full.extend(bsde_mc.validate_solution(sol, params, lev, cfg.mc), "mc")
        if cfg.dump_paths:
            pol = bsde_mc.PolicyField.from_solution(sol)
            paths = bsde_mc.simulate_wealth(pol, cfg.mc.x0, params, None if isinstance(lev, Unbounded) else lev, cfg.mc)
            cfg.output_dir.mkdir(parents=True, exist_ok=True)
            paths.to_csv(cfg.output_dir / "paths.csv", pol, cfg.dump_paths)
        mc_summary = {"n_paths": cfg.mc.n_paths, "seed": cfg.mc.seed}
    else:
        full.skip("mc", "Monte Carlo disabled")

    out = cfg.output_dir
    art = RunArtifacts(solution_csv=write_solution_csv(out / "solution.csv", sol),
                       regions_csv=_write_regions(out, rmap))
    art.report = _write_json(out / "report.json", {"command": "validate", "config": cfg.raw,
                                                   "solver": _solver_summary(sol), "mc": mc_summary,
                                                   "report": full.to_dict()})
    art.plots = _plot(cfg, sol, lev, "validate")
    print("\n".join(full.lines()))
    art.exit_code = EXIT_OK if full.passed and sol.converged else EXIT_FAILED
    return art


def cmd_sweep(cfg: RunConfig, allow_unconverged: bool = False) -> RunArtifacts:
    spec = cfg.sweep
    name = spec.get("param")
    values = list(spec.get("values") or [])
    if name not in SWEEPABLE:
        raise ConfigError(f"sweep param must be one of {SWEEPABLE} (got {name!r})")
    if not values:
        raise ConfigError("sweep needs a non-empty value list")
    x0 = float(spec.get("x0", 1.0))
    rows, runs = [], []
    failed = False
    for value in values:
        value = float(value)
        try:
            params, lev = cfg.params, cfg.leverage
            if name in ("k", "L"):
                if not isinstance(lev, Linear):
                    raise ConfigError("sweeping k or L needs a linear leverage bound")
                lev = replace(lev, **{name: value})
            else:
                params = params.replace(**{name: value})
            sol = _solve(cfg, allow_unconverged, params=params, leverage=lev)
            bounds = regions.region_map(sol, lev).boundaries
            x_star = bounds[0].x_star if bounds else float("nan")
            row = (name, value, x_star, sol.value_at(x0), float(np.interp(x0, sol.x, sol.c_star)),
                   float(np.interp(x0, sol.x, sol.pi_star)))
            run_dir = cfg.output_dir / "runs" / f"{name}={fmt(value)}"
            write_solution_csv(run_dir / "solution.csv", sol)
            runs.append({"value": value, "ok": True, "converged": sol.converged, "crossings": len(bounds)})
        except (EZError, ValueError) as exc:
            failed = True
            row = (name, value, float("nan"), float("nan"), float("nan"), float("nan"))
            runs.append({"value": value, "ok": False, "error": f"{type(exc).__name__}: {exc}"})
        rows.append(row)
    out = cfg.output_dir
    art = RunArtifacts()
    art.extra["sweep_csv"] = _write_csv(out / "sweep.csv",
                                        ["param", "value", "x_star", "J_at_x0", "c_star_at_x0", "pi_star_at_x0"], rows)
    xs = [r[2] for r in rows if np.isfinite(r[2])]
    Js = [r[3] for r in rows if np.isfinite(r[3])]
    observed = {"x_star_increasing": bool(len(xs) > 1 and np.all(np.diff(xs) > 0)),
                "J_at_x0_nondecreasing": bool(len(Js) > 1 and np.all(np.diff(Js) >= 0))}
    art.report = _write_json(out / "report.json", {"command": "sweep", "config": cfg.raw, "runs": runs,
                                                   "observed": observed})
    if cfg.emit_plots:
        art.plots = _plot_sweep(cfg, rows, name)
    art.exit_code = EXIT_FAILED if failed else EXIT_OK
    return art


def _plot_sweep(cfg, rows, name):
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        v = [r[1] for r in rows]
        fig, axes = plt.subplots(1, 2, figsize=(9, 3.5))
        axes[0].plot(v, [r[2] for r in rows], "o-")
        axes[0].set_title("x*")
        axes[1].plot(v, [r[3] for r in rows], "o-")
        axes[1].set_title("J(x0)")
        for ax in axes:
            ax.set_xlabel(name)
        fig.tight_layout()
        path = cfg.output_dir / "sweep.png"
        fig.savefig(path, dpi=100)
        plt.close(fig)
        return [path]
    except Exception as exc:
        warnings.warn(f"plotting failed: {exc}")
        return []


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ezleverage", description=__doc__.split("\n")[0])
    parser.add_argument("command", choices=["solve", "benchmark", "regions", "validate", "sweep",
                                            "print-default-config"])
    parser.add_argument("--config", help="YAML config file")
    parser.add_argument("--output", help="output directory (overrides output_dir)")
    parser.add_argument("--seed", type=int, help="Monte Carlo seed (overrides mc.seed)")
    parser.add_argument("--allow-unconverged", action="store_true",
                        help="write results even if policy iteration did not converge")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "print-default-config":
        sys.stdout.write(yaml.safe_dump(DEFAULT_CONFIG, sort_keys=False))
        return EXIT_OK
    try:
        raw = {}
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                raw = yaml.safe_load(fh) or {}
            if not isinstance(raw, dict):
                raise ConfigError("config file must hold a mapping")
        if args.output:
            raw["output_dir"] = args.output
        if args.seed is not None:
            raw.setdefault("mc", {})["seed"] = args.seed
        cfg = RunConfig.from_dict(raw)
        commands = {"solve": cmd_solve, "regions": cmd_regions, "validate": cmd_validate, "sweep": cmd_sweep}
        if args.command == "benchmark":
            art = cmd_benchmark(cfg)
        else:
            art = commands[args.command](cfg, args.allow_unconverged)
    except NotConverged as exc:
        print(f"error: {exc} (rerun with --allow-unconverged to keep the iterate)", file=sys.stderr)
        return EXIT_ERROR
    except (EZError, ValueError, TypeError, KeyError, OSError, yaml.YAMLError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return art.exit_code


if __name__ == "__main__":
    sys.exit(main())
