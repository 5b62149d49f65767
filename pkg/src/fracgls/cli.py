"""Command-line front end.

Subcommands run the solvers and the analysis sweeps and emit deterministic
CSV plus JSON metadata:

    fracgls run          field profiles per recorded time level
    fracgls compare      cross-method error tables and overlay profiles
    fracgls convergence  spatial and temporal order studies
    fracgls stability    amplification-factor sweep

A JSON config file mirrors the RunConfig structure exactly; every CLI flag
overrides the corresponding file value, and anything left unset falls back
to the benchmark preset (alpha 1.5 on [-5, 5] with m=50, tau=0.1). Numeric
CSV cells use repr(), the shortest representation that round-trips a
double, so downstream consumers are lossless. Reruns with identical
configs produce byte-identical CSVs; wall-clock timings live only in the
metadata files.

Exit codes: 0 on success and 2 on validation errors (bad flags, bad
config values); solver or I/O failures exit 1.

Both methods share one grid, so cross-method errors are formed by direct
node-wise subtraction; no interpolation is involved.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys
import time as _time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .analysis import convergence_order, error_report, probe_amplification
from .core import (CglsParams, ComplexField, GridSpec, Quantity, TimeGrid,
                   field_quantity, sample_potential)
from .errors import SolverError
from .ifdm import PicardConfig, ifdm_solve, recorded_steps
from .riesz import apply_riesz, stencil_coefficients
from .tsfs import tsfs_solve

__all__ = [
    "RunConfig",
    "cmd_run",
    "cmd_compare",
    "cmd_convergence",
    "cmd_stability",
    "build_parser",
    "main",
]

_METHODS = ("ifdm", "tsfs", "both")
_QUANTITY_ORDER = (Quantity.ABS_SQUARED, Quantity.REAL_PART,
                   Quantity.IMAG_PART)

#: Benchmark preset used for every value a config leaves unset.
DEFAULT_CONFIG_DICT = {
    "params": {"eta": 1.0, "beta": 1.0, "eps": 1.0, "alpha": 1.5,
               "gamma_x": 1.0, "L": 100.0},
    "grid": {"a": -5.0, "b": 5.0, "m": 50},
    "time": {"tau": 0.1, "t_final": 0.5},
    "method": "both",
    "picard": {"tol": 1e-10, "max_iter": 100},
    "record_every": 1,
    "output_dir": "out",
    "quantities": ["abs2", "re", "im"],
    "toggles": {"nonlinear": True, "potential": True},
}


@dataclass(frozen=True)
class RunConfig:
    """One experiment: model, discretization, method, and output options."""

    params: CglsParams
    grid: GridSpec
    time: TimeGrid
    method: str
    picard: PicardConfig
    record_every: int
    output_dir: str
    quantities: tuple
    nonlinear: bool
    potential: bool

    def __post_init__(self):
        if self.method not in _METHODS:
            raise ValueError(
                f"method must be one of {_METHODS}, got {self.method!r}"
            )
        if self.record_every < 1:
            raise ValueError(
                f"record_every must be >= 1, got {self.record_every}"
            )
        if not self.quantities:
            raise ValueError("at least one output quantity is required")

    @property
    def methods(self) -> tuple:
        """Solver methods this config runs, in deterministic order."""
        return ("ifdm", "tsfs") if self.method == "both" else (self.method,)

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        """Build a config from the JSON structure, filling defaults.

        Unknown keys are rejected so config typos fail loudly.
        """
        merged = _deep_merge(DEFAULT_CONFIG_DICT, raw)
        _check_keys(raw, DEFAULT_CONFIG_DICT, path="config")
        p = merged["params"]
        params = CglsParams(eta=p["eta"], beta=p["beta"], eps=p["eps"],
                            alpha=p["alpha"], gamma_x=p["gamma_x"],
                            L=p["L"])
        g = merged["grid"]
        grid = GridSpec(a=g["a"], b=g["b"], m=int(g["m"]))
        t = merged["time"]
        timegrid = TimeGrid.from_final_time(t["tau"], t["t_final"])
        pc = merged["picard"]
        picard = PicardConfig(tol=pc["tol"], max_iter=int(pc["max_iter"]))
        seen = {Quantity(q) for q in merged["quantities"]}
        quantities = tuple(q for q in _QUANTITY_ORDER if q in seen)
        tog = merged["toggles"]
        return cls(params=params, grid=grid, time=timegrid,
                   method=merged["method"], picard=picard,
                   record_every=int(merged["record_every"]),
                   output_dir=merged["output_dir"], quantities=quantities,
                   nonlinear=bool(tog["nonlinear"]),
                   potential=bool(tog["potential"]))

    def to_dict(self) -> dict:
        """JSON structure this config round-trips through."""
        return {
            "params": {"eta": self.params.eta, "beta": self.params.beta,
                       "eps": self.params.eps, "alpha": self.params.alpha,
                       "gamma_x": self.params.gamma_x, "L": self.params.L},
            "grid": {"a": self.grid.a, "b": self.grid.b, "m": self.grid.m},
            "time": {"tau": self.time.tau, "t_final": self.time.t_final},
            "method": self.method,
            "picard": {"tol": self.picard.tol,
                       "max_iter": self.picard.max_iter},
            "record_every": self.record_every,
            "output_dir": self.output_dir,
            "quantities": [q.value for q in self.quantities],
            "toggles": {"nonlinear": self.nonlinear,
                        "potential": self.potential},
        }


def _deep_merge(base: dict, override: dict) -> dict:
    out = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _deep_merge(out[key], value)
        else:
            out[key] = value
    return out


def _check_keys(raw: dict, reference: dict, path: str):
    for key, value in raw.items():
        if key not in reference:
            raise ValueError(f"unknown config key {path}.{key}")
        if isinstance(reference[key], dict):
            if not isinstance(value, dict):
                raise ValueError(f"config key {path}.{key} must be an object")
            _check_keys(value, reference[key], path=f"{path}.{key}")


def _fmt(value) -> str:
    """Shortest representation that round-trips the exact double."""
    return repr(float(value))


def _write_csv(path: Path, header: str, rows: list):
    lines = [header]
    lines.extend(",".join(row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _content_hash(config: RunConfig) -> str:
    """Git-style blob hash of the canonical config JSON."""
    payload = json.dumps(config.to_dict(), sort_keys=True,
                         separators=(",", ":")).encode("utf-8")
    return hashlib.sha1(b"blob %d\0" % len(payload) + payload).hexdigest()


def _write_metadata(out_dir: Path, config: RunConfig, extra: dict):
    meta = {
        "config": config.to_dict(),
        "input_hash": _content_hash(config),
        "derived": {
            "h": config.grid.h,
            "n_steps": config.time.n_steps,
        },
    }
    meta.update(extra)
    path = out_dir / "metadata.json"
    path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")
    return path


def _solve(config: RunConfig, method: str, params: CglsParams = None,
           record_every: int = None) -> list:
    params = config.params if params is None else params
    record = config.record_every if record_every is None else record_every
    if method == "ifdm":
        return ifdm_solve(params, config.grid, config.time,
                          picard=config.picard, record_every=record,
                          nonlinear=config.nonlinear,
                          potential=config.potential)
    return tsfs_solve(params, config.grid, config.time,
                      picard=config.picard, record_every=record,
                      nonlinear=config.nonlinear, potential=config.potential)


def cmd_run(config: RunConfig) -> int:
    """Solve and write one CSV for each method and quantity per level."""
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    steps = recorded_steps(config.time.n_steps, config.record_every)
    x = config.grid.nodes
    files = []
    timing = {}
    for method in config.methods:
        started = _time.perf_counter()
        trajectory = _solve(config, method)
        timing[method] = _time.perf_counter() - started
        for step, field in zip(steps, trajectory):
            for quantity in config.quantities:
                values = field_quantity(field, quantity).values
                name = f"{method}_{quantity.value}_step{step:05d}.csv"
                rows = [(_fmt(xj), _fmt(vj)) for xj, vj in zip(x, values)]
                _write_csv(out_dir / name, "x,value", rows)
                files.append(name)
    _write_metadata(out_dir, config, {
        "command": "run",
        "recorded_steps": steps,
        "recorded_times": [s * config.time.tau for s in steps],
        "files": files,
        "timing_seconds": timing,
    })
    print(f"run: wrote {len(files)} field files to {out_dir}")
    return 0


def _closest_step(steps: list, tau: float, target: float):
    for step in steps:
        if abs(step * tau - target) <= 1e-9 * max(1.0, target):
            return step
    return None


def cmd_compare(config: RunConfig, alphas: list, self_mode: bool = False) -> int:
    """Run both methods per alpha and write error tables plus profiles.

    Emits compare_table1.csv (pointwise absolute errors per node),
    compare_table2.csv (l2 and max norms per quantity and report time),
    and compare_profiles.csv (raw per-method curves for plotting). Report
    times are t = 0.5 and t = 1.0 where recorded, else the final time.
    Recording is per step here regardless of config.record_every, since
    the report times must be hit exactly. In self-compare mode one method
    is compared against itself, a determinism debug aid.
    """
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tau = config.time.tau
    steps = recorded_steps(config.time.n_steps, 1)
    targets = [t for t in (0.5, 1.0)
               if _closest_step(steps, tau, t) is not None]
    if not targets:
        targets = [config.time.t_final]
    table1 = []
    table2 = []
    profiles = []
    summary = {}
    timing = {}
    x = config.grid.nodes
    if self_mode:
        method_pair = ("tsfs", "tsfs") if config.method != "ifdm" \
            else ("ifdm", "ifdm")
    else:
        method_pair = ("tsfs", "ifdm")
    for alpha in alphas:
        params = dataclasses.replace(config.params, alpha=alpha)
        started = _time.perf_counter()
        traj_a = _solve(config, method_pair[0], params=params,
                        record_every=1)
        if self_mode:
            traj_b = traj_a
        else:
            traj_b = _solve(config, method_pair[1], params=params,
                            record_every=1)
        timing[f"alpha={alpha!r}"] = _time.perf_counter() - started
        by_step_a = dict(zip(steps, traj_a))
        by_step_b = dict(zip(steps, traj_b))
        for target in targets:
            step = _closest_step(steps, tau, target)
            field_a, field_b = by_step_a[step], by_step_b[step]
            reports = {q: error_report(field_a, field_b, q, config.grid,
                                       alpha=alpha)
                       for q in _QUANTITY_ORDER}
            for q in _QUANTITY_ORDER:
                rep = reports[q]
                table2.append((_fmt(alpha), _fmt(target), q.value,
                               _fmt(rep.l2), _fmt(rep.linf)))
            if target == targets[0]:
                point = {q: reports[q].pointwise.values
                         for q in _QUANTITY_ORDER}
                for j in range(config.grid.m):
                    table1.append((
                        _fmt(alpha), _fmt(x[j]),
                        _fmt(point[Quantity.ABS_SQUARED][j]),
                        _fmt(point[Quantity.REAL_PART][j]),
                        _fmt(point[Quantity.IMAG_PART][j]),
                    ))
            for label, field in (("a", field_a), ("b", field_b)):
                method = method_pair[0 if label == "a" else 1]
                if self_mode and label == "b":
                    continue
                quantities = {q: field_quantity(field, q).values
                              for q in _QUANTITY_ORDER}
                for j in range(config.grid.m):
                    profiles.append((
                        _fmt(alpha), method, _fmt(target), _fmt(x[j]),
                        _fmt(quantities[Quantity.ABS_SQUARED][j]),
                        _fmt(quantities[Quantity.REAL_PART][j]),
                        _fmt(quantities[Quantity.IMAG_PART][j]),
                    ))
            summary[f"alpha={alpha!r},t={target!r}"] = {
                q.value: {"l2": reports[q].l2, "linf": reports[q].linf}
                for q in _QUANTITY_ORDER
            }
    _write_csv(out_dir / "compare_table1.csv",
               "alpha,x,abs_err_abs2,abs_err_re,abs_err_im", table1)
    _write_csv(out_dir / "compare_table2.csv",
               "alpha,t,quantity,l2,linf", table2)
    _write_csv(out_dir / "compare_profiles.csv",
               "alpha,method,t,x,abs2,re,im", profiles)
    _write_metadata(out_dir, config, {
        "command": "compare",
        "alphas": list(alphas),
        "methods": list(method_pair),
        "self_mode": self_mode,
        "report_times": targets,
        "summary": summary,
        "timing_seconds": timing,
    })
    for key, per_quantity in summary.items():
        linf = per_quantity["abs2"]["linf"]
        print(f"compare: {key} linf(|psi|^2) = {linf:.6e}")
    print(f"compare: wrote tables to {out_dir}")
    return 0


def cmd_convergence(config: RunConfig, levels: int) -> int:
    """Spatial and temporal order studies written to convergence.csv.

    The spatial study applies the operator to a periodic plane wave on
    grids m, 2m, 4m, ... and compares against the exact symbol. The
    temporal studies halve tau per level and compare each final field
    against a reference solution four halvings below the finest level
    (tau/16 for the default three levels).
    """
    if levels < 3:
        raise ValueError(f"need at least 3 refinement levels, got {levels}")
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    orders = {}

    mode = 3
    pairs = []
    for level in range(levels):
        m = config.grid.m * 2 ** level
        grid = GridSpec(a=config.grid.a, b=config.grid.b, m=m)
        mu = 2.0 * np.pi * mode / (grid.b - grid.a)
        wave = ComplexField(np.exp(1j * mu * grid.nodes), time=0.0)
        stencil = stencil_coefficients(config.params.alpha, m - 1)
        applied = apply_riesz(stencil, wave, grid.h, periodic=True)
        exact = -np.abs(mu) ** config.params.alpha * wave.values
        err = float(np.max(np.abs(applied.values - exact)))
        pairs.append((grid.h, err))
    orders["riesz"] = convergence_order(pairs)
    rows.extend(("spatial", "riesz", _fmt(h), _fmt(e),
                 _fmt(orders["riesz"])) for h, e in pairs)

    ref_tau = config.time.tau / 2 ** (levels + 1)
    ref_time = TimeGrid.from_final_time(ref_tau, config.time.t_final)
    for method in ("tsfs", "ifdm"):
        ref_config = dataclasses.replace(config, time=ref_time)
        reference = _solve(ref_config, method,
                           record_every=ref_time.n_steps)[-1]
        pairs = []
        for level in range(levels):
            tau = config.time.tau / 2 ** level
            timegrid = TimeGrid.from_final_time(tau, config.time.t_final)
            level_config = dataclasses.replace(config, time=timegrid)
            final = _solve(level_config, method,
                           record_every=timegrid.n_steps)[-1]
            err = float(np.max(np.abs(final.values - reference.values)))
            pairs.append((tau, err))
        orders[method] = convergence_order(pairs)
        rows.extend(("temporal", method, _fmt(tau), _fmt(e),
                     _fmt(orders[method])) for tau, e in pairs)

    _write_csv(out_dir / "convergence.csv",
               "study,method,step,error,fitted_order", rows)
    _write_metadata(out_dir, config, {
        "command": "convergence",
        "levels": levels,
        "fitted_orders": orders,
    })
    for name, order in orders.items():
        print(f"convergence: {name} fitted order = {order:.3f}")
    return 0


def cmd_stability(config: RunConfig, omega_count: int,
                  v_frozen: float = None, psi_max: float = None) -> int:
    """Amplification sweep over (0, pi/h] written to stability.csv.

    v_frozen defaults to the maximum of the sampled potential; psi_max
    (the frozen squared modulus) defaults to the same value, matching the
    benchmark regime where the potential bounds the density.
    """
    if omega_count < 16:
        raise ValueError(f"omega_count must be >= 16, got {omega_count}")
    out_dir = Path(config.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    grid = config.grid
    v_max = float(np.max(sample_potential(config.params, grid).values))
    v_frozen = v_max if v_frozen is None else v_frozen
    psi_max = v_max if psi_max is None else psi_max
    stencil = stencil_coefficients(config.params.alpha, grid.m - 1)
    rows = []
    max_abs_xi = 0.0
    flagged = 0
    for i in range(1, omega_count + 1):
        omega = (np.pi / grid.h) * i / omega_count
        probe = probe_amplification(config.params, stencil, grid.h,
                                    config.time.tau, float(omega),
                                    v_frozen, psi_max)
        magnitude = abs(probe.xi)
        exceeds = magnitude > 1.0 + 1e-12
        flagged += int(exceeds)
        max_abs_xi = max(max_abs_xi, magnitude)
        rows.append((_fmt(omega), _fmt(magnitude), str(int(exceeds))))
    _write_csv(out_dir / "stability.csv", "omega,abs_xi,exceeds_one", rows)
    _write_metadata(out_dir, config, {
        "command": "stability",
        "omega_count": omega_count,
        "v_frozen": v_frozen,
        "psi_max": psi_max,
        "max_abs_xi": max_abs_xi,
        "flagged_rows": flagged,
    })
    print(f"stability: max |xi| = {max_abs_xi:.15f} over {omega_count} "
          f"frequencies ({flagged} exceed 1)")
    return 0


_FLAG_TO_PATH = {
    "eta": ("params", "eta"),
    "beta": ("params", "beta"),
    "eps": ("params", "eps"),
    "gamma_x": ("params", "gamma_x"),
    "a": ("grid", "a"),
    "b": ("grid", "b"),
    "m": ("grid", "m"),
    "tau": ("time", "tau"),
    "t_final": ("time", "t_final"),
    "method": ("method",),
    "record_every": ("record_every",),
    "output": ("output_dir",),
}


def _add_common_flags(parser: argparse.ArgumentParser, multi_alpha: bool):
    parser.add_argument("--config", type=str, default=None,
                        help="JSON config file mirroring the RunConfig fields")
    if multi_alpha:
        parser.add_argument("--alpha", type=float, nargs="+", default=None,
                            help="fractional orders to compare "
                                 "(default: 1.5 1.75)")
    else:
        parser.add_argument("--alpha", type=float, default=None,
                            help="fractional order in (1, 2]")
    parser.add_argument("--eta", type=float, default=None)
    parser.add_argument("--beta", type=float, default=None)
    parser.add_argument("--eps", type=float, default=None)
    parser.add_argument("--gamma-x", dest="gamma_x", type=float, default=None)
    parser.add_argument("--a", type=float, default=None,
                        help="left domain endpoint")
    parser.add_argument("--b", type=float, default=None,
                        help="right domain endpoint")
    parser.add_argument("--m", type=int, default=None,
                        help="number of grid nodes (even)")
    parser.add_argument("--tau", type=float, default=None,
                        help="time step")
    parser.add_argument("--t-final", dest="t_final", type=float,
                        default=None, help="final time (multiple of tau)")
    parser.add_argument("--method", choices=list(_METHODS), default=None)
    parser.add_argument("--record-every", dest="record_every", type=int,
                        default=None, help="record every n-th step")
    parser.add_argument("--output", type=str, default=None,
                        help="output directory")
    parser.add_argument("--no-nonlinear", action="store_true",
                        help="disable the cubic term")
    parser.add_argument("--no-potential", action="store_true",
                        help="zero the potential")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracgls",
        description="Fractional CGLS solvers: implicit finite differences "
                    "and time-splitting Fourier spectral.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="solve and write field CSVs")
    _add_common_flags(run, multi_alpha=False)

    compare = sub.add_parser("compare",
                             help="cross-method error tables and profiles")
    _add_common_flags(compare, multi_alpha=True)
    compare.add_argument("--self", dest="self_mode", action="store_true",
                         help="compare one method against itself (debug)")

    convergence = sub.add_parser("convergence",
                                 help="spatial and temporal order studies")
    _add_common_flags(convergence, multi_alpha=False)
    convergence.add_argument("--levels", type=int, default=3,
                             help="refinement levels (>= 3)")

    stability = sub.add_parser("stability",
                               help="amplification-factor sweep")
    _add_common_flags(stability, multi_alpha=False)
    stability.add_argument("--omega-count", dest="omega_count", type=int,
                           default=1024, help="frequencies to probe (>= 16)")
    stability.add_argument("--v-frozen", dest="v_frozen", type=float,
                           default=None,
                           help="frozen potential value (default: max V)")
    stability.add_argument("--psi-max", dest="psi_max", type=float,
                           default=None,
                           help="frozen squared modulus (default: max V)")

    return parser


def _config_from_args(args: argparse.Namespace,
                      seed: dict = None) -> RunConfig:
    raw = {}
    if seed:
        raw = _deep_merge(raw, seed)
    if args.config is not None:
        text = Path(args.config).read_text(encoding="utf-8")
        try:
            file_dict = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"config file {args.config} is not valid "
                             f"JSON: {exc}") from exc
        if not isinstance(file_dict, dict):
            raise ValueError(f"config file {args.config} must hold a "
                             "JSON object")
        raw = _deep_merge(raw, file_dict)
    for flag, path in _FLAG_TO_PATH.items():
        value = getattr(args, flag, None)
        if value is None:
            continue
        node = raw
        for key in path[:-1]:
            node = node.setdefault(key, {})
        node[path[-1]] = value
    alpha = getattr(args, "alpha", None)
    if alpha is not None:
        first = alpha[0] if isinstance(alpha, list) else alpha
        raw.setdefault("params", {})["alpha"] = first
    if args.no_nonlinear:
        raw.setdefault("toggles", {})["nonlinear"] = False
    if args.no_potential:
        raw.setdefault("toggles", {})["potential"] = False
    return RunConfig.from_dict(raw)


def main(argv: list = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return cmd_run(_config_from_args(args))
        if args.command == "compare":
            seed = {"time": {"t_final": 1.0}}
            config = _config_from_args(args, seed=seed)
            alphas = args.alpha if args.alpha is not None else [1.5, 1.75]
            return cmd_compare(config, alphas, self_mode=args.self_mode)
        if args.command == "convergence":
            return cmd_convergence(_config_from_args(args), args.levels)
        return cmd_stability(_config_from_args(args), args.omega_count,
                             v_frozen=args.v_frozen, psi_max=args.psi_max)
    except ValueError as exc:
        print(f"fracgls: error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"fracgls: solver failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"fracgls: i/o failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
