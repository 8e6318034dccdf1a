"""Configuration-driven experiment runner.

A run is a pure function of (config, seed): it executes one named
scenario and writes a CSV data table plus a JSON summary, byte-identical
across reruns.  Config is a single JSON object::

    {
      "scenario": "ComparePostulates" | "DecoherenceSweep" | "WindowScan"
                  | "HistoriesCheck" | "LambdaPositivityMap",
      "seed": <nonnegative integer>,
      "params": { ... per-scenario keys ... },
      "outputs": {"csv": <path>, "json": <path>}
    }

CSV files are UTF-8 with a header row, comma separators, LF line endings,
and floats printed to 17 significant digits.  The JSON summary always has
the shape {"scenario", "seed", "results", "violations"}.
"""

from __future__ import annotations

import json
import math
import os
import warnings
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from .decoherence import BitByBitModel, evolve_and_trace, damping_ratio, interference_amplitude, suppression_sweep
from .errors import CapExceededError, ConfigError, NumericalContractError
from .histories import (
    HistoryFamily,
    additivity_residual,
    check_consistency,
    marginalization_residual,
)
from .linalg import unitary_exp
from .reduction import (
    DEFAULT_EVENT_TOL,
    postulate_distance,
    reduce_lambda,
    reduce_modified,
    unread_mixture_lambda,
    unread_mixture_standard,
)
from .states import (
    IDENTITY_2,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    Observable,
    Projector,
    ProjectorFamily,
    density_distance,
    make_density,
    spectral_projectors,
)

WINDOW_SCAN_POINT_CAP = 10_000_000
_SCAN_CHUNK = 65536
_EVENT_LABELS = ("Branches", "CertainTrue", "CertainFalse", "OutOfRange")


@dataclass
class ScenarioResult:
    """One scenario's outputs before serialization.

    ``rows`` may hold value tuples or preformatted CSV lines (large scans
    stream the latter to avoid materializing millions of tuples).
    """

    header: list[str]
    rows: Iterable
    results: dict
    violations: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# config validation

def _fail(message: str):
    raise ConfigError(message)


def _check_keys(obj: dict, required: tuple, optional: tuple, where: str) -> None:
    missing = [k for k in required if k not in obj]
    if missing:
        _fail(f"{where}: missing required key(s) {missing}")
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        _fail(f"{where}: unknown key(s) {unknown}")


def _as_real(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        _fail(f"{name} must be a real number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        _fail(f"{name} must be finite, got {out}")
    return out


def _as_int(value, name: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"{name} must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(f"{name} must be >= {minimum}, got {value}")
    return value


def _as_real_list(value, name: str) -> list[float]:
    if not isinstance(value, list) or not value:
        _fail(f"{name} must be a nonempty list of numbers")
    return [_as_real(v, f"{name}[{i}]") for i, v in enumerate(value)]


def _as_amplitude(value, name: str) -> complex:
    """Accept a real number or an [re, im] pair."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(float(value), 0.0)
    if (
        isinstance(value, list)
        and len(value) == 2
        and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)
    ):
        return complex(float(value[0]), float(value[1]))
    _fail(f"{name} must be a number or an [re, im] pair, got {value!r}")


def _decode_matrix(data, dim: int, name: str) -> np.ndarray:
    """Row-major complex matrix encoded as [re, im] pairs (nested or flat)."""
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError):
        _fail(f"{name} must be numeric [re, im] pairs")
    if arr.shape == (dim, dim, 2):
        pass
    elif arr.shape == (dim * dim, 2):
        arr = arr.reshape(dim, dim, 2)
    else:
        _fail(f"{name} must be a {dim}x{dim} matrix of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def _population_pair(params: dict) -> float:
    a2 = _as_real(params["a2"], "params.a2")
    if not 1e-9 < a2 < 1.0 - 1e-9:
        _fail(f"params.a2 must lie strictly inside (0, 1), got {a2}")
    return a2


def _coherence_values(params: dict, a2: float) -> list[float]:
    zmax = math.sqrt(a2 * (1.0 - a2)) + 1e-12
    zs = _as_real_list(params["z_values"], "params.z_values")
    for z in zs:
        if z < 0.0 or z > zmax:
            _fail(f"params.z_values entry {z} outside [0, sqrt(a2(1-a2))] = [0, {zmax:.6g}]")
    return zs


def _validate_compare(params: dict) -> dict:
    _check_keys(params, ("a2", "z_values", "lambdas"), (), "ComparePostulates params")
    a2 = _population_pair(params)
    return {
        "a2": a2,
        "z_values": _coherence_values(params, a2),
        "lambdas": _as_real_list(params["lambdas"], "params.lambdas"),
    }


def _validate_decoherence(params: dict) -> dict:
    _check_keys(params, ("a", "b", "n_values", "trials", "t"), (), "DecoherenceSweep params")
    a = _as_amplitude(params["a"], "params.a")
    b = _as_amplitude(params["b"], "params.b")
    norm = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    if abs(norm - 1.0) > 1e-9:
        _fail(f"params.a, params.b must satisfy |a|^2 + |b|^2 = 1, got {norm**2:.12g}")
    if not isinstance(params["n_values"], list) or not params["n_values"]:
        _fail("params.n_values must be a nonempty list of integers")
    n_values = [
        _as_int(n, f"params.n_values[{i}]", minimum=0)
        for i, n in enumerate(params["n_values"])
    ]
    return {
        "a": a / norm,
        "b": b / norm,
        "n_values": n_values,
        "trials": _as_int(params["trials"], "params.trials", minimum=1),
        "t": _as_real(params["t"], "params.t"),
    }


def _validate_window(params: dict) -> dict:
    _check_keys(params, ("a2", "z_values", "delta_theta"), ("tol",), "WindowScan params")
    a2 = _population_pair(params)
    dtheta = _as_real(params["delta_theta"], "params.delta_theta")
    if not 0.0 < dtheta <= math.pi / 2:
        _fail(f"params.delta_theta must lie in (0, pi/2], got {dtheta}")
    tol = _as_real(params.get("tol", DEFAULT_EVENT_TOL), "params.tol")
    if not 0.0 < tol < 0.5:
        _fail(f"params.tol must lie in (0, 0.5), got {tol}")
    return {
        "a2": a2,
        "z_values": _coherence_values(params, a2),
        "delta_theta": dtheta,
        "tol": tol,
    }


def _validate_histories(params: dict) -> dict:
    _check_keys(
        params,
        ("dim", "initial_state", "hamiltonian", "slots"),
        ("tol",),
        "HistoriesCheck params",
    )
    dim = _as_int(params["dim"], "params.dim", minimum=2)
    rho = _decode_matrix(params["initial_state"], dim, "params.initial_state")
    ham = _decode_matrix(params["hamiltonian"], dim, "params.hamiltonian")
    if not isinstance(params["slots"], list) or not params["slots"]:
        _fail("params.slots must be a nonempty list")
    slots = []
    previous_time = None
    for i, slot in enumerate(params["slots"]):
        if not isinstance(slot, dict):
            _fail(f"params.slots[{i}] must be an object")
        _check_keys(slot, ("time", "observable", "partition"), (), f"params.slots[{i}]")
        time = _as_real(slot["time"], f"params.slots[{i}].time")
        if previous_time is not None and time <= previous_time:
            _fail("params.slots times must be strictly increasing")
        previous_time = time
        obs = _decode_matrix(slot["observable"], dim, f"params.slots[{i}].observable")
        partition = slot["partition"]
        if not isinstance(partition, list) or not partition:
            _fail(f"params.slots[{i}].partition must be a nonempty list of index lists")
        part = []
        for j, group in enumerate(partition):
            if not isinstance(group, list) or not group:
                _fail(f"params.slots[{i}].partition[{j}] must be a nonempty list of indices")
            part.append(
                [_as_int(k, f"params.slots[{i}].partition[{j}][{m}]", minimum=0) for m, k in enumerate(group)]
            )
        slots.append({"time": time, "observable": obs, "partition": part})
    tol = _as_real(params.get("tol", 1e-9), "params.tol")
    if tol <= 0.0:
        _fail(f"params.tol must be positive, got {tol}")
    return {"dim": dim, "initial_state": rho, "hamiltonian": ham, "slots": slots, "tol": tol}


def _validate_lambda_map(params: dict) -> dict:
    _check_keys(params, ("lambda_grid", "ratio_grid"), (), "LambdaPositivityMap params")
    ratios = _as_real_list(params["ratio_grid"], "params.ratio_grid")
    for r in ratios:
        if not 0.0 <= r <= 1.0:
            _fail(f"params.ratio_grid entry {r} outside [0, 1]")
    return {
        "lambda_grid": _as_real_list(params["lambda_grid"], "params.lambda_grid"),
        "ratio_grid": ratios,
    }


_VALIDATORS: dict[str, Callable[[dict], dict]] = {
    "ComparePostulates": _validate_compare,
    "DecoherenceSweep": _validate_decoherence,
    "WindowScan": _validate_window,
    "HistoriesCheck": _validate_histories,
    "LambdaPositivityMap": _validate_lambda_map,
}

SCENARIO_NAMES = tuple(_VALIDATORS)


def validate_config(config) -> dict:
    """Check a parsed config document; returns a normalized copy.

    Raises ConfigError on any structural or range problem.  Caps that
    depend on runtime work (environment size, enumeration counts, scan
    resolution) are enforced by the runners, not here.
    """
    if not isinstance(config, dict):
        _fail("config must be a JSON object")
    _check_keys(config, ("scenario", "seed", "params", "outputs"), (), "config")
    scenario = config["scenario"]
    if scenario not in _VALIDATORS:
        _fail(f"unknown scenario {scenario!r}; expected one of {sorted(_VALIDATORS)}")
    seed = _as_int(config["seed"], "seed", minimum=0)
    if not isinstance(config["params"], dict):
        _fail("params must be a JSON object")
    outputs = config["outputs"]
    if not isinstance(outputs, dict):
        _fail("outputs must be a JSON object")
    _check_keys(outputs, ("csv", "json"), (), "outputs")
    for key in ("csv", "json"):
        if not isinstance(outputs[key], str) or not outputs[key]:
            _fail(f"outputs.{key} must be a nonempty path string")
    return {
        "scenario": scenario,
        "seed": seed,
        "params": _VALIDATORS[scenario](config["params"]),
        "outputs": {"csv": outputs["csv"], "json": outputs["json"]},
    }


def read_config(path: str) -> dict:
    """Parse a config file; IO and JSON problems become ConfigError."""
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    return raw


def load_config(path: str) -> dict:
    return validate_config(read_config(path))


# ---------------------------------------------------------------------------
# scenario runners

def _pointer_basis_2() -> ProjectorFamily:
    return ProjectorFamily.from_basis(np.eye(2))


def _coherent_qubit(a2: float, z: float):
    return make_density([[a2, z], [z, 1.0 - a2]])


def run_compare_postulates(params: dict, seed: int) -> ScenarioResult:
    """Distances telling the two postulates apart, read and unread.

    Per coherence z: the gap between conditioned post-states, the gap
    between the Lueders outcome-average and the untouched state (nonzero,
    sqrt(2) |z| on a qubit), and the same gap for each requested lambda
    (zero to rounding for every lambda).
    """
    a2, z_values, lambdas = params["a2"], params["z_values"], params["lambdas"]
    basis = _pointer_basis_2()
    up = basis[0]
    header = ["z", "d_reduce", "d_unread_standard"] + [
        f"d_unread_lambda_{lam:g}" for lam in lambdas
    ]
    rows = []
    summary_rows = []
    for z in z_values:
        rho = _coherent_qubit(a2, z)
        d_reduce = postulate_distance(rho, up)
        d_std = density_distance(unread_mixture_standard(rho, basis), rho)
        d_lams = [
            density_distance(unread_mixture_lambda(rho, basis, lam), rho)
            for lam in lambdas
        ]
        rows.append((z, d_reduce, d_std, *d_lams))
        summary_rows.append(
            {
                "z": z,
                "d_reduce": d_reduce,
                "d_unread_standard": d_std,
                "d_unread_lambda": d_lams,
            }
        )
    results = {"a2": a2, "lambdas": lambdas, "rows": summary_rows}
    return ScenarioResult(header=header, rows=rows, results=results)


def run_decoherence_sweep(params: dict, seed: int) -> ScenarioResult:
    """|z(t)| distribution versus environment size, with an exactness check.

    Every trial's product-formula coherence is compared against the exact
    partial trace; any gap above 1e-10 aborts the run.  The damping ratio
    is reported for the trial closest to each size's median |z|.
    """
    base = BitByBitModel(a=params["a"], b=params["b"], seed=seed)
    sweep = suppression_sweep(base, params["n_values"], params["t"], params["trials"])
    header = ["n_env", "median_abs_z", "q25", "q75", "damping_ratio"]
    rows = []
    summary_rows = []
    max_diff = 0.0
    for entry in sweep:
        for trial, model in enumerate(entry.models):
            z_formula = interference_amplitude(model, params["t"])
            reduced = evolve_and_trace(model, params["t"])
            diff = abs(z_formula - reduced.matrix[0, 1])
            max_diff = max(max_diff, diff)
            if diff > 1e-10:
                raise NumericalContractError(
                    f"product formula disagrees with partial trace by {diff:.3e} "
                    f"at n_env={entry.n_env}, trial={trial}"
                )
        pick = entry.median_trial_index()
        ratio = damping_ratio(evolve_and_trace(entry.models[pick], params["t"]))
        rows.append((entry.n_env, entry.median_abs_z, entry.q25, entry.q75, ratio))
        summary_rows.append(
            {
                "n_env": entry.n_env,
                "median_abs_z": entry.median_abs_z,
                "q25": entry.q25,
                "q75": entry.q75,
                "damping_ratio": ratio,
            }
        )
    results = {
        "a": [params["a"].real, params["a"].imag],
        "b": [params["b"].real, params["b"].imag],
        "t": params["t"],
        "trials": params["trials"],
        "max_product_trace_diff": max_diff,
        "rows": summary_rows,
    }
    return ScenarioResult(header=header, rows=rows, results=results)


def _scan_probabilities(rho_matrix: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Tr[rho P_theta] for P_theta = (I + sin(theta) X + cos(theta) Z) / 2."""
    out = np.empty(thetas.shape[0])
    for lo in range(0, thetas.shape[0], _SCAN_CHUNK):
        chunk = thetas[lo : lo + _SCAN_CHUNK]
        proj = 0.5 * (
            IDENTITY_2[None, :, :]
            + np.sin(chunk)[:, None, None] * PAULI_X[None, :, :]
            + np.cos(chunk)[:, None, None] * PAULI_Z[None, :, :]
        )
        values = np.einsum("kij,ji->k", proj, rho_matrix)
        if np.max(np.abs(values.imag)) > 1e-10:
            raise NumericalContractError("projection probabilities are not real")
        out[lo : lo + _SCAN_CHUNK] = values.real
    return out


def _classify_probabilities(p: np.ndarray, tol: float) -> np.ndarray:
    branches, true_, false_, out_of_range = _EVENT_LABELS
    return np.select(
        [
            (p > tol) & (p < 1.0 - tol),
            (p >= 1.0 - tol) & (p <= 1.0 + tol),
            np.abs(p) <= tol,
        ],
        [branches, true_, false_],
        default=out_of_range,
    )


def _window_around_peak(p: np.ndarray, labels: np.ndarray) -> tuple[int, int, int]:
    """(points in window, start index, peak index) of the contiguous
    non-Branches run around the most aligned direction; 0 points when the
    peak itself still branches."""
    mask = labels != _EVENT_LABELS[0]
    peak = int(np.argmax(p))
    n = mask.shape[0]
    if not mask[peak]:
        return 0, peak, peak
    if mask.all():
        return n, 0, peak
    count = 1
    i = (peak + 1) % n
    while mask[i]:
        count += 1
        i = (i + 1) % n
    i = (peak - 1) % n
    while mask[i]:
        count += 1
        i = (i - 1) % n
    return count, (i + 1) % n, peak


def run_window_scan(params: dict, seed: int) -> ScenarioResult:
    """No-event window after a modified reduction, one full-circle scan per z.

    Prepares the coherent qubit, conditions on spin-up with the
    anticommutator rule, rotates +z into +x exactly, then classifies
    Tr[rho P_theta] over the theta grid.  The window is the contiguous
    run of non-branching directions around the most aligned one.
    """
    a2, z_values = params["a2"], params["z_values"]
    dtheta, tol = params["delta_theta"], params["tol"]
    n_points = int(np.floor(2.0 * math.pi / dtheta + 1e-12))
    if len(z_values) * n_points > WINDOW_SCAN_POINT_CAP:
        raise CapExceededError(
            f"scan would evaluate {len(z_values) * n_points} points; "
            f"cap is {WINDOW_SCAN_POINT_CAP}"
        )
    thetas = np.arange(n_points) * dtheta
    thetas = thetas[thetas < 2.0 * math.pi]
    up = Projector(np.diag([1.0, 0.0]))
    rot = unitary_exp(PAULI_Y / 2.0, math.pi / 2.0)
    scans = []
    windows = []
    for z in z_values:
        reduced = reduce_modified(_coherent_qubit(a2, z), up).post_state
        rotated = rot @ reduced.matrix @ rot.conj().T
        rotated = 0.5 * (rotated + rotated.conj().T)
        p = _scan_probabilities(rotated, thetas)
        labels = _classify_probabilities(p, tol)
        count, start, peak = _window_around_peak(p, labels)
        width = count * dtheta
        resolved = count >= 10
        if not resolved:
            warnings.warn(
                f"z={z:g}: no-event window spans only {count} grid point(s) at "
                f"delta_theta={dtheta:g}; width {width:.3g} is a lower bound",
                RuntimeWarning,
                stacklevel=2,
            )
        center = (thetas[start] + 0.5 * (count - 1) * dtheta) % (2.0 * math.pi) if count else None
        scans.append((z, p, labels))
        windows.append(
            {
                "z": z,
                "window_width": width,
                "center_theta": center,
                "n_points": count,
                "peak_theta": float(thetas[peak]),
                "resolved": resolved,
            }
        )

    def emit() -> Iterator[str]:
        for z, p, labels in scans:
            z_text = f"{z:.17g}"
            for lo in range(0, thetas.shape[0], _SCAN_CHUNK):
                hi = lo + _SCAN_CHUNK
                yield from (
                    f"{z_text},{t:.17g},{q:.17g},{lab}"
                    for t, q, lab in zip(thetas[lo:hi], p[lo:hi], labels[lo:hi])
                )

    results = {
        "a2": a2,
        "delta_theta": dtheta,
        "tol": tol,
        "n_grid_points": int(thetas.shape[0]),
        "windows": windows,
    }
    return ScenarioResult(
        header=["z", "theta", "p", "classification"], rows=emit(), results=results
    )


def run_histories_check(params: dict, seed: int) -> ScenarioResult:
    """Consistency, additivity and marginalization for one history family."""
    try:
        rho = make_density(params["initial_state"])
        times = [slot["time"] for slot in params["slots"]]
        families = [
            spectral_projectors(Observable(slot["observable"]), slot["partition"])
            for slot in params["slots"]
        ]
        family = HistoryFamily(rho, params["hamiltonian"], times, families)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    tol = params["tol"]
    report = check_consistency(family, tol)

    worst_additivity = None
    for slot, fam in enumerate(family.slot_families):
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                residual = additivity_residual(family, slot, (i, j))
                if worst_additivity is None or residual > worst_additivity:
                    worst_additivity = residual
    marg = marginalization_residual(family) if family.n_slots >= 2 else None

    n = family.n_slots
    header = [f"slot_{k}" for k in range(n)] + ["probability"]
    branches = sorted(report.probability_table)
    rows = [(*choice, report.probability_table[choice]) for choice in branches]
    results = {
        "consistent": report.consistent,
        "tol": tol,
        "n_slots": n,
        "branch_counts": list(family.branch_shape),
        "probability_table": {
            ",".join(map(str, choice)): report.probability_table[choice]
            for choice in branches
        },
        "probability_sum": float(sum(report.probability_table.values())),
        "additivity_residual": worst_additivity,
        "marginalization_residual": marg,
    }
    violations = [
        {
            "slot_subsets": [list(map(int, s)) for s in v.slot_subsets],
            "probability": v.probability,
        }
        for v in report.violations
    ]
    return ScenarioResult(header=header, rows=rows, results=results, violations=violations)


def run_lambda_positivity_map(params: dict, seed: int) -> ScenarioResult:
    """Minimum post-state eigenvalue over a (lambda, damping ratio) grid.

    The probe family is the symmetric qubit [[1/2, r/2], [r/2, 1/2]] whose
    damping ratio is exactly r; reduction conditions on the first pointer
    outcome.  positive means min eigenvalue >= -1e-12.
    """
    basis = _pointer_basis_2()
    header = ["lambda", "ratio", "min_eig", "positive"]
    rows = []
    summary_rows = []
    for lam in params["lambda_grid"]:
        for ratio in params["ratio_grid"]:
            rho = make_density([[0.5, ratio / 2.0], [ratio / 2.0, 0.5]])
            outcome = reduce_lambda(rho, basis, 0, lam, quasi_threshold=1.0)
            min_eig = float(outcome.post_state.min_eigenvalue)
            positive = min_eig >= -1e-12
            rows.append((lam, ratio, min_eig, positive))
            summary_rows.append(
                {"lambda": lam, "ratio": ratio, "min_eig": min_eig, "positive": positive}
            )
    return ScenarioResult(header=header, rows=rows, results={"rows": summary_rows})


_RUNNERS: dict[str, Callable[[dict, int], ScenarioResult]] = {
    "ComparePostulates": run_compare_postulates,
    "DecoherenceSweep": run_decoherence_sweep,
    "WindowScan": run_window_scan,
    "HistoriesCheck": run_histories_check,
    "LambdaPositivityMap": run_lambda_positivity_map,
}


# ---------------------------------------------------------------------------
# serialization

def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    raise TypeError(f"cannot format {type(value).__name__} into CSV")


def write_csv(path: str, header: list[str], rows: Iterable) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        buffer: list[str] = []
        for row in rows:
            if isinstance(row, str):
                buffer.append(row)
            else:
                buffer.append(",".join(_format_cell(v) for v in row))
            if len(buffer) >= _SCAN_CHUNK:
                fh.write("\n".join(buffer) + "\n")
                buffer.clear()
        if buffer:
            fh.write("\n".join(buffer) + "\n")


def write_json(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(payload, indent=2, sort_keys=True))
        fh.write("\n")


def _resolve(path: str, out_dir: str | None) -> str:
    resolved = os.path.join(out_dir, path) if out_dir else path
    parent = os.path.dirname(resolved)
    if parent:
        os.makedirs(parent, exist_ok=True)
    return resolved


def run_scenario(config: dict, out_dir: str | None = None, seed_override: int | None = None) -> dict:
    """Validate, execute and serialize one scenario; returns the summary."""
    norm = validate_config(config)
    seed = norm["seed"]
    if seed_override is not None:
        seed = _as_int(seed_override, "seed override", minimum=0)
    result = _RUNNERS[norm["scenario"]](norm["params"], seed)
    write_csv(_resolve(norm["outputs"]["csv"], out_dir), result.header, result.rows)
    payload = {
        "scenario": norm["scenario"],
        "seed": seed,
        "results": result.results,
        "violations": result.violations,
    }
    write_json(_resolve(norm["outputs"]["json"], out_dir), payload)
    return payload
