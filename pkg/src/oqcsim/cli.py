"""Batch command-line front end.

Subcommands: run (execute one experiment config), truthtable (verify the
NOT/CNOT tables across backends), sweep (one-parameter scan), version.
Exit codes: 0 success, 1 physics/calibration failure, 2 config error.
Configs are strict JSON: any unknown key is a hard error.  Outputs are
CSV (17 significant digits) or JSON, byte-identical for identical
config + seed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from importlib.metadata import version as pkg_version

import numpy as np

from . import jones, rds, spin
from .squeezed import CutoffError, SqueezedStateParams, closed_form_stats, fock_distribution
from .truthtable import (
    CNOT_TABLE,
    NOT_TABLE,
    TruthTableReport,
    TruthTableRow,
    cnot_permutation,
    not_permutation,
    permutation_matrix,
)

EXIT_OK = 0
EXIT_PHYSICS = 1
EXIT_CONFIG = 2

BACKENDS = ("spin", "jones", "rds", "stats")

# Cap on reported level-separation margins so JSON output stays finite.
MARGIN_CAP = 1e30


class ConfigError(Exception):
    pass


# ---------------------------------------------------------------- config


def _strict(section, allowed, context):
    if not isinstance(section, dict):
        raise ConfigError(f"{context} must be an object")
    for key in section:
        if key not in allowed:
            raise ConfigError(f'unknown key "{key}" in {context}')


def _number(section, key, default, context):
    v = section.get(key, default)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f'key "{key}" in {context} must be a number')
    if not math.isfinite(v):
        raise ConfigError(f'key "{key}" in {context} must be finite')
    return float(v)


def _integer(section, key, default, context, minimum=None):
    v = section.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int):
        raise ConfigError(f'key "{key}" in {context} must be an integer')
    if minimum is not None and v < minimum:
        raise ConfigError(f'key "{key}" in {context} must be >= {minimum}')
    return v


def _complex_pair(section, key, default, context):
    v = section.get(key, default)
    if not (isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v)):
        raise ConfigError(f'key "{key}" in {context} must be a [re, im] pair')
    return complex(v[0], v[1])


def load_config(path):
    try:
        with open(path) as f:
            raw = json.load(f)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}")
    _strict(raw, {"backend", "parameters", "output", "seed", "sweep"}, "config")
    backend = raw.get("backend")
    if backend not in BACKENDS:
        raise ConfigError(f'key "backend" must be one of {", ".join(BACKENDS)}')
    params = raw.get("parameters", {})
    if not isinstance(params, dict):
        raise ConfigError('key "parameters" must be an object')
    output = raw.get("output")
    if output is not None:
        _strict(output, {"path", "format"}, "output")
        fmt = output.get("format", "csv")
        if fmt not in ("csv", "json"):
            raise ConfigError('output "format" must be "csv" or "json"')
    seed = _integer(raw, "seed", 0, "config", minimum=0)
    sweep = raw.get("sweep")
    if sweep is not None:
        _strict(sweep, {"parameter", "start", "stop", "count"}, "sweep")
        if not isinstance(sweep.get("parameter"), str):
            raise ConfigError('sweep "parameter" must be a string')
        _number(sweep, "start", None, "sweep") if "start" in sweep else _missing("start")
        _number(sweep, "stop", None, "sweep") if "stop" in sweep else _missing("stop")
        _integer(sweep, "count", None, "sweep", minimum=2) if "count" in sweep else _missing("count")
    return {
        "backend": backend,
        "parameters": params,
        "output": output,
        "seed": seed,
        "sweep": sweep,
    }


def _missing(key):
    raise ConfigError(f'sweep is missing required key "{key}"')


# ---------------------------------------------------------------- output


def _fmt_csv(value):
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def payload_csv(payload):
    lines = [",".join(payload["columns"])]
    for row in payload["rows"]:
        lines.append(",".join(_fmt_csv(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_safe(value):
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def payload_json(payload):
    safe = {
        "columns": payload["columns"],
        "rows": [[_json_safe(v) for v in row] for row in payload["rows"]],
    }
    return json.dumps(safe, indent=2) + "\n"


def write_payload(payload, out_path, fmt):
    text = payload_json(payload) if fmt == "json" else payload_csv(payload)
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="") as f:
            f.write(text)


# ---------------------------------------------------------------- backends


def run_spin(params, seed):
    ctx = "spin parameters"
    _strict(params, {"b0", "j12", "gate", "target", "control", "initial", "shots"}, ctx)
    b0 = _number(params, "b0", 1.0, ctx)
    j12 = _number(params, "j12", 0.1, ctx)
    initial = params.get("initial", "00")
    if not (isinstance(initial, str) and set(initial) <= {"0", "1"} and len(initial) == 2):
        raise ConfigError(f'key "initial" in {ctx} must be a 2-bit string')
    shots = _integer(params, "shots", 0, ctx, minimum=0)
    gate = params.get("gate")
    if gate not in (None, "not", "cnot"):
        raise ConfigError(f'key "gate" in {ctx} must be "not" or "cnot"')
    state = spin.SpinState.basis(initial)
    if gate == "not":
        target = _integer(params, "target", 1, ctx, minimum=0)
        state = spin.apply_sequence(state, spin.compile_not(target), j12)
    elif gate == "cnot":
        control = _integer(params, "control", 0, ctx, minimum=0)
        target = _integer(params, "target", 1, ctx, minimum=0)
        state = spin.apply_sequence(state, spin.compile_cnot(control, target, j12), j12)
    columns = ["basis", "re", "im", "probability"]
    counts = None
    if shots > 0:
        counts = spin.measure(state, seed, shots)
        columns.append("counts")
    rows = []
    for i, a in enumerate(state.amplitudes):
        bits = format(i, "02b")
        row = [bits, a.real, a.imag, abs(a) ** 2]
        if counts is not None:
            row.append(counts.get(bits, 0))
        rows.append(row)
    return {"columns": columns, "rows": rows}


def _parse_elements(raw, context):
    if not isinstance(raw, list):
        raise ConfigError(f"{context} must be a list")
    elements = []
    for i, e in enumerate(raw):
        ctx = f"{context}[{i}]"
        if not isinstance(e, dict):
            raise ConfigError(f"{ctx} must be an object")
        kind = e.get("type")
        if kind == "waveplate":
            _strict(e, {"type", "delta", "theta", "modes"}, ctx)
            modes = e.get("modes")
            elements.append(
                jones.Waveplate(
                    _number(e, "delta", 0.0, ctx),
                    _number(e, "theta", 0.0, ctx),
                    tuple(modes) if modes is not None else None,
                )
            )
        elif kind == "rotator":
            _strict(e, {"type", "angle", "modes"}, ctx)
            modes = e.get("modes")
            elements.append(
                jones.Rotator(
                    _number(e, "angle", 0.0, ctx),
                    tuple(modes) if modes is not None else None,
                )
            )
        elif kind == "pbs_swap":
            _strict(e, {"type", "mode_a", "mode_b"}, ctx)
            elements.append(
                jones.PBSSwap(
                    _integer(e, "mode_a", None, ctx, minimum=0),
                    _integer(e, "mode_b", None, ctx, minimum=0),
                )
            )
        else:
            raise ConfigError(f'{ctx} has unknown element type "{kind}"')
    return elements


def run_jones(params, seed):
    ctx = "jones parameters"
    _strict(params, {"basis", "input", "elements", "gates"}, ctx)
    if "input" in params:
        raw = params["input"]
        if not isinstance(raw, list):
            raise ConfigError(f'key "input" in {ctx} must be a list of [re, im] pairs')
        amps = np.array(
            [_complex_pair({"a": pair}, "a", None, ctx) for pair in raw], dtype=complex
        )
    else:
        basis = params.get("basis", "0")
        if not (isinstance(basis, str) and basis and set(basis) <= {"0", "1"}):
            raise ConfigError(f'key "basis" in {ctx} must be a nonempty bit string')
        amps = np.zeros(2 ** len(basis), dtype=complex)
        amps[int(basis, 2)] = 1.0
    try:
        reg = jones.encode_state(amps)
    except ValueError as exc:
        raise ConfigError(f"{ctx}: {exc}")
    n = reg.n_qubits
    elements = _parse_elements(params.get("elements", []), f"{ctx} elements")
    gates_raw = params.get("gates", [])
    if not isinstance(gates_raw, list):
        raise ConfigError(f'key "gates" in {ctx} must be a list')
    networks = []
    for i, g in enumerate(gates_raw):
        gctx = f"{ctx} gates[{i}]"
        if not isinstance(g, dict):
            raise ConfigError(f"{gctx} must be an object")
        kind = g.get("type")
        if kind == "not":
            _strict(g, {"type", "qubit"}, gctx)
            networks += jones.not_network(n, _integer(g, "qubit", None, gctx, minimum=0))
        elif kind == "cnot":
            _strict(g, {"type", "control", "target"}, gctx)
            networks += jones.cnot_network(
                n,
                _integer(g, "control", None, gctx, minimum=0),
                _integer(g, "target", None, gctx, minimum=0),
            )
        else:
            raise ConfigError(f'{gctx} has unknown gate type "{kind}"')
    reg = jones.apply_network(reg, elements + networks)
    rows = [list(r) for r in jones.register_csv_rows(reg)]
    return {"columns": ["mode", "polarization", "re", "im", "power"], "rows": rows}


_RDS_KEYS = {
    "kappa_a", "kappa_b", "dk_a", "dk_b",
    "n_domains", "domain_length", "length", "grid_file",
    "a1", "a2", "a3", "steps_per_domain", "sample_stride",
    "gate", "beam_amplitude",
}


def _parse_rds(params):
    ctx = "rds parameters"
    _strict(params, _RDS_KEYS, ctx)
    dk_default = 2.0 * math.pi * 1e3
    try:
        p = rds.CoupledModeParams(
            kappa_a=_number(params, "kappa_a", 1.0, ctx),
            kappa_b=_number(params, "kappa_b", 1.0, ctx),
            dk_a=_number(params, "dk_a", dk_default, ctx),
            dk_b=_number(params, "dk_b", dk_default, ctx),
        )
    except ValueError as exc:
        raise ConfigError(f"{ctx}: {exc}")

    def resolve_dl():
        dl = params.get("domain_length", "coherence")
        if dl == "coherence":
            try:
                return rds.qpm_domain_length(p.dk_a)
            except rds.PhaseMatchedError as exc:
                raise ConfigError(f"{ctx}: {exc}")
        if isinstance(dl, (int, float)) and not isinstance(dl, bool) and dl > 0:
            return float(dl)
        raise ConfigError(f'key "domain_length" in {ctx} must be a positive number or "coherence"')

    try:
        if "grid_file" in params:
            grid = rds.DomainGrid.load(params["grid_file"])
        elif "length" in params:
            length = _number(params, "length", None, ctx)
            if "domain_length" in params:
                grid = rds.make_periodic_grid(length, resolve_dl())
            else:
                grid = rds.DomainGrid(np.array([length]), np.array([1.0]))
        else:
            n_domains = _integer(params, "n_domains", 100, ctx, minimum=1)
            dl = resolve_dl()
            grid = rds.make_periodic_grid(n_domains * dl, dl)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"{ctx}: invalid grid: {exc}")

    fields = rds.FieldTriple(
        _complex_pair(params, "a1", [0.1, 0.0], ctx),
        _complex_pair(params, "a2", [0.0, 0.0], ctx),
        _complex_pair(params, "a3", [0.0, 0.0], ctx),
    )
    steps = _integer(params, "steps_per_domain", rds.DEFAULT_STEPS_PER_DOMAIN, ctx, minimum=1)
    stride = _integer(params, "sample_stride", 1, ctx, minimum=1)
    gate = params.get("gate")
    if gate not in (None, "not", "cnot"):
        raise ConfigError(f'key "gate" in {ctx} must be "not" or "cnot"')
    amplitude = _number(params, "beam_amplitude", rds.DEFAULT_BEAM_AMPLITUDE, ctx)
    return p, grid, fields, steps, stride, gate, amplitude


def run_rds(params, seed):
    p, grid, fields, steps, stride, gate, amplitude = _parse_rds(params)
    step = float(grid.lengths.min()) / steps
    if gate is None:
        traj = rds.propagate(fields, grid, p, step)
        columns = ["z", "re_a1", "im_a1", "re_a2", "im_a2", "re_a3", "im_a3", "manley_rowe"]
        return {"columns": columns, "rows": [list(r) for r in traj.csv_rows(stride)]}
    cal = rds.calibrate_thresholds(grid, p, amplitude, step)
    if gate == "not":
        rows = []
        for x in (0, 1):
            y = rds.not_gate_rds(x, cal, grid, p, step)
            rows.append([x, y, min(cal.separation_sh, MARGIN_CAP), cal.p_th2])
        return {"columns": ["x", "y", "separation", "threshold"], "rows": rows}
    rows = []
    for x1 in (0, 1):
        for x2 in (0, 1):
            y1, y2 = rds.cnot_gate_rds(x1, x2, cal, grid, p, step)
            rows.append([x1, x2, y1, y2, min(cal.separation_th, MARGIN_CAP), cal.p_th3])
    return {"columns": ["x1", "x2", "y1", "y2", "separation", "threshold"], "rows": rows}


def run_stats(params, seed):
    ctx = "stats parameters"
    _strict(params, {"alpha", "r", "theta", "cutoff", "distribution"}, ctx)
    try:
        s = SqueezedStateParams(
            alpha=_complex_pair(params, "alpha", [0.0, 0.0], ctx),
            r=_number(params, "r", 0.0, ctx),
            theta=_number(params, "theta", 0.0, ctx),
        )
    except ValueError as exc:
        raise ConfigError(f"{ctx}: {exc}")
    distribution = params.get("distribution", False)
    if not isinstance(distribution, bool):
        raise ConfigError(f'key "distribution" in {ctx} must be a boolean')
    if distribution:
        cutoff = _integer(params, "cutoff", 400, ctx, minimum=1)
        p = fock_distribution(s, cutoff)
        return {"columns": ["n", "p"], "rows": [[int(n), float(x)] for n, x in enumerate(p)]}
    st = closed_form_stats(s)
    row = [s.alpha.real, s.alpha.imag, s.r, s.theta, st.mean_n, st.var_n, st.mandel_q, st.g2_zero]
    return {
        "columns": ["alpha_re", "alpha_im", "r", "theta", "mean_n", "var_n", "mandel_q", "g2_zero"],
        "rows": [row],
    }


_RUNNERS = {"spin": run_spin, "jones": run_jones, "rds": run_rds, "stats": run_stats}


# ---------------------------------------------------------------- truth tables


def _spin_reports(b0=1.0, j12=0.1):
    reports = []
    not_segs = spin.compile_not(1)
    not_fid = spin.gate_fidelity(
        permutation_matrix(not_permutation(2, 1)), spin.sequence_unitary(not_segs, 2, j12)
    )
    report = TruthTableReport("NOT", "spin")
    for (x,), (y,) in sorted(NOT_TABLE.items()):
        state = spin.apply_sequence(spin.SpinState.basis(f"0{x}"), not_segs, j12)
        observed = int(np.argmax(state.probabilities())) & 1
        report.rows.append(TruthTableRow((x,), (y,), (observed,), not_fid))
    reports.append(report)

    cnot_segs = spin.compile_cnot(0, 1, j12)
    cnot_fid = spin.gate_fidelity(
        permutation_matrix(cnot_permutation(2, 0, 1)), spin.sequence_unitary(cnot_segs, 2, j12)
    )
    report = TruthTableReport("CNOT", "spin")
    for (x1, x2), expected in sorted(CNOT_TABLE.items()):
        state = spin.apply_sequence(spin.SpinState.basis(f"{x1}{x2}"), cnot_segs, j12)
        k = int(np.argmax(state.probabilities()))
        report.rows.append(TruthTableRow((x1, x2), expected, (k >> 1, k & 1), cnot_fid))
    reports.append(report)
    return reports


def _jones_reports():
    reports = []
    report = TruthTableReport("NOT", "jones")
    for (x,), (y,) in sorted(NOT_TABLE.items()):
        amps = np.zeros(4, dtype=complex)
        amps[x] = 1.0
        out = jones.decode_state(jones.not_gate(jones.encode_state(amps), 1))
        k = int(np.argmax(np.abs(out) ** 2))
        report.rows.append(TruthTableRow((x,), (y,), (k & 1,), float(abs(out[k]) ** 2)))
    reports.append(report)

    report = TruthTableReport("CNOT", "jones")
    for (x1, x2), expected in sorted(CNOT_TABLE.items()):
        amps = np.zeros(4, dtype=complex)
        amps[2 * x1 + x2] = 1.0
        out = jones.decode_state(jones.cnot_gate(jones.encode_state(amps), 0, 1))
        k = int(np.argmax(np.abs(out) ** 2))
        report.rows.append(TruthTableRow((x1, x2), expected, (k >> 1, k & 1), float(abs(out[k]) ** 2)))
    reports.append(report)
    return reports


def _rds_reports():
    p = rds.default_params()
    grid = rds.default_grid(p)
    cal = rds.calibrate_thresholds(grid, p, rds.DEFAULT_BEAM_AMPLITUDE)
    reports = []
    report = TruthTableReport("NOT", "rds")
    for (x,), (y,) in sorted(NOT_TABLE.items()):
        observed = rds.not_gate_rds(x, cal, grid, p)
        report.rows.append(TruthTableRow((x,), (y,), (observed,), min(cal.separation_sh, MARGIN_CAP)))
    reports.append(report)
    report = TruthTableReport("CNOT", "rds")
    for (x1, x2), expected in sorted(CNOT_TABLE.items()):
        observed = rds.cnot_gate_rds(x1, x2, cal, grid, p)
        report.rows.append(TruthTableRow((x1, x2), expected, observed, min(cal.separation_th, MARGIN_CAP)))
    reports.append(report)
    return reports


def verify_truth_tables(backends=("spin", "jones", "rds")):
    """One NOT and one CNOT report per backend, all against the same tables."""
    builders = {"spin": _spin_reports, "jones": _jones_reports, "rds": _rds_reports}
    reports = []
    for b in backends:
        if b not in builders:
            raise ConfigError(f'unknown truth-table backend "{b}"')
    for b in backends:
        try:
            reports.extend(builders[b]())
        except Exception as exc:  # isolate failures per backend
            reports.append(TruthTableReport("NOT+CNOT", b, rows=[], error=str(exc)))
    return reports


# ---------------------------------------------------------------- sweeps


def _rds_sweep_row(params, name, value):
    params = dict(params)
    if name == "length":
        params["length"] = value
    elif name in ("dk_a", "kappa_a"):
        params[name] = value
    elif name == "beam_amplitude":
        params["a1"] = [value, 0.0]
    else:
        raise ConfigError(f'unknown sweep parameter "{name}" for backend rds')
    params.pop("gate", None)
    p, grid, fields, steps, _, _, _ = _parse_rds(params)
    traj = rds.propagate(fields, grid, p, float(grid.lengths.min()) / steps)
    p1_in = abs(fields.a1) ** 2
    p1, p2, p3 = traj.final.powers()
    n = traj.manley_rowe()
    drift = float(np.max(np.abs(n - n[0])) / n[0]) if n[0] > 0 else 0.0
    eff = p2 / p1_in if p1_in > 0 else 0.0
    return [value, p1, p2, p3, eff, drift], [
        "value", "p1_out", "p2_out", "p3_out", "efficiency_sh", "manley_drift",
    ]


def _stats_sweep_row(params, name, value):
    params = dict(params)
    params.pop("distribution", None)
    alpha = params.get("alpha", [0.0, 0.0])
    if name == "r":
        params["r"] = value
    elif name == "theta":
        params["theta"] = value
    elif name == "alpha_re":
        params["alpha"] = [value, alpha[1]]
    elif name == "alpha_im":
        params["alpha"] = [alpha[0], value]
    else:
        raise ConfigError(f'unknown sweep parameter "{name}" for backend stats')
    payload = run_stats(params, 0)
    row = payload["rows"][0]
    return [value] + row[4:], ["value", "mean_n", "var_n", "mandel_q", "g2_zero"]


def _spin_sweep_row(params, name, value):
    if name not in ("b0", "j12"):
        raise ConfigError(f'unknown sweep parameter "{name}" for backend spin')
    params = dict(params)
    params[name] = value
    ctx = "spin parameters"
    j12 = _number(params, "j12", 0.1, ctx)
    gate = params.get("gate", "cnot")
    if gate == "not":
        target = _integer(params, "target", 1, ctx, minimum=0)
        segs = spin.compile_not(target)
        ideal = permutation_matrix(not_permutation(2, target))
    else:
        control = _integer(params, "control", 0, ctx, minimum=0)
        target = _integer(params, "target", 1, ctx, minimum=0)
        segs = spin.compile_cnot(control, target, j12)
        ideal = permutation_matrix(cnot_permutation(2, control, target))
    fid = spin.gate_fidelity(ideal, spin.sequence_unitary(segs, 2, j12))
    return [value, fid], ["value", "fidelity"]


def run_sweep(cfg):
    sweep = cfg["sweep"]
    if sweep is None:
        raise ConfigError("sweep command requires a sweep section in the config")
    backend = cfg["backend"]
    rowers = {"rds": _rds_sweep_row, "stats": _stats_sweep_row, "spin": _spin_sweep_row}
    if backend not in rowers:
        raise ConfigError(f'backend "{backend}" has no sweepable parameters')
    name = sweep["parameter"]
    values = np.linspace(sweep["start"], sweep["stop"], sweep["count"])
    rows = []
    columns = None
    for v in values:
        row, columns = rowers[backend](cfg["parameters"], name, float(v))
        rows.append(row)
    return {"columns": columns, "rows": rows}


# ---------------------------------------------------------------- commands


def cmd_run(args):
    cfg = load_config(args.config)
    if cfg["sweep"] is not None:
        raise ConfigError("config contains a sweep section; use the sweep command")
    seed = cfg["seed"] if args.seed is None else args.seed
    payload = _RUNNERS[cfg["backend"]](cfg["parameters"], seed)
    out, fmt = _resolve_output(cfg, args)
    write_payload(payload, out, fmt)
    return EXIT_OK


def cmd_sweep(args):
    cfg = load_config(args.config)
    payload = run_sweep(cfg)
    out, fmt = _resolve_output(cfg, args)
    write_payload(payload, out, fmt)
    return EXIT_OK


def _resolve_output(cfg, args):
    out = getattr(args, "out", None)
    fmt = "csv"
    if cfg["output"] is not None:
        fmt = cfg["output"].get("format", "csv")
        if out is None:
            out = cfg["output"].get("path")
    return out, fmt


def cmd_truthtable(args):
    backends = tuple(b.strip() for b in args.backends.split(",") if b.strip())
    if not backends:
        raise ConfigError("no backends requested")
    reports = verify_truth_tables(backends)
    for rep in reports:
        if rep.error is not None:
            print(f"[{rep.backend}] {rep.gate}: ERROR {rep.error}", file=sys.stderr)
            continue
        for row in rep.rows:
            bits_in = "".join(map(str, row.inputs))
            print(
                f"[{rep.backend}] {rep.gate}: in={bits_in} "
                f"expected={''.join(map(str, row.expected))} "
                f"observed={''.join(map(str, row.observed))} "
                f"margin={row.margin:.12g}"
            )
        print(f"[{rep.backend}] {rep.gate}: {'PASS' if rep.passed else 'FAIL'}")
    if args.out:
        with open(args.out, "w", newline="") as f:
            f.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_PHYSICS


def cmd_version(args):
    print(pkg_version("oqcsim"))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oqcsim", description="Deterministic quantum-gate simulation harness"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute one experiment config")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--seed", type=int, default=None)
    p_run.add_argument("--out", default=None)
    p_run.set_defaults(func=cmd_run)

    p_tt = sub.add_parser("truthtable", help="verify NOT/CNOT tables across backends")
    p_tt.add_argument("--backends", default="spin,jones,rds")
    p_tt.add_argument("--out", default=None)
    p_tt.set_defaults(func=cmd_truthtable)

    p_sw = sub.add_parser("sweep", help="run a one-parameter sweep")
    p_sw.add_argument("--config", required=True)
    p_sw.add_argument("--out", default=None)
    p_sw.set_defaults(func=cmd_sweep)

    p_v = sub.add_parser("version", help="print the package version")
    p_v.set_defaults(func=cmd_version)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (rds.CalibrationError, CutoffError, spin.GateCompilationError) as exc:
        print(f"physics error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
