"""Cascaded harmonic generation in a sign-alternating (RDS) crystal.

Field envelopes a1, a2, a3 at the fundamental, second and third harmonic
obey the cascaded SHG + SFG coupled-mode system

    da1/dz = i s(z) [ kA a1* a2 e^{+i dkA z} + kB a2* a3 e^{+i dkB z} ]
    da2/dz = i s(z) [ (kA/2) a1^2 e^{-i dkA z} + kB a1* a3 e^{+i dkB z} ]
    da3/dz = i s(z) [ kB a1 a2 e^{-i dkB z} ]

with s(z) = +/-1 the local domain sign.  Photon-flux normalization makes
N = |a1|^2 + 2|a2|^2 + 3|a3|^2 exactly conserved.  Integration is
classical fixed-step RK4 with steps aligned to domain boundaries, so the
discontinuous s(z) never falls inside a step.

Logic gates use phase coding: a bit b enters as an amplitude factor
(-1)**b, interfered with an equal zero-phase bias beam, and the gate
output is a threshold comparison on the second-harmonic (NOT) or
third-harmonic (CNOT target) output power.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

# Dark logic levels can be exactly zero (perfect destructive interference);
# they are floored at this fraction of the bright level before ratios.
DARK_FLOOR_RATIO = 1e-30

DEFAULT_STEPS_PER_DOMAIN = 16
DEFAULT_BEAM_AMPLITUDE = 0.1


class PhaseMatchedError(ValueError):
    """dk = 0: the process is already phase matched, poling is unnecessary."""


class CalibrationError(RuntimeError):
    """Logic levels are not separable; thresholds cannot be set."""


@dataclass(frozen=True)
class DomainGrid:
    """Ordered sequence of (length, sign) nonlinear domains."""

    lengths: np.ndarray
    signs: np.ndarray

    def __post_init__(self):
        lengths = np.array(self.lengths, dtype=float)
        signs = np.array(self.signs, dtype=float)
        if lengths.size == 0:
            raise ValueError("grid must contain at least one domain")
        if lengths.shape != signs.shape:
            raise ValueError("lengths and signs must have equal shape")
        if not np.all(lengths > 0.0):
            raise ValueError("all domain lengths must be positive")
        if not np.all(np.isin(signs, (1.0, -1.0))):
            raise ValueError("domain signs must be +1 or -1")
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "signs", signs)

    @property
    def n_domains(self):
        return self.lengths.size

    @property
    def total_length(self):
        return float(self.lengths.sum())

    def reversed(self) -> "DomainGrid":
        """Mirror the grid: reverse domain order and flip every sign."""
        return DomainGrid(self.lengths[::-1].copy(), -self.signs[::-1])

    def save(self, path):
        with open(path, "w") as f:
            for length, sign in zip(self.lengths, self.signs):
                f.write(f"{length:.17g} {int(sign):+d}\n")

    @classmethod
    def load(cls, path) -> "DomainGrid":
        lengths, signs = [], []
        with open(path) as f:
            for line in f:
                line = line.strip()
                if not line:
                    continue
                length, sign = line.split()
                lengths.append(float(length))
                signs.append(float(sign))
        return cls(np.array(lengths), np.array(signs))


@dataclass(frozen=True)
class CoupledModeParams:
    kappa_a: float  # SHG coupling, 1/(m * amplitude)
    kappa_b: float  # SFG coupling
    dk_a: float  # k2 - 2 k1, 1/m
    dk_b: float  # k3 - k2 - k1, 1/m

    def __post_init__(self):
        for name in ("kappa_a", "kappa_b", "dk_a", "dk_b"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite")
        if self.kappa_a < 0 or self.kappa_b < 0:
            raise ValueError("coupling coefficients must be >= 0")


@dataclass(frozen=True)
class FieldTriple:
    a1: complex
    a2: complex
    a3: complex

    def manley_rowe(self):
        return abs(self.a1) ** 2 + 2 * abs(self.a2) ** 2 + 3 * abs(self.a3) ** 2

    def powers(self):
        return (abs(self.a1) ** 2, abs(self.a2) ** 2, abs(self.a3) ** 2)


@dataclass
class Trajectory:
    """Sampled fields along the crystal, including both end points."""

    z: np.ndarray
    fields: np.ndarray  # shape (K, 3), complex

    @property
    def final(self) -> FieldTriple:
        a = self.fields[-1]
        return FieldTriple(complex(a[0]), complex(a[1]), complex(a[2]))

    def manley_rowe(self):
        p = np.abs(self.fields) ** 2
        return p[:, 0] + 2 * p[:, 1] + 3 * p[:, 2]

    def csv_rows(self, stride=1):
        rows = []
        n = self.manley_rowe()
        idx = list(range(0, len(self.z), stride))
        if idx[-1] != len(self.z) - 1:
            idx.append(len(self.z) - 1)
        for i in idx:
            a1, a2, a3 = self.fields[i]
            rows.append(
                (self.z[i], a1.real, a1.imag, a2.real, a2.imag, a3.real, a3.imag, n[i])
            )
        return rows


def qpm_domain_length(dk: float) -> float:
    """First-order QPM domain (coherence) length pi/|dk|."""
    if dk == 0.0:
        raise PhaseMatchedError("dk = 0 is already phase matched; poling is unnecessary")
    return math.pi / abs(dk)


def make_periodic_grid(total_length: float, domain_length: float, first_sign: int = 1) -> DomainGrid:
    """Equal alternating domains; a final partial domain absorbs the remainder."""
    if not (total_length >= domain_length > 0.0):
        raise ValueError(
            f"need total_length >= domain_length > 0, got {total_length}, {domain_length}"
        )
    if first_sign not in (1, -1):
        raise ValueError("first_sign must be +1 or -1")
    n_full = int(total_length / domain_length)
    remainder = total_length - n_full * domain_length
    lengths = [domain_length] * n_full
    if remainder > 1e-12 * total_length:
        lengths.append(remainder)
    signs = [first_sign * (-1) ** i for i in range(len(lengths))]
    return DomainGrid(np.array(lengths), np.array(signs, dtype=float))


def _derivs(z, a1, a2, a3, s, p):
    ea = cmath.exp(1j * p.dk_a * z)
    eb = cmath.exp(1j * p.dk_b * z)
    d1 = 1j * s * (p.kappa_a * a1.conjugate() * a2 * ea + p.kappa_b * a2.conjugate() * a3 * eb)
    d2 = 1j * s * (0.5 * p.kappa_a * a1 * a1 * ea.conjugate() + p.kappa_b * a1.conjugate() * a3 * eb)
    d3 = 1j * s * (p.kappa_b * a1 * a2 * eb.conjugate())
    return d1, d2, d3


def propagate(fields: FieldTriple, grid: DomainGrid, params: CoupledModeParams, step: float) -> Trajectory:
    """Fixed-step RK4 through the grid; steps never cross a domain boundary.

    Within each domain the requested step is shrunk to an integer divisor
    of the domain length, preserving 4th-order accuracy across the
    discontinuous sign profile.
    """
    if not (step > 0.0 and math.isfinite(step)):
        raise ValueError(f"step must be positive and finite, got {step}")
    a1, a2, a3 = complex(fields.a1), complex(fields.a2), complex(fields.a3)
    z = 0.0
    zs = [0.0]
    traj = [(a1, a2, a3)]
    for length, s in zip(grid.lengths, grid.signs):
        n_steps = max(1, math.ceil(length / step - 1e-12))
        h = length / n_steps
        for _ in range(n_steps):
            k1 = _derivs(z, a1, a2, a3, s, params)
            k2 = _derivs(
                z + 0.5 * h,
                a1 + 0.5 * h * k1[0], a2 + 0.5 * h * k1[1], a3 + 0.5 * h * k1[2],
                s, params,
            )
            k3 = _derivs(
                z + 0.5 * h,
                a1 + 0.5 * h * k2[0], a2 + 0.5 * h * k2[1], a3 + 0.5 * h * k2[2],
                s, params,
            )
            k4 = _derivs(
                z + h,
                a1 + h * k3[0], a2 + h * k3[1], a3 + h * k3[2],
                s, params,
            )
            a1 += h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
            a2 += h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
            a3 += h / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])
            z += h
            zs.append(z)
            traj.append((a1, a2, a3))
    return Trajectory(np.array(zs), np.array(traj, dtype=complex))


def default_step(grid: DomainGrid, steps_per_domain: int = DEFAULT_STEPS_PER_DOMAIN) -> float:
    return float(grid.lengths.min()) / steps_per_domain


def default_params() -> CoupledModeParams:
    """Desk-scale defaults: unit couplings, dk = 2*pi*1e3 1/m on both legs."""
    dk = 2.0 * math.pi * 1e3
    return CoupledModeParams(kappa_a=1.0, kappa_b=1.0, dk_a=dk, dk_b=dk)


def default_grid(params: CoupledModeParams | None = None, n_domains: int = 100) -> DomainGrid:
    """First-order QPM grid of n_domains coherence lengths."""
    p = params or default_params()
    lc = qpm_domain_length(p.dk_a)
    return make_periodic_grid(n_domains * lc, lc)


def qpm_enhancement_check(
    params: CoupledModeParams,
    n_domains: int,
    steps_per_domain: int = 32,
    poled: bool = True,
) -> float:
    """SH growth-rate ratio of a (quasi-)phase-matched grid vs perfect matching.

    Undepleted regime enforced by scaling the pump so kappa_a*|a1|*L = 1e-3;
    the poled ratio converges to 2/pi as n_domains grows, the unpoled
    (uniform mismatched) ratio decays towards zero.
    """
    if params.dk_a == 0.0:
        raise ValueError("QPM check needs a nonzero dk_a")
    if params.kappa_b != 0.0:
        raise ValueError("QPM check is defined for the pure SHG channel (kappa_b = 0)")
    lc = qpm_domain_length(params.dk_a)
    total = n_domains * lc
    if poled:
        grid = make_periodic_grid(total, lc)
    else:
        grid = DomainGrid(np.array([total]), np.array([1.0]))
    pump = 1e-3 / (params.kappa_a * total)
    traj = propagate(
        FieldTriple(pump, 0.0, 0.0), grid, params, step=lc / steps_per_domain
    )
    matched_amp = 0.5 * params.kappa_a * pump**2 * total
    return abs(traj.final.a2) / matched_amp


@dataclass(frozen=True)
class LogicThresholds:
    """Calibrated decision levels for the SH (NOT) and TH (CNOT) channels."""

    p_th2: float
    p_th3: float
    bias_amplitude: float
    separation_sh: float
    separation_th: float


def _pump_not(x: int, amplitude: float) -> complex:
    # phase-coded bit interfered with an equal-amplitude zero-phase bias
    return complex(amplitude * ((-1.0) ** x + 1.0))


def _pump_cnot(x1: int, x2: int, amplitude: float) -> complex:
    return complex(amplitude * ((-1.0) ** x1 + (-1.0) ** x2))


def _output_powers(pump, grid, params, step):
    final = propagate(FieldTriple(pump, 0.0, 0.0), grid, params, step).final
    return abs(final.a2) ** 2, abs(final.a3) ** 2


def calibrate_thresholds(
    grid: DomainGrid,
    params: CoupledModeParams,
    beam_amplitude: float,
    step: float | None = None,
) -> LogicThresholds:
    """Simulate all logic inputs and place thresholds between the levels.

    Each threshold sits at the geometric mean of the bright and dark
    output-power levels of its channel (dark levels floored, since perfect
    destructive interference yields exactly zero power).  Raises
    CalibrationError when the levels are separated by less than a factor 2.
    Thresholds are only valid for this beam amplitude; changing the
    amplitude requires recalibration.
    """
    if beam_amplitude <= 0:
        raise ValueError("beam_amplitude must be positive")
    step = step if step is not None else default_step(grid)

    sh = {x: _output_powers(_pump_not(x, beam_amplitude), grid, params, step)[0] for x in (0, 1)}
    th = {
        (x1, x2): _output_powers(_pump_cnot(x1, x2, beam_amplitude), grid, params, step)[1]
        for x1 in (0, 1)
        for x2 in (0, 1)
    }

    sh_high, sh_low = sh[0], sh[1]
    th_high = min(th[(0, 0)], th[(1, 1)])
    th_low = max(th[(0, 1)], th[(1, 0)])

    def separation(high, low):
        if high <= 0.0:
            return 0.0
        return high / max(low, high * DARK_FLOOR_RATIO)

    sep_sh = separation(sh_high, sh_low)
    sep_th = separation(th_high, th_low)
    if sep_sh < 2.0 or sep_th < 2.0:
        raise CalibrationError(
            "logic levels not separable: "
            f"SH bright={sh_high:.3e} dark={sh_low:.3e}, "
            f"TH bright={th_high:.3e} dark={th_low:.3e}"
        )
    p_th2 = math.sqrt(sh_high * max(sh_low, sh_high * DARK_FLOOR_RATIO))
    p_th3 = math.sqrt(th_high * max(th_low, th_high * DARK_FLOOR_RATIO))
    return LogicThresholds(p_th2, p_th3, beam_amplitude, sep_sh, sep_th)


def not_gate_rds(
    x: int,
    cal: LogicThresholds,
    grid: DomainGrid,
    params: CoupledModeParams,
    step: float | None = None,
) -> int:
    """NOT via the SH channel: output 1 iff P2(L) >= threshold."""
    if x not in (0, 1):
        raise ValueError("input bit must be 0 or 1")
    step = step if step is not None else default_step(grid)
    p2, _ = _output_powers(_pump_not(x, cal.bias_amplitude), grid, params, step)
    return 1 if p2 >= cal.p_th2 else 0


def cnot_gate_rds(
    x1: int,
    x2: int,
    cal: LogicThresholds,
    grid: DomainGrid,
    params: CoupledModeParams,
    step: float | None = None,
) -> Tuple[int, int]:
    """CNOT: control passes through, target = 1 iff P3(L) < threshold.

    Equal bits interfere constructively, driving the cascaded third
    harmonic high; the XOR target output is the complement of that
    predicate, hence the inverted comparison.
    """
    for x in (x1, x2):
        if x not in (0, 1):
            raise ValueError("input bits must be 0 or 1")
    if params.kappa_b <= 0.0:
        raise ValueError("CNOT needs an active SFG channel (kappa_b > 0)")
    step = step if step is not None else default_step(grid)
    _, p3 = _output_powers(_pump_cnot(x1, x2, cal.bias_amplitude), grid, params, step)
    return x1, 1 if p3 < cal.p_th3 else 0
