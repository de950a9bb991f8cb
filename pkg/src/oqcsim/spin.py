"""Two-nuclear-spin register simulation.

The register Hamiltonian is H = b0*(sz1 + sz2) + j12*sz1*sz2 (hbar = 1,
angular-frequency units), diagonal in the computational basis ordered
|00>, |01>, |10>, |11> with spin 0 leftmost.  Gates are compiled from
idealized hard pulses in the doubly-rotating frame: instantaneous
single-spin rotations about axes in the xy plane, plus free evolution
under the j-coupling term alone (Zeeman terms absorbed by the frame).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

NORM_TOL = 1e-10


class GateCompilationError(ValueError):
    """Requested gate cannot be realized with the given parameters."""


def _check_finite(**values):
    for name, v in values.items():
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class SpinState:
    """Normalized amplitude vector over the 2**n computational basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        object.__setattr__(self, "amplitudes", amps)
        dim = amps.size
        if dim < 2 or dim & (dim - 1):
            raise ValueError(f"dimension {dim} is not 2**n with n >= 1")
        if abs(np.linalg.norm(amps) - 1.0) > 1e-8:
            raise ValueError("state is not normalized")

    @property
    def n_spins(self):
        return self.amplitudes.size.bit_length() - 1

    @classmethod
    def basis(cls, bits: str) -> "SpinState":
        """Computational basis state from a bit string, e.g. '01'."""
        amps = np.zeros(2 ** len(bits), dtype=complex)
        amps[int(bits, 2)] = 1.0
        return cls(amps)

    def probabilities(self):
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class TwoSpinHamiltonian:
    """Zeeman + hyperfine coupling, diagonal in the sz basis."""

    b0: float
    j12: float

    def __post_init__(self):
        _check_finite(b0=self.b0, j12=self.j12)

    def energies(self):
        """Diagonal E(s1,s2) = b0*(s1+s2) + j12*s1*s2, s = +1 for bit 0."""
        e = np.empty(4)
        for i in range(4):
            s1 = 1.0 - 2.0 * ((i >> 1) & 1)
            s2 = 1.0 - 2.0 * (i & 1)
            e[i] = self.b0 * (s1 + s2) + self.j12 * s1 * s2
        return e

    def matrix(self):
        return np.diag(self.energies()).astype(complex)


def build_hamiltonian(b0: float, j12: float) -> TwoSpinHamiltonian:
    return TwoSpinHamiltonian(b0, j12)


@dataclass(frozen=True)
class HardRotation:
    """Instantaneous rotation exp(-i(theta/2)(cos(phi) sx + sin(phi) sy))."""

    spin: int
    axis_angle: float
    rotation_angle: float

    def matrix(self):
        axis = math.cos(self.axis_angle) * SIGMA_X + math.sin(self.axis_angle) * SIGMA_Y
        half = 0.5 * self.rotation_angle
        return math.cos(half) * np.eye(2) - 1j * math.sin(half) * axis


@dataclass(frozen=True)
class FreeCouplingEvolution:
    """Free evolution under the j-coupling term for a duration tau >= 0."""

    duration: float

    def __post_init__(self):
        if not (self.duration >= 0.0 and math.isfinite(self.duration)):
            raise ValueError(f"duration must be finite and >= 0, got {self.duration}")


PulseSegment = Union[HardRotation, FreeCouplingEvolution]


def evolve(state: SpinState, h: TwoSpinHamiltonian, t: float) -> SpinState:
    """Propagate by exp(-i H t); H is diagonal so only phases change."""
    _check_finite(t=t)
    if state.amplitudes.size != 4:
        raise ValueError("TwoSpinHamiltonian acts on a 2-spin register")
    return SpinState(np.exp(-1j * h.energies() * t) * state.amplitudes)


def segment_unitary(seg: PulseSegment, n: int, j12: float) -> np.ndarray:
    """Full-register unitary realized by one pulse segment."""
    if isinstance(seg, HardRotation):
        if not 0 <= seg.spin < n:
            raise ValueError(f"spin index {seg.spin} out of range for n={n}")
        u = np.eye(1, dtype=complex)
        for k in range(n):
            u = np.kron(u, seg.matrix() if k == seg.spin else np.eye(2))
        return u
    if isinstance(seg, FreeCouplingEvolution):
        if n != 2:
            raise ValueError("coupling evolution is defined for the 2-spin register")
        zz = np.array([1.0, -1.0, -1.0, 1.0])
        return np.diag(np.exp(-1j * j12 * zz * seg.duration))
    raise TypeError(f"unknown pulse segment {seg!r}")


def sequence_unitary(segments: Sequence[PulseSegment], n: int, j12: float) -> np.ndarray:
    """Compose segments in application order (first segment acts first)."""
    u = np.eye(2**n, dtype=complex)
    for seg in segments:
        u = segment_unitary(seg, n, j12) @ u
    return u


def apply_pulse(state: SpinState, seg: PulseSegment, j12: float = 0.0) -> SpinState:
    return SpinState(segment_unitary(seg, state.n_spins, j12) @ state.amplitudes)


def apply_sequence(state, segments, j12):
    for seg in segments:
        state = apply_pulse(state, seg, j12)
    return state


def _rz_segments(spin, angle):
    # Rz(angle) = Rx(pi/2) Ry(angle) Rx(-pi/2), listed in application order
    return [
        HardRotation(spin, 0.0, -math.pi / 2),
        HardRotation(spin, math.pi / 2, angle),
        HardRotation(spin, 0.0, math.pi / 2),
    ]


def _hadamard_segments(spin):
    # H = Ry(pi/2) * Z up to global phase; Z realized as Rz(pi)
    return _rz_segments(spin, math.pi) + [HardRotation(spin, math.pi / 2, math.pi / 2)]


def compile_not(target: int) -> list:
    """Pulse sequence realizing NOT on one spin (X up to global phase)."""
    if target < 0:
        raise ValueError("target must be a valid spin index")
    return [HardRotation(target, 0.0, math.pi)]


def compile_cnot(control: int, target: int, j12: float) -> list:
    """Pulse sequence realizing CNOT on the 2-spin register.

    Canonical decomposition: basis change on the target, j-coupling delay
    tau = pi/(4|j12|), z-rotations on both spins, closing basis change.
    Requires a nonzero coupling; the delay supplies the entangling phase.
    """
    if control == target or not {control, target} <= {0, 1}:
        raise ValueError("control and target must be distinct spins of a 2-spin register")
    if j12 == 0.0:
        raise GateCompilationError("CNOT is uncompilable with j12 = 0 (no coupling)")
    tau = math.pi / (4.0 * abs(j12))
    # exp(-i*j12*zz*tau) = exp(-+i*(pi/4)*zz); the z-rotation sign closes CZ
    z_angle = -math.pi / 2 if j12 > 0 else math.pi / 2
    segs = list(_hadamard_segments(target))
    segs.append(FreeCouplingEvolution(tau))
    segs += _rz_segments(control, z_angle)
    segs += _rz_segments(target, z_angle)
    segs += _hadamard_segments(target)
    return segs


def gate_fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """|Tr(u^dag v)| / dim, invariant under global phases of u and v."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape or u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return float(abs(np.trace(u.conj().T @ v)) / u.shape[0])


def measure(state: SpinState, seed: int, shots: int) -> dict:
    """Sample basis outcomes; deterministic for a fixed seed.

    Returns a bit-string -> count histogram summing to `shots`.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    probs = state.probabilities()
    total = probs.sum()
    if total <= 0.0:
        raise ValueError("cannot measure a zero-norm state")
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs / total)
    n = state.n_spins
    return {format(i, f"0{n}b"): int(c) for i, c in enumerate(counts) if c > 0}


def gate_matrix_csv(u: np.ndarray) -> str:
    """Row-major CSV of 're,im' pairs, 17 significant digits."""
    lines = []
    for row in np.asarray(u, dtype=complex):
        cells = []
        for z in row:
            cells.append(format(z.real, ".17g"))
            cells.append(format(z.imag, ".17g"))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
