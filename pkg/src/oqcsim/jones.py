"""Polarization-mode optics on a register of spatial modes.

n qubits live in M = 2**(n-1) spatial modes times two polarizations:
basis index k maps to spatial mode k >> 1 and polarization k & 1
(H = 0, V = 1), i.e. the last qubit is the polarization bit and the
remaining qubits form the spatial-mode index (qubit 0 most significant).
Gates are networks of waveplates, rotators and polarizing beam splitters
acting on classical coherent amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

H, V = 0, 1

_HALF_WAVE_45 = None  # built lazily below


def rotation(angle: float) -> np.ndarray:
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, -s], [s, c]], dtype=complex)


def waveplate_matrix(delta: float, theta: float) -> np.ndarray:
    """Retarder with retardance delta, fast axis at angle theta."""
    return rotation(theta) @ np.diag([1.0, np.exp(1j * delta)]) @ rotation(-theta)


def rotator_matrix(angle: float) -> np.ndarray:
    return rotation(angle)


def su2_part(m: np.ndarray) -> np.ndarray:
    """Divide out the global phase so the determinant is exactly 1."""
    det = np.linalg.det(m)
    return m / np.sqrt(det)


@dataclass(frozen=True)
class Waveplate:
    delta: float
    theta: float
    modes: Optional[Tuple[int, ...]] = None  # None = all spatial modes

    def jones(self):
        return waveplate_matrix(self.delta, self.theta)


@dataclass(frozen=True)
class Rotator:
    angle: float
    modes: Optional[Tuple[int, ...]] = None

    def jones(self):
        return rotator_matrix(self.angle)


@dataclass(frozen=True)
class PBSSwap:
    """PBS pair routing: H stays put, V amplitudes swap between two modes."""

    mode_a: int
    mode_b: int


OpticalElement = object  # Waveplate | Rotator | PBSSwap


@dataclass(frozen=True)
class ModeRegister:
    """Complex field amplitudes, shape (M, 2), M a power of two."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 2 or amps.shape[1] != 2:
            raise ValueError("amplitudes must have shape (M, 2)")
        m = amps.shape[0]
        if m < 1 or m & (m - 1):
            raise ValueError(f"mode count {m} is not a power of two")
        if abs(np.sum(np.abs(amps) ** 2) - 1.0) > 1e-8:
            raise ValueError("total power is not normalized")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n_modes(self):
        return self.amplitudes.shape[0]

    @property
    def n_qubits(self):
        # M = 2**(n-1) modes, so for a power-of-two M this is log2(M) + 1
        return self.n_modes.bit_length()

    @property
    def total_power(self):
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def encode_state(qubit_amplitudes) -> ModeRegister:
    """Map 2**n qubit amplitudes onto (spatial mode, polarization) slots."""
    amps = np.asarray(qubit_amplitudes, dtype=complex)
    dim = amps.size
    if dim < 2 or dim & (dim - 1):
        raise ValueError(f"amplitude count {dim} is not 2**n with n >= 1")
    if abs(np.linalg.norm(amps) - 1.0) > 1e-8:
        raise ValueError("input amplitudes are not normalized")
    reg = np.zeros((dim // 2, 2), dtype=complex)
    for k, a in enumerate(amps):
        reg[k >> 1, k & 1] = a
    return ModeRegister(reg)


def decode_state(reg: ModeRegister) -> np.ndarray:
    """Exact inverse of encode_state."""
    m = reg.n_modes
    out = np.empty(2 * m, dtype=complex)
    for mode in range(m):
        out[2 * mode + H] = reg.amplitudes[mode, H]
        out[2 * mode + V] = reg.amplitudes[mode, V]
    return out


def _target_modes(element, n_modes):
    if element.modes is None:
        return range(n_modes)
    for m in element.modes:
        if not 0 <= m < n_modes:
            raise ValueError(f"mode index {m} out of range")
    return element.modes


def apply_element(reg: ModeRegister, element) -> ModeRegister:
    """Apply one lossless element; untouched modes are copied bit-exactly."""
    amps = reg.amplitudes.copy()
    if isinstance(element, PBSSwap):
        a, b = element.mode_a, element.mode_b
        if not (0 <= a < reg.n_modes and 0 <= b < reg.n_modes) or a == b:
            raise ValueError(f"invalid PBS mode pair ({a}, {b})")
        amps[a, V], amps[b, V] = amps[b, V], amps[a, V]
    elif isinstance(element, (Waveplate, Rotator)):
        j = element.jones()
        for m in _target_modes(element, reg.n_modes):
            amps[m] = j @ amps[m]
    else:
        raise TypeError(f"unknown optical element {element!r}")
    return ModeRegister(amps)


def apply_network(reg: ModeRegister, elements) -> ModeRegister:
    for e in elements:
        reg = apply_element(reg, e)
    return reg


def _spatial_bit(n_qubits, qubit):
    # qubit 0 is the most significant spatial bit; the last qubit is polarization
    return n_qubits - 2 - qubit


def _full_swap(m1, m2):
    # PBS/half-wave-plate interleave exchanging both polarizations of a pair
    hwp = Waveplate(np.pi, np.pi / 4, modes=(m1, m2))
    pbs = PBSSwap(m1, m2)
    return [pbs, hwp, pbs, hwp]


def not_network(n_qubits: int, qubit: int) -> list:
    """Element list realizing NOT on one encoded qubit."""
    if not 0 <= qubit < n_qubits:
        raise ValueError(f"qubit {qubit} out of range for n={n_qubits}")
    if qubit == n_qubits - 1:
        # polarization qubit: half-wave plate at 45 degrees is exactly sigma_x
        return [Waveplate(np.pi, np.pi / 4)]
    bit = _spatial_bit(n_qubits, qubit)
    n_modes = 2 ** (n_qubits - 1)
    elements = []
    for m in range(n_modes):
        if not (m >> bit) & 1:
            elements += _full_swap(m, m | (1 << bit))
    return elements


def cnot_network(n_qubits: int, control: int, target: int) -> list:
    """Element list realizing CNOT between two encoded qubits."""
    if control == target:
        raise ValueError("control and target must differ")
    for q in (control, target):
        if not 0 <= q < n_qubits:
            raise ValueError(f"qubit {q} out of range for n={n_qubits}")
    n_modes = 2 ** (n_qubits - 1)
    pol = n_qubits - 1
    if control == pol:
        # V-conditioned spatial flip: the PBS routing itself is the gate
        bit = _spatial_bit(n_qubits, target)
        return [PBSSwap(m, m | (1 << bit)) for m in range(n_modes) if not (m >> bit) & 1]
    cbit = _spatial_bit(n_qubits, control)
    if target == pol:
        on = tuple(m for m in range(n_modes) if (m >> cbit) & 1)
        return [Waveplate(np.pi, np.pi / 4, modes=on)]
    tbit = _spatial_bit(n_qubits, target)
    elements = []
    for m in range(n_modes):
        if (m >> cbit) & 1 and not (m >> tbit) & 1:
            elements += _full_swap(m, m | (1 << tbit))
    return elements


def not_gate(reg: ModeRegister, qubit: int) -> ModeRegister:
    return apply_network(reg, not_network(reg.n_qubits, qubit))


def cnot_gate(reg: ModeRegister, control: int, target: int) -> ModeRegister:
    return apply_network(reg, cnot_network(reg.n_qubits, control, target))


def gate_matrix(n_qubits: int, elements) -> np.ndarray:
    """Assemble the 2**n x 2**n matrix of a network column by column."""
    dim = 2**n_qubits
    cols = []
    for k in range(dim):
        amps = np.zeros(dim, dtype=complex)
        amps[k] = 1.0
        cols.append(decode_state(apply_network(encode_state(amps), elements)))
    return np.array(cols).T


def register_csv_rows(reg: ModeRegister):
    """(mode, polarization, re, im, power) dump rows."""
    rows = []
    for m in range(reg.n_modes):
        for p, label in ((H, "H"), (V, "V")):
            a = reg.amplitudes[m, p]
            rows.append((m, label, a.real, a.imag, abs(a) ** 2))
    return rows
