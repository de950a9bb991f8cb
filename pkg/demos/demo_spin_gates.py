"""Two-spin NMR gates: compile NOT and CNOT from hard pulses + J-coupling.

Prints the compiled unitaries, their fidelity against the ideal
permutation gates, and a sampled measurement histogram after CNOT|10>.
"""

import numpy as np

from oqcsim import spin
from oqcsim.truthtable import cnot_permutation, not_permutation, permutation_matrix

j12 = 0.1

not_seq = spin.compile_not(1)
cnot_seq = spin.compile_cnot(0, 1, j12)

u_not = spin.sequence_unitary(not_seq, 2, j12)
u_cnot = spin.sequence_unitary(cnot_seq, 2, j12)

ideal_not = permutation_matrix(not_permutation(2, 1))
ideal_cnot = permutation_matrix(cnot_permutation(2, 0, 1))

print("compiled NOT (spin 1), fidelity vs ideal:",
      spin.gate_fidelity(ideal_not, u_not))
print("compiled CNOT (0 -> 1), fidelity vs ideal:",
      spin.gate_fidelity(ideal_cnot, u_cnot))
print("pulse count: NOT =", len(not_seq), " CNOT =", len(cnot_seq))

print("\n|CNOT| matrix (magnitudes):")
print(np.round(np.abs(u_cnot), 6))

state = spin.apply_sequence(spin.SpinState.basis("10"), cnot_seq, j12)
print("\nCNOT|10> probabilities:", np.round(np.abs(state.amplitudes) ** 2, 9))
print("sampled counts (seed 7, 10000 shots):", spin.measure(state, 7, 10000))
