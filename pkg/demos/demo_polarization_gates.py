"""Jones-calculus gates on a spatial-mode + polarization register.

Encodes 3-qubit states into 4 spatial modes x {H, V}, applies the
waveplate/PBS networks for NOT and CNOT, and checks the truth tables.
"""

import numpy as np

from oqcsim import jones
from oqcsim.truthtable import apply_cnot, apply_not, index_bits

n = 3

print("NOT on the polarization qubit is a single half-wave plate at 45 deg:")
for e in jones.not_network(n, n - 1):
    print("  ", e)

print("\nNOT truth table (qubit 2):")
for k in range(2**n):
    bits = format(k, f"0{n}b")
    reg = jones.apply_network(jones.encode_state(np.eye(2**n)[k]), jones.not_network(n, 2))
    out = format(int(np.argmax(np.abs(jones.decode_state(reg)))), f"0{n}b")
    expected = "".join(map(str, apply_not(index_bits(k, n), 2)))
    print(f"  {bits} -> {out}   expected {expected}")

print("\nCNOT(control=0, target=2) truth table:")
net = jones.cnot_network(n, 0, 2)
print(f"  network uses {len(net)} elements")
for k in range(2**n):
    bits = format(k, f"0{n}b")
    reg = jones.apply_network(jones.encode_state(np.eye(2**n)[k]), net)
    out = format(int(np.argmax(np.abs(jones.decode_state(reg)))), f"0{n}b")
    expected = "".join(map(str, apply_cnot(index_bits(k, n), 0, 2)))
    print(f"  {bits} -> {out}   expected {expected}")

# superpositions work too: CNOT on (|000> + |100>)/sqrt(2) entangles
amps = np.zeros(2**n, dtype=complex)
amps[0] = amps[4] = 1 / np.sqrt(2)
out = jones.decode_state(jones.apply_network(jones.encode_state(amps), net))
print("\nCNOT (|000>+|100>)/sqrt2 amplitudes:", np.round(out, 6))
