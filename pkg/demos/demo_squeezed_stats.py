"""Photon statistics of displaced squeezed light.

Closed-form mean/variance/Mandel Q vs. the truncated-Fock oracle, and
quadrature variances along/against the squeeze axis.
"""

import math

from oqcsim.squeezed import (
    SqueezedStateParams,
    closed_form_stats,
    distribution_moments,
    fock_distribution,
    quadrature_variance,
)

cases = {
    "coherent (alpha=2)": SqueezedStateParams(2.0, 0.0),
    "squeezed vacuum (r=1)": SqueezedStateParams(0.0, 1.0),
    "amplitude squeezed (alpha=3, r=0.5)": SqueezedStateParams(3.0, 0.5, 0.0),
    "phase squeezed (alpha=3, r=0.5, theta=pi)": SqueezedStateParams(3.0, 0.5, math.pi),
}

for label, s in cases.items():
    st = closed_form_stats(s)
    mean, var = distribution_moments(fock_distribution(s))
    print(label)
    print(f"  <n> = {st.mean_n:.6f}   var = {st.var_n:.6f}   Q = {st.mandel_q:+.4f}"
          f"   g2(0) = {st.g2_zero:.4f}")
    print(f"  Fock-oracle agreement: |d mean| = {abs(mean - st.mean_n):.1e},"
          f" |d var| = {abs(var - st.var_n):.1e}")

s = SqueezedStateParams(0.0, 1.0, 0.6)
print("\nquadrature variances, r=1, theta=0.6 (vacuum level 0.25):")
for phi in (s.theta / 2, s.theta / 2 + math.pi / 2):
    print(f"  Var X_phi at phi={phi:.3f}: {quadrature_variance(s, phi):.6f}")

p = fock_distribution(SqueezedStateParams(0.0, 1.0))
print("\nsqueezed vacuum p(n), n=0..6:", [f"{x:.4f}" for x in p[:7]])
print("(odd photon numbers are empty, pair production only)")
