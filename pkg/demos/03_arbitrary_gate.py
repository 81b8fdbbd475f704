"""
Any single-qubit gate
=====================

A random unitary is split into a Z rotation followed by a rotation Theta made of
two planar pulses. Each part gets its own pair of 2pi pulses, giving eight pulses
in total. The last cell compares the built sequences against published counts.
"""

# %%
import numpy as np

from robustpulse import amplitude_error_generator, compose, decompose_target, infidelity, robust_arbitrary, time_cost
from robustpulse.analysis import predicted_arbitrary_time_cost, recomputed_rows, lookup

rng = np.random.default_rng(7)
q, r = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
u = q * (np.diag(r) / abs(np.diag(r)))

# %%
d = decompose_target(u)
print("theta1, theta2, phi1, phi2 =", np.round(d, 4))

for level in ["ae", "nested"]:
    seq = robust_arbitrary(u, level)
    print(f"{level:7s} N={len(seq)} T={time_cost(seq):.3f} (predicted {predicted_arbitrary_time_cost(d, level):.3f})  "
          f"ideal error={infidelity(u, compose(seq)):.1e}  |g|={np.linalg.norm(amplitude_error_generator(seq)):.1e}")

# %%
for e in recomputed_rows():
    ref = lookup(e.name, e.gate)
    print(f"{e.name:18s} {e.gate:9s} N {e.pulse_count:2d} (pub {ref.pulse_count:2d})  T {e.time_cost:6.3f} (pub {ref.time_cost})")
