"""
Adding off-resonance robustness by nesting
==========================================

The 2pi legs are already insensitive to a small detuning, but the two theta legs
are not. Swapping each of them for a three-pulse CORPSE block fixes that, at the
price of a longer sequence.
"""

# %%
import numpy as np

from robustpulse import HADAMARD, Pulse, corpse, nest, robust_z, rotation, scaling_exponent, sweep, time_cost, z_rotation
from robustpulse.targets import robust_hadamard_asym

# %%
# A single CORPSE block reproduces its pulse and is robust to detuning only.
block = corpse(Pulse(np.pi / 2, 0.3))
print("CORPSE angles:", [round(p.theta, 4) for p in block])
print("f slope:", round(scaling_exponent(block, rotation(np.pi / 2, 0.3), "f"), 2))
print("eps slope:", round(scaling_exponent(block, rotation(np.pi / 2, 0.3), "epsilon"), 2))

# %%
ae = robust_hadamard_asym("ae")
nested = nest(ae)
for name, seq in [("ae", ae), ("nested", nested)]:
    print(f"{name:7s} N={len(seq)} T={time_cost(seq):.2f}  "
          f"eps slope={scaling_exponent(seq, HADAMARD, 'epsilon'):.2f}  f slope={scaling_exponent(seq, HADAMARD, 'f'):.2f}")

# %%
# Same comparison for Z_pi as a grid, the data behind a fidelity-vs-error plot.
eps = np.linspace(-0.1, 0.1, 5)
for level in ["ae", "nested"]:
    grid = sweep(z_rotation(np.pi), robust_z(np.pi, level), eps, [0.0, 0.01, 0.1])
    print(level)
    for f, row in zip(grid.fs, grid.infidelity):
        print(f"  f={f:<5}", " ".join(f"{v:9.1e}" for v in row))
