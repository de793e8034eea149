# %% [markdown]
# # Collapse and revival of the atomic inversion
#
# The inversion <J_z> of the resonant, Kerr-free system collapses within a
# few Rabi periods.  For a field with mean photon number nbar the first
# revival is expected near lambda t ~ 2 pi sqrt(nbar); at nbar = 45 that is
# around 42, well past the usual plotting window of 25.

# %%
import math

import numpy as np

from kerr_tavis import ModelConfig, atomic_density, inversion, state_vector
from kerr_tavis.verification import inversion_envelope

cfg = ModelConfig.create(0.9, 50)
ts = np.linspace(0.0, 60.0, 6001)
inv = inversion(atomic_density(state_vector(ts, cfg)))
centers, env = inversion_envelope(ts, inv, width=1.0)

# %%
print(f"mean photon number {cfg.field.mean_photons:.1f}, 2 pi sqrt(nbar) = {2 * math.pi * math.sqrt(45):.1f}")
for lo, hi in ((0, 2), (5, 10), (10, 25), (30, 50)):
    sel = (centers > lo) & (centers < hi)
    print(f"envelope on ({lo:>2}, {hi:>2}): max {env[sel].max():.3f}")

# %% [markdown]
# Detuning shifts the structure.  Compare the time of the largest envelope
# after the collapse for Delta = 0 and Delta = 10.

# %%
for delta in (0.0, 10.0):
    c = ModelConfig.create(0.9, 50, delta=delta)
    cc, e = inversion_envelope(ts, inversion(atomic_density(state_vector(ts, c))))
    late = cc > 15
    print(f"Delta={delta:>4}: strongest late envelope at lambda t = {cc[late][np.argmax(e[late])]:.1f}")
