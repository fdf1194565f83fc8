import math

import numpy as np
from landau_delta import tunneling as tn
from landau_delta.boundstate import BoundState
from landau_delta.errors import ValidityError

# Far below the well an electric field along B leaves the outgoing Airy wave
# V(Z) = pi (Bi + i Ai). The flux it carries is the same everywhere.
for Z in (1.0, 5.0, 10.0, 20.0):
    print(f"Z={Z:5.1f}  V={tn.airy_outgoing(Z):.6e}  flux={tn.airy_flux(Z):.15f}")

# The two-exponential leading form alone already carries the exact flux.
print("leading form at Z=10:", tn.airy_outgoing(10.0, terms=1), tn.airy_flux(10.0, terms=1))

# Transverse Fourier amplitude of the bound state; its width in momentum is hbar/a.
bs = BoundState(a=1.0, l=0.5)
print(abs(tn.overlap_F(np.array([0.0, 1.0, 2.0]), 0.0, bs)))

# Ionisation rate in units of |E0|/hbar against eps/eps0: the exponent -4 sqrt(2)/(3 eps/eps0) dominates.
r = np.linspace(0.01, 0.05, 5)
for x in r:
    res = tn.decay_rate(tn.TunnelingInput(x, 100.0))
    print(f"eps/eps0={x:.3f}  w={res.w:.4e}  exponent={res.exponent:.3f}  prefactor={res.prefactor:.4f}")
w = [tn.decay_rate(tn.TunnelingInput(x, 100.0)).w for x in np.linspace(0.01, 0.05, 41)]
print("fitted slope:", np.polyfit(1 / np.linspace(0.01, 0.05, 41), np.log(w), 1)[0],
      "expected:", -4 * math.sqrt(2) / 3)

# The formula assumes a weak field and refuses eps >= eps0.
try:
    tn.TunnelingInput(1.2, 1.0)
except ValidityError as exc:
    print(exc)
