import math

import numpy as np
from landau_delta import boundstate as bsm
from landau_delta import spectrum3d as s3

# Build the bound state from a solved ground root: a is the magnetic length and
# l = hbar / sqrt(2 m |E0|) the decay length along the field.
x0 = s3.solve_spectrum(0.05, s3.SpectralFunction(200), 0).ground.x0
bs = bsm.BoundState.from_root(x0)
print("x0 =", x0, " a =", bs.a, " l =", bs.l)
print(bsm.localization_report(bs))

# The current circulates around the field axis even in the ground state.
# Landau gauge, symmetric gauge, and the closed form give the same field.
pos = (np.array([0.3, 1.0, -1.5]), np.array([0.8, -0.2, 0.4]), np.array([0.1, 0.5, -0.9]))
for gauge in ("landau", "symmetric", "analytic"):
    J = bsm.current(pos, bs, gauge=gauge).J
    print(f"{gauge:9s}", np.array(J).T[0])

# Circulation on a circle of radius r: I(r) = A r^2 exp(-r^2/2a^2), largest at r = sqrt(2) a.
for r in (0.5, 1.0, math.sqrt(2), 2.0, 3.0):
    print(f"r={r:.3f}  numeric={bsm.circulation(r, bs):.12f}  closed form={bsm.vortex_intensity(r, bs):.12f}")

# The vortex is a pancake: at height z the same pattern is scaled by exp(-2|z|/l).
for z in (0.0, 0.5 * bs.l, bs.l, 2 * bs.l):
    print(f"z/l={z / bs.l:.1f}  ratio={bsm.circulation(1.0, bs, z=z) / bsm.circulation(1.0, bs):.6f}")

# Divergence-free: the central-difference divergence shrinks like h^2.
field = lambda p: bsm.current(p, bs, gauge="landau").J
pts = (np.array([0.4, -1.1]), np.array([0.9, 0.3]), np.array([0.5, 0.8]))
for h in (0.04, 0.02, 0.01):
    print("h =", h, " max |div J| =", np.max(np.abs(bsm.divergence(field, pts, h))))

# For comparison, the bare well gives a real, spherically symmetric state that carries no current.
zf = bsm.ZeroFieldState.from_energy(bs.E0)
print("zero-field l0 =", zf.l0, " current:", bsm.zero_field_current(pts, zf).J[0])
