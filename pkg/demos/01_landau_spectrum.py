import numpy as np
from landau_delta import spectrum3d as s3
from landau_delta.errors import BracketError

# Energies are measured in units of hbar*omega and x = E/(hbar*omega).
# A contact well of strength lambda couples to the Landau levels only through
# g = lambda / (8 sqrt(2) pi a), and the levels solve g * f(x) = 1 with
# f(x) = sum_{n=0}^{N} |n - x|^{-1/2}.
g = s3.coupling_from_lambda_over_a(0.01)
print("g =", g)

# With a million levels the plain sum is slow, so terms further than the window
# from x are replaced by an integral plus an end correction. evaluate() returns
# the value together with a rigorous bound on what that replacement costs.
fast = s3.SpectralFunction(N=10**6, tail_mode=s3.CORRECTED)
exact = s3.SpectralFunction(N=10**6, tail_mode=s3.EXACT)
for x in (-3.0, 0.5, 7.25, 15.9):
    v, bound = fast.evaluate(x)
    print(f"x={x:6.2f}  f={v:.15g}  bound={bound:.1e}  |exact-fast|={abs(exact(x) - v):.1e}")

# Each Landau level n is pulled down slightly; the ground level x0 < 0 is the bound state.
res = s3.solve_spectrum(g, fast, n_max=5)
for n, x, residual, lo, hi in res.as_rows():
    print(f"n={n}  x={x!r:24}  residual={residual:.1e}")

# Near a pole f is dominated by one term, so the shift of each level is about -g^2.
# Here the regular part of the sum is large, and resumming it gives the better estimate.
print("root 1 shift        :", res.roots[0].x - 1)
print("-g^2                :", s3.perturbative_shift(g))
print("ground root         :", res.ground.x0)
print("-(g/(1-g S_N))^2    :", s3.tail_corrected_shift(g, 10**6))

# At stronger coupling g * min f exceeds one between poles, and only the ground root survives.
try:
    s3.solve_spectrum(s3.coupling_from_lambda_over_a(0.1), fast, n_max=1)
except BracketError as exc:
    print("no level root:", exc)

# Keeping the bound state fixed while the well shrinks needs a growing cutoff.
for lam in (1.0, 0.1, 0.01):
    print("lambda/a =", lam, " N =", s3.cutoff_from_coupling(lam, res.ground.x0))
print(np.round([r.x for r in res.roots], 9))
