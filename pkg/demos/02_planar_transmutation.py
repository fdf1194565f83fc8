import math

import numpy as np
from landau_delta import spectrum2d as s2

# In two dimensions the sum becomes sum 1/(n+b) = psi(N+1+b) - psi(b), with b = -E/(hbar omega).
# The digamma form costs the same for N = 10 and N = 10^12.
print(s2.f2(2.5, 10**6), s2.f2(2.5, 10**6, method="direct"))
print(s2.f2(2.5, 10**12))

# The bound state satisfies (lam2 / 4 pi) f2(b, N) = 1.
# Replacing the sum by a logarithm predicts b ~ N exp(-4 pi / lam2).
for lam2 in (0.8, 1.0, 1.2, 2.0, 3.0, 4.0):
    b, est, gap = s2.relative_gap(s2.TwoDSetup(lam2, 10**6))
    print(f"lam2={lam2:3.1f}  b*={b:12.6g}  estimate={est:12.6g}  gap={gap:.3f}")

# The estimate is good once b* >> 1. Near lam2 = 1 the root is O(1), and the
# 1/b term the logarithm ignores dominates.
lam = np.linspace(2.0, 4.0, 11)
b = [s2.solve_ground_2d(s2.TwoDSetup(l, 10**6)) for l in lam]
print("slope of log b* vs 1/lam2:", np.polyfit(1 / lam, np.log(b), 1)[0], "vs", -4 * math.pi)

# Dimensional transmutation: choose N so the predicted energy is fixed, and the
# solved energy stays put while the coupling changes.
for lam2 in (0.8, 1.0, 1.2):
    N = round(5.0 * math.exp(4 * math.pi / lam2))
    print(lam2, N, s2.solve_ground_2d(s2.TwoDSetup(lam2, N)))
