from landau_delta import oracle, spectrum3d as s3
from landau_delta.boundstate import BoundState

# Every closed form has a slow, independent check. The checks are for
# verification only and are never called on the production path.

# Spectral roots: dense sampling of the direct sum plus Brent refinement.
x0, levels = oracle.oracle_spectrum(0.01, 1000, 3)
res = s3.solve_spectrum(0.01, s3.SpectralFunction(1000), 3)
print("ground:", x0, res.ground.x0)
for ref, rec in zip(levels, res.roots):
    print("level:", ref, rec.x, abs(ref - rec.x))

# Normalisation of the bound state by Gauss-Legendre quadrature in three dimensions.
bs = BoundState(a=1.0, l=0.7)
print("int |Psi|^2 =", oracle.density_quadrature(bs))
print("<rho^2> =", oracle.density_quadrature(bs, weight=lambda x, y, z: x * x + y * y), "expected 2a^2")

# Adaptive Simpson with its error history, which should shrink at every level.
q = oracle.integrate_1d(lambda x: 1 / (1 + x * x), 0.0, 1.0)
print(q.value * 4, q.history)

# The derivation identities, including the momentum integral whose printed form lacks a factor pi.
for rep in oracle.run_verification_suite():
    print(rep["identity"], rep["relative_error"], rep["passed"], rep.get("missing_pi_flag", ""))
