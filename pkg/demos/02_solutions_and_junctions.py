# Piecewise solutions of t * dtau/dt = tau around t = 1 and how smooth they are there.
import numpy as np

from scalefree import solutions, verify
from scalefree.fatnum import t_minus, t_plus

families = {
    "standard": solutions.Standard(),
    "fluctuation": solutions.Fluctuation(),
    "asymmetric(1)": solutions.Asymmetric(1.0),
    "asymmetric(2)": solutions.Asymmetric(2.0),
    "product(12)": solutions.ExactProduct(12),
}

# values at the fat points 1 -+ eta
eta = 0.01
for name, f in families.items():
    lo = solutions.eval_solution(f, t_minus(eta)).value
    hi = solutions.eval_solution(f, t_plus(eta)).value
    print(f"{name:14s} tau(1-eta)={lo:.8f}  tau(1+eta)={hi:.8f}")

# finite-difference junction classification at t = 1
print()
for name, f in families.items():
    rep = verify.classify_junction(f, 1.0, 1e-4)
    print(f"{name:14s} {rep.classification:16s} d1 jump {rep.d1_jump:+.2e}  d2 jump {rep.d2_jump:+.5f}")

# the one-sided inversion solution: slope matches, curvature jumps by 2
rep = verify.classify_junction(solutions.Asymmetric(1.0))
print("\nasymmetric(1) d2 left/right:", rep.d2_left, rep.d2_right, "floor", rep.noise_floor[2])

# how well each branch satisfies the equation
print()
for t in (0.9, 0.99, 1.01, 1.1):
    row = [verify.ode_residual(f, t) for f in families.values()]
    print(f"t={t:<5}", "  ".join(f"{r:.1e}" for r in row))

# parity reversal of the asymmetric solution blows up as eta -> 1
flipped = solutions.parity_transform(solutions.Asymmetric(1.0))
for e in (0.5, 0.9, 0.99, 0.999):
    print(f"eta={e}: tau(1+eta)={1 + e}, tau^P(1+eta)={flipped(1 + e):.1f}")

# partial products telescope to (1 - eta^(2^d)) / (1 - eta)
for d in range(1, 7):
    print(d, solutions.partial_product(0.5, d), (1 - 0.5 ** (2**d)) / 0.5)

# generalized solution: ln T = t + k phi(t), with phi nearly constant
p = solutions.GeneralizedParams(k=1e-3, depth=2, family=solutions.Asymmetric(1.0))
ts = np.linspace(0.5, 2.0, 7)
print("\nphi residual:", [f"{verify.phi_residual(p, t):.1e}" for t in ts])
