"""Solving x^5 - x + a = 0 through the modular parametrization.

One root is the quotient theta4/theta3 at the point where
16 eta^6(2 tau)/theta3^6(tau) equals a; the others follow by deflation, and
every root gets its own half-plane address by inversion.
"""

from thetafuchs.curves import x_quotient
from thetafuchs.inversion import modular_quintic_rhs, quintic_solve

for a in (0.01, 0.3 + 0.2j):
    sol = quintic_solve(a)
    print(f"a = {a}")
    print(f"  newton iterations: {sol.newton_iterations}")
    for root, tau, pres, tres in zip(sol.roots, sol.taus,
                                     sol.poly_residuals, sol.theta_residuals):
        addr = "cusp" if isinstance(tau, str) else f"tau = {tau:.6f}"
        print(f"  root {root:+.12f}   {addr}")
        print(f"       |p(root)| = {pres:.2e}   theta match {tres:.2e}")
    print(f"  vieta defect: {sol.vieta_residual:.2e}")
    tau0 = sol.taus[0]
    print(f"  check: rhs(tau_1) - a = "
          f"{abs(modular_quintic_rhs(tau0) - a):.2e}, "
          f"x(tau_1) - root_1 = {abs(x_quotient(tau0) - sol.roots[0]):.2e}\n")
