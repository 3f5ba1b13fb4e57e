"""Walk through the theta-constant identity corpus.

Evaluates the full frame at a few points, shows the calibration of the
Weierstrass eta-constant, and sweeps the identity corpus over a seeded grid.
"""

import math

from thetafuchs import theta_eta as th
from thetafuchs.numerics import tau_grid

print("Frame at tau = i (all constants real there):")
frame = th.theta(1j)
print(f"  theta2 = {frame.t2.real:.15f}")
print(f"  theta3 = {frame.t3.real:.15f}")
print(f"  theta4 = {frame.t4.real:.15f}")
print(f"  eta    = {frame.eta.real:.15f}")
print(f"  eta_w  = {frame.etaw.real:.15f}   (pi^2/12 = {math.pi**2/12:.15f})")
print(f"  quartic defect theta3^4 - theta2^4 - theta4^4 = "
      f"{abs(frame.t3**4 - frame.t2**4 - frame.t4**4):.2e}")
print(f"  triple product defect 2 eta^3 - t2 t3 t4      = "
      f"{abs(2*frame.eta**3 - frame.t2*frame.t3*frame.t4):.2e}")

print("\nWeight-2 calibration constant (forced once at tau = 2i):")
print(f"  c = {th.eta_w_scale()!r}, pi^2/12 = {math.pi**2/12!r}")

print("\nIdentity corpus at tau = 1/5 + 2i:")
for name, value in sorted(th.identity_residuals(0.2 + 2j).items()):
    print(f"  {name:18s} {value:.3e}")

worst = 0.0
for tau in tau_grid(100, seed=101, im_range=(0.3, 3.0)):
    worst = max(worst, max(th.identity_residuals(tau).values()))
print(f"\nWorst residual over 100 seeded tau: {worst:.3e}")
