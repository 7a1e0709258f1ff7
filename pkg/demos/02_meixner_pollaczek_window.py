"""
Meixner-Pollaczek: where the extra points are real
===================================================

For fixed n and lambda the quadratic has real zeros only for phi in
(0, theta) or (pi - theta, pi). Inside the window the verdict depends on
which gaps of G the two points land in.
"""

# %%
import math

import numpy as np

from interlacing import MeixnerPollaczek, mp_phi_window
from interlacing.families import mp_discriminant
from interlacing.scan import run_draw

n, lam = 6, 0.12
(_, theta), (upper, _) = mp_phi_window(n, lam)
print(f"window for n={n}, lambda={lam}: (0, {theta:.6f}) and ({upper:.6f}, pi)")

for phi in (theta - 1e-6, theta + 1e-6, math.pi / 2, upper + 1e-6):
    print(f"  phi={phi:.7f}  D={mp_discriminant(n, lam, phi):+.3e}")

# %%
# Sweep phi across the upper window and watch the verdict change.
for frac in np.linspace(0.05, 0.95, 7):
    phi = math.pi - frac * theta
    rec = run_draw(MeixnerPollaczek(lam, phi), n)
    r = rec.report
    print(f"phi={phi:.4f}  E=({rec.extra.e1:+.4f}, {rec.extra.e2:+.4f})  "
          f"{str(r.placement_e1):>10s} {str(r.placement_e2):>10s}  {r.verdict.value}")

# %%
# One of the printed configurations: both points inside G's range, in
# different gaps, with a pair of P's zeros straddling E1.
rec = run_draw(MeixnerPollaczek(0.12, 7 * math.pi / 9), 6)
print(rec.report.verdict.value)
print(rec.report.statements[0])
