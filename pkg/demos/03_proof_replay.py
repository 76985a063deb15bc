"""
Replaying the one-variable calculus
===================================

The bounds for a2 a3 - beta a4 and a2 a4 - alpha a3^2 come down to
maximizing explicit polynomials F(rho) and G(c). Check every step on a grid.
"""

import numpy as np

from fsdet import thm2_profile, verify_claims
from fsdet.proofcheck import t2_G1, t2_G2

for theorem in ("T2", "T3"):
    report = verify_claims(theorem, 256)
    print(f"{theorem}: passed={report.passed}")
    for c in report.claims:
        tag = "info" if c.informational else ("ok  " if c.passed else "FAIL")
        print(f"  [{tag}] {c.label}  dev={c.max_deviation:.2e}")

# the failing step: G1 <= G2 does not hold pointwise for small c,
# G2 - G1 = beta (4 - c^2)(3c - 2)/12
c = np.linspace(0, 2, 9)
print("c        :", c)
print("G2 - G1  :", np.round(t2_G2(c, 1.0) - t2_G1(c, 1.0), 4))

# the maximum of F is still 4 - 2 beta, so the bound survives
beta = 0.5
grid = np.linspace(0, 2, 201)
best = max(thm2_profile(ci, r, beta)["F"] for ci in grid for r in np.linspace(0, 1, 51))
print(f"max F at beta={beta}: {best:.6f} (4 - 2 beta = {4 - 2 * beta})")
