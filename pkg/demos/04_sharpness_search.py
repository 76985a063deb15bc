"""
Searching for extremal functions
================================

Multi-start golden-section ascent over atom mixtures and a dense grid over
the three-coefficient parametrization, compared with the closed-form bounds.
"""

from fsdet import Functional, SearchConfig, sharpness_sweep, sup_over_atoms

cfg = SearchConfig(restarts=16, max_iters=200)

# Fekete-Szego is attained for every gamma
report = sharpness_sweep("fekete_szego", [0, 0.25, 0.5, 0.75, 1, 1.5], cfg, backends=["atoms"])
for e in report.entries:
    print(f"gamma={e.param[0]:<5} observed {e.value:.6f}  bound {e.bound.value:.6f}  {e.status}")

# a2 a3 - beta a4: both backends; the middle range stays open
report = sharpness_sweep("b2_1", [0, 1, 2, 3], SearchConfig(restarts=16, max_iters=200, grid=33))
for e in report.entries:
    values = ", ".join(f"{k}={r.value:.6f}" for k, r in e.results.items())
    print(f"beta={e.param[0]:<3} {values}  bound {e.bound.value}  {e.status}")

# between 2/3 and 7/9 the search beats the case-wise value 1
for alpha in (0.7, 0.72, 0.75):
    r = sup_over_atoms(Functional.h2_2(alpha), cfg)
    print(f"alpha={alpha}: observed {r.value:.6f}, 8 - 9 alpha = {8 - 9 * alpha:.6f}")

# third-order determinant with the witness that reaches it
r = sup_over_atoms(Functional.h3(1, 2, 1), cfg)
print(f"h3(1,2,1): observed {r.value:.6f} against bound {r.bound.value}")
print("weights:", [round(w, 4) for w in r.witness.weights])
