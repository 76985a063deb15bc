"""
Starlike functions from positive-real-part coefficients
=======================================================

Build a few starlike functions by lifting Caratheodory coefficients and
look at their Taylor coefficients.
"""

import numpy as np

from fsdet import AtomMixture, catalog, lift_starlike, mixture_coeffs, rotate

np.set_printoptions(precision=4, suppress=True)

# a single atom at angle 0 gives c_k = 2 for every k, and the lift is Koebe
c = mixture_coeffs(AtomMixture((1.0,), (0.0,)), 9)
print("c_k  :", c.real)
print("a_n  :", lift_starlike(c, 10).a[1:].real)

# two equal atoms at 0 and pi cancel the odd c_k: z/(1-z^2)
c = mixture_coeffs(AtomMixture((0.5, 0.5), (0.0, np.pi)), 9)
print("a_n  :", lift_starlike(c, 10).a[1:].real)

# the catalog holds the usual extremal shapes
for name, param in [("koebe", None), ("two_symmetric", None), ("kfold", 3)]:
    f = catalog(name, param, 8)
    print(f"{f.provenance:>14}", f.a[1:].real, "suspect" if f.suspect else "")

# two entries are kept because they appear as claimed extremals,
# but a boundary spot check of Re zf'/f shows they are not starlike
for name, param in [("paper_thm2_literal", None), ("paper_thm3_literal", 0.8)]:
    f = catalog(name, param, 8)
    print(f"{f.provenance:>24}", f.a[1:].real, "suspect" if f.suspect else "")

# rotations multiply a_n by eta^(n-1)
print(rotate(catalog("koebe", N=5), 1j).a[1:])
