"""
Weighted Hankel determinants and their bounds
=============================================

Evaluate the coefficient functionals on catalog functions and compare with
the closed-form bounds, including the table of printed constants.
"""

from fsdet import DeterminantSpec, Functional, bound_for, catalog, corollary4_table, \
    functional_eval, hankel_lambda, thm3_bound

koebe = catalog("koebe")
two_sym = catalog("two_symmetric")

# the weighted determinant with all weights equal to 1 is the classical one
print("H3(1) of Koebe:", hankel_lambda(koebe, DeterminantSpec("H", 1, 3, (1, 1, 1))))

# Fekete-Szego, Koebe against its bound for a few gamma
for gamma in (0, 0.5, 0.75, 1, 2):
    phi = Functional.fekete_szego(gamma)
    print(f"{phi}: |value| = {abs(functional_eval(koebe, phi)):.4f}, bound = {bound_for(phi).value}")

# for a2 a4 - alpha a3^2 the two printed forms of the bound disagree
# between 2/3 and 7/9, and Koebe already beats the smaller one
for alpha in (0.6, 0.7, 0.72, 0.75, 0.8, 1.0):
    b = thm3_bound(alpha)
    k = abs(functional_eval(koebe, Functional.h2_2(alpha)))
    print(f"alpha={alpha}: Koebe {k:.3f}, max-form {b.value:.3f}, case-form {b.alt_value:.3f}, "
          f"consistent={b.consistent}")

# z/(1-z^2) for the third-order determinant
print("H3(1,1,2) of z/(1-z^2):", functional_eval(two_sym, Functional.h3(1, 1, 2)))

# printed table entries against the recomputed closed form
print("lambdas     printed  recomputed")
for row in corollary4_table():
    mark = "" if row.match else "  <- differs"
    print(f"{str(row.lambdas):10} {row.printed:8} {row.recomputed:10}{mark}")
