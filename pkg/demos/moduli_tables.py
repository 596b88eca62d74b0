"""
Moduli tables over small rings
==============================

Every free rank-2 algebra is R[x]/(x^2 + a x + b) for some pair (a, b),
and two pairs give isomorphic algebras exactly when they lie in the same
orbit of the affine group. This script prints the class tables for a few
rings and checks them against a direct isomorphism scan.
"""
from rank2moduli import crosscheck_moduli, moduli_table, ring

###############################################################################
# All algebras over F_2
# ---------------------
# Three classes: x^2, x^2 + x and x^2 + x + 1.

F2 = ring("zmod(2)")
table = moduli_table(F2, "F")
print(table.to_csv())

###############################################################################
# Restricting the property
# ------------------------
# Separable, radical, Artin-Schreier and their combinations each give
# a sub-table. Over F_2 nothing is both separable and radical.

for prop in ("F", "SF", "R", "SR", "AS", "SAS"):
    print(f"{prop:>3}: {len(moduli_table(F2, prop))} classes")

###############################################################################
# A non-reduced ring
# ------------------
# Over F_2[e]/(e^2) the tables get bigger; the cross-check recomputes the
# classes by pairwise isomorphism and compares partitions.

D = ring("quot(zmod(2),[0,0,1])")
for prop in ("F", "AS"):
    rep = crosscheck_moduli(D, prop)
    print(f"{D} {prop}: {len(moduli_table(D, prop))} classes, crosscheck {rep.passed}")

###############################################################################
# Odd residue characteristic
# --------------------------
# With 2 invertible every algebra is radical, x^2 - c, and c only matters
# up to multiplication by unit squares.

Z9 = ring("zmod(9)")
for c in moduli_table(Z9, "R").classes:
    print(c.rep, "disc", c.disc, "orbit size", c.orbit_size, "|Aut|", c.aut_order)
