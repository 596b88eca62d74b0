"""
Group schemes behind the actions
================================

The affine group w, v acts on pairs (a, b); on coordinate rings this is a
coaction of the Hopf algebra Z[x, 1/x, y]. The identities are checked
symbolically, and the automorphism group schemes are checked through
their points over finite rings.
"""
from rank2moduli import point, ring
from rank2moduli.hopf import (ast_coaction, mutated_presentation, pentagram_coaction,
                              points_of_aut_hopf, semidirect_presentation, star_coaction,
                              verify_coaction, verify_hopf_axioms)

###############################################################################
# Hopf axioms
# -----------

for pres in (semidirect_presentation(), mutated_presentation()):
    rep = verify_hopf_axioms(pres)
    print(f"{rep.target:32} pass={rep.passed} failed={rep.failed()}")

###############################################################################
# Coactions
# ---------
# Besides the symbolic identities, each coaction is evaluated at points to
# confirm that it induces the intended set-level action.

rings = [ring(f"zmod({n})") for n in (2, 3, 4, 5)]
for co in (star_coaction(), pentagram_coaction(), ast_coaction(),
           pentagram_coaction(literal=True), ast_coaction(literal=True)):
    rep = verify_coaction(co, rings)
    print(f"{rep.target:45} pass={rep.passed} failed={rep.failed()}")

###############################################################################
# Automorphisms through their points
# ----------------------------------

for spec, a, b in (("zmod(3)", 0, 1), ("zmod(5)", 0, 0), ("zmod(4)", 2, 1)):
    rep = points_of_aut_hopf(point(ring(spec), a, b))
    print(rep.target, [(c.axiom, c.passed) for c in rep.checks])
