"""Moduli of free rank-2 algebras R[x]/(x^2 + a x + b) over small commutative rings."""

from .rings import Ring, RingHom, RingSpecError, default_battery, parse_ring_spec, ring
from .quadratic import (AlgebraPoint, NormalForm, QuadraticAlgebra, as_normal_form,
                        discriminant, etale_normal_form, galois_conj, is_artin_schreier,
                        is_radical, is_separable, point, radical_normal_form, trace)
from .isomorphism import (aut_fiber_type, aut_group, is_isomorphic, iso_quadint,
                          iso_solutions, zsqrt5_counterexample)
from .orbits import (GroupElem, Property, act, bijection_as_to_h, bijection_r_to_t,
                     crosscheck_moduli, embeddings_report, moduli_table, orbits)
from .hopf import TensorPoly, points_of_aut_hopf, verify_coaction, verify_hopf_axioms

__all__ = ["Ring", "RingHom", "RingSpecError", "default_battery", "parse_ring_spec", "ring",
           "AlgebraPoint", "NormalForm", "QuadraticAlgebra", "as_normal_form", "discriminant",
           "etale_normal_form", "galois_conj", "is_artin_schreier", "is_radical",
           "is_separable", "point", "radical_normal_form", "trace", "aut_fiber_type",
           "aut_group", "is_isomorphic", "iso_quadint", "iso_solutions",
           "zsqrt5_counterexample", "GroupElem", "Property", "act", "bijection_as_to_h",
           "bijection_r_to_t", "crosscheck_moduli", "embeddings_report", "moduli_table",
           "orbits", "TensorPoly", "points_of_aut_hopf", "verify_coaction",
           "verify_hopf_axioms"]

__version__ = "0.1.0"
