"""Fekete-Szego-parametrized coefficient determinants for starlike functions."""

__version__ = "0.1.0"

from .bounds import BoundValue, bound_for, corollary4_table, thm1_bound, thm2_bound, thm3_bound, thm4_bound
from .caratheodory import AtomMixture, Lemma3Params, lemma2_check, lemma3_coeffs, lemma3_invert, \
    mixture_coeffs
from .determinants import DeterminantSpec, Functional, b_lambda, det_eval, functional_eval, \
    h3_expand, hankel_lambda, triangle_rhs
from .proofcheck import thm2_profile, thm3_profile, verify_claims
from .search import SearchConfig, sharpness_sweep, sup_over_atoms, sup_over_lemma3
from .series import series_binomial_pow, series_lincomb, series_mul
from .starlike import StarlikeCoeffs, catalog, lift_starlike, rotate
