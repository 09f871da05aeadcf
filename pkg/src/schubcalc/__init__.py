"""Schubert polynomials, k-Bruhat chains and skew Schubert coefficients."""

from .perm import Permutation, Transposition, all_perms, grassmannian, identity
from .poly import Poly, SchubertExpansion, SubsetDescriptor, expand_in_schubert, schubert, structure_constants
from .bruhat import LabeledInterval, greedy_chain, interval, leq_k
from .qorder import q_interval, q_leq, rank, skew_coefficient
from .tabx import Tableau, schensted

__all__ = [
    "Permutation", "Transposition", "all_perms", "grassmannian", "identity",
    "Poly", "SchubertExpansion", "SubsetDescriptor", "expand_in_schubert",
    "schubert", "structure_constants", "LabeledInterval", "greedy_chain",
    "interval", "leq_k", "q_interval", "q_leq", "rank", "skew_coefficient",
    "Tableau", "schensted",
]
