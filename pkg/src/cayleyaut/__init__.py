"""Automorphism groups of Cayley graphs generated by transposition sets.

The fast path reads Aut(Cay(H, S)) off the transposition graph T(S) when its
girth is at least 5; the brute-force oracle searches the Cayley graph itself.
"""

from .cayley import CayleyGraph, build_cayley, check_normality_conditions
from .corollaries import predicted_order, wreath_extension
from .engine import (
    AutReport,
    GroupAutomorphism,
    Method,
    aut_bruteforce,
    aut_fast,
    aut_hs_bruteforce,
    aut_hs_fast,
    cross_validate,
    stabilizer_Lv,
    verify_normality,
)
from .errors import CapExceeded, HypothesisViolated, InvalidParams, Mismatch, NoLift, NotSFixing
from .graph import SimpleGraph
from .lifting import lift_line_graph_aut, psi_restriction
from .perms import Permutation, PermutationGroup, Transposition, compose, conjugate_by, generate_group, inverse
from .topologies import TopologySpec, make, parse_spec
from .transpositions import TranspositionSet, check_hypotheses, transposition_graph

__version__ = "0.1.0"
