"""Combinatorics of regular semisimple Hessenberg varieties in type A."""

from .core import (
    HessenbergFunction, IncomparabilityGraph, Permutation, all_permutations,
    bruhat_leq, descent_set, ell_h, in_generator_set, iota, make_hessenberg,
    nilpotent_cell, opposite_cell_dim, parse_hessenberg, poincare_coefficients,
)
from .csf import (
    CsfExpansion, check_brosnan_chow, check_chow_h2, check_sink_identity, csf,
)
from .errors import *  # noqa: F401,F403
from .generators import (
    A_i, P_i, P_i_closed_form, Sandwich, SourceBlocks, alpha_i, build_report,
    canonical_w, d_i, dim_H2, generators_k, J_indicator_degree1, level_one,
    source_blocks, stabilizer_composition,
)
from .gkm import (
    EdgeRelation, EquivariantClass, GkmGraph, MultiPoly, build_gkm, dot_action,
    edge_relation, is_equivariant_class,
)
from .orientations import (
    AcyclicOrientation, GraphType, asc, dashed_chain, descending_edge_count,
    enumerate_orientations, graph_type, graph_type_classes, orient_from_perm,
    perm_from_orientation, same_graph_type, sinks, sources,
)
from .reporting import IdentityCheck, VerifyReport
from .suites import enumerate_hessenberg, run_suite
from .symfun import (
    Composition, Partition, SymFunc, TPoly, e_to_m, m_to_e, multinomial_dim,
    omega_e_to_h, partitions,
)

__version__ = "0.1.0"
