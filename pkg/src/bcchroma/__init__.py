"""Exact combinatorics of hyperoctahedral traces, type-BC star networks and
type-BC chromatic symmetric functions."""

from .core_combinatorics import bipartitions_of, kostka_matrix, partitions_of, sn_character, transpose, z_value
from .networks import (
    covering_families,
    defect_count,
    enumerate_networks,
    graphical_representation,
    network_of_w,
    path_matrix,
    w_of_network,
)
from .posets_graphs import decorated_iso, inc, p_of_w, q_of_w
from .signed_permutations import SignedPermutation, bruhat_interval, bruhat_leq, multiply, parse
from .traces_symmfns import (
    SymFn,
    TraceVector,
    Y_A,
    Y_BC,
    bn_trace_basis,
    chromatic_A,
    chromatic_A_q,
    chromatic_BC,
    evaluate,
    frobenius,
    immanant_A,
    immanant_BC,
    inverse_Y,
    kl_element,
    sn_trace_basis,
    symfn_convert,
)
from .verification import Report, verify_theorem

__version__ = "0.1.0"
