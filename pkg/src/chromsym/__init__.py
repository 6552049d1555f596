"""Exact chromatic symmetric functions of indifference, co-bipartite and
(3+1)-free incomparability graphs, with Newton polytope, Lorentzian and
zeta-map checks."""

from .combinatorics import (
    DyckPath,
    area,
    area_sequence,
    area_to_dyck,
    bounce,
    bounce_points,
    catalan,
    conjugate,
    dominance_leq,
    dyck_to_hessenberg,
    enumerate_dyck,
    hessenberg_to_dyck,
    partition,
    partitions_of,
    zeta,
)
from .csf import (
    csf_bruteforce,
    csf_cobipartite,
    csf_dyck,
    csf_listing,
    greedy_coloring,
    greedy_weight,
)
from .errors import ChromsymError
from .graphs import (
    Board,
    Poset,
    SimpleGraph,
    ferrers_board,
    incomparability_graph,
    indifference_graph,
    is_abelian,
    poset_from_hessenberg,
)
from .listings import (
    Bico,
    BicoloredGraph,
    PartListing,
    Vertex,
    decompose_bico,
    greedy_weight_31free,
    lex_maximal_listing,
)
from .lorentzian import (
    abelian_certificate,
    block_charpoly,
    count_positive_eigenvalues,
    discrete_log_concavity,
    hessian_at,
    is_lorentzian,
    probe_stability,
)
from .newton import (
    SupportSet,
    expand_support,
    in_permutahedron,
    is_m_convex,
    is_snp,
    newton_equals_permutahedron,
    nonvanishing_decision,
)
from .polys import Polynomial, charpoly, is_real_rooted
from .rooks import hit_numbers, hit_polynomial, permanent, rook_numbers
from .scan import ScanConfig, run_scan, zeta_conjecture_check
from .symfunc import SymFunc, convert, to_elementary, to_monomial, to_schur

__version__ = "0.1.0"
