"""Binomial edge ideals: sequences, colon formulas, and Rees algebras."""

from .errors import (
    BeiError,
    ComputationLimitError,
    InputError,
    InternalError,
    NotInClassError,
    ParseError,
    RingError,
    UsageError,
)
from .ring import (
    QQ,
    BlockOrder,
    DegRevLex,
    Lex,
    PolyRing,
    Polynomial,
    PrimeField,
    RationalField,
    render_poly,
)
from .groebner import GBConfig, DEFAULT_CONFIG, GroebnerBasis, Ideal, \
    buchberger_with_syzygies, groebner_basis, ideal_equal, spoly
from .ideal_ops import (
    colon_by_ideal,
    colon_by_poly,
    eliminate,
    graded_membership,
    intersect,
    membership_by_matrix,
    power_ideal,
    product_ideal,
    saturate_by_poly,
    syzygies_first,
)
from .graphs import (
    EdgeOrdering,
    Graph,
    GraphInfo,
    analyze,
    contains_induced,
    cycle_graph,
    cycle_with_pendants,
    graph_from_edge_text,
    graph_from_json,
    graph_to_json,
    labeled_trees,
    neighbor_completion,
    nonisomorphic_trees,
    path_graph,
    star_graph,
    tree_edge_ordering,
    unicyclic_edge_ordering,
)
from .edge_ideals import (
    binomial_edge_ideal,
    colon_bridge_formula,
    colon_path_formula,
    default_ring,
    edge_binomial,
    edge_binomials,
    sequence_for_ordering,
)
from .sequences import (
    ColonCache,
    eq23_containment_check,
    is_d_sequence,
    is_p_sequence,
    monomial_p_criterion,
    permutation_scan,
)
from .rees import (
    ReesResult,
    edge_fiber_labels,
    evaluate_relation,
    is_linear_type,
    presentation_ring,
    rees_analysis,
    rees_ideal,
    relation_type,
    sym_ideal,
    tree_rees_generators,
)

__version__ = "0.1.0"
