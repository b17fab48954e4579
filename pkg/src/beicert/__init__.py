"""Cut-set structure and Frobenius splitting certificates for binomial
edge ideals of graphs, with an exact Groebner oracle for cross-checks."""

from .errors import BudgetExceeded, InputError
from .graphs import (
    Graph,
    LabelingSearch,
    bipartition,
    components_after_removal,
    component_count,
    find_labeling,
    graph_from_json,
    graph_from_text,
    graph_to_json,
    graph_to_text,
    hamiltonian_path,
    identity_labeling,
    is_closed_labeling,
    is_connected,
    is_weakly_closed_labeling,
    make_graph,
    parse_graph,
    relabel,
)
from .families import (
    caterpillar,
    caterpillar_spine,
    circ_compose,
    complete_graph,
    complete_multipartite,
    flipped_half_graph,
    half_graph,
    join,
    join_of_completes,
    multipartite_parts,
    path_graph,
    star_compose,
)
from .primes import (
    Classification,
    MinimalPrime,
    classify,
    enumerate_minimal_primes,
    is_cut_set,
    report_json,
)
from .polyfp import (
    FactoredWitness,
    Minor,
    PrimeFieldPolynomial,
    Var,
    atom_from_string,
    atom_polynomial,
    atom_to_string,
    expand,
    format_polynomial,
    witness_power_outside_frobenius,
)
from .certify import (
    Certificate,
    PrimeBound,
    canonical_witness,
    certificate_to_json,
    certify_strong_freg,
    certify_symbolic_fsplit,
    factor_order,
    order_lower_bound,
    proof_decomposition,
)
from .oracle import (
    OracleIdeal,
    binomial_edge_ideal,
    colon,
    colon_by_poly,
    frobenius_bracket,
    generic_minors_ideal,
    groebner_basis,
    ideal_power,
    ideals_equal,
    intersect,
    member,
    minimal_prime_ideal,
    normal_form,
    power_membership_order,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "Certificate",
    "Classification",
    "FactoredWitness",
    "Graph",
    "InputError",
    "LabelingSearch",
    "MinimalPrime",
    "Minor",
    "OracleIdeal",
    "PrimeBound",
    "PrimeFieldPolynomial",
    "Var",
    "atom_from_string",
    "atom_polynomial",
    "atom_to_string",
    "binomial_edge_ideal",
    "bipartition",
    "canonical_witness",
    "caterpillar",
    "caterpillar_spine",
    "certificate_to_json",
    "certify_strong_freg",
    "certify_symbolic_fsplit",
    "circ_compose",
    "classify",
    "colon",
    "colon_by_poly",
    "complete_graph",
    "complete_multipartite",
    "component_count",
    "components_after_removal",
    "enumerate_minimal_primes",
    "expand",
    "factor_order",
    "find_labeling",
    "flipped_half_graph",
    "format_polynomial",
    "frobenius_bracket",
    "generic_minors_ideal",
    "graph_from_json",
    "graph_from_text",
    "graph_to_json",
    "graph_to_text",
    "groebner_basis",
    "half_graph",
    "hamiltonian_path",
    "ideal_power",
    "ideals_equal",
    "identity_labeling",
    "intersect",
    "is_closed_labeling",
    "is_connected",
    "is_cut_set",
    "is_weakly_closed_labeling",
    "join",
    "join_of_completes",
    "make_graph",
    "member",
    "minimal_prime_ideal",
    "multipartite_parts",
    "normal_form",
    "order_lower_bound",
    "parse_graph",
    "path_graph",
    "power_membership_order",
    "proof_decomposition",
    "relabel",
    "report_json",
    "star_compose",
    "witness_power_outside_frobenius",
]
