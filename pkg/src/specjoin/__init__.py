"""specjoin: normalized Laplacian spectra of joined unions of regular graphs,
specialized to power graphs of finite cyclic groups, with a built-in dense
eigensolver oracle for cross-checking every structural formula."""

__version__ = "0.1.0"

from .errors import (
    IsolatedVertexError,
    NoConvergenceError,
    NonRegularComponentError,
    OracleSizeError,
    SpecjoinError,
    TotalMismatchError,
)
from .graph_core import (
    Graph,
    degrees,
    from_edge_list,
    is_bipartite,
    is_connected,
    is_regular,
    joined_union,
    load_edge_list,
    make_complete,
    make_cycle,
    make_empty,
    make_star,
    parse_edge_list,
)
from .joined_union import (
    Component,
    JoinedUnionSpec,
    QuotientMatrix,
    alphas,
    materialize,
    quotient_eigenvalues,
    quotient_matrix,
    structural_spectrum,
)
from .numtheory import (
    FactoredInteger,
    divisors,
    factorize,
    proper_divisors,
    totient,
    totient_sum_check,
)
from .power_graph import (
    PowerGraphDecomposition,
    decompose,
    divisor_graph,
    family_report,
    isomorphism_check,
    multiplicity_floor_check,
    power_graph_direct,
    power_spectrum,
    realize,
    spectrum_pq_closed,
)
from .spectra import (
    Spectrum,
    SymMatrix,
    adjacency_spectrum_closed,
    compare_spectra,
    eigenvalues_symmetric,
    group_multiplicities,
    laplacian_spectrum,
    normalized_laplacian,
)

__all__ = [
    "__version__",
    "SpecjoinError",
    "IsolatedVertexError",
    "NoConvergenceError",
    "NonRegularComponentError",
    "OracleSizeError",
    "TotalMismatchError",
    "Graph",
    "degrees",
    "from_edge_list",
    "is_bipartite",
    "is_connected",
    "is_regular",
    "joined_union",
    "load_edge_list",
    "make_complete",
    "make_cycle",
    "make_empty",
    "make_star",
    "parse_edge_list",
    "Component",
    "JoinedUnionSpec",
    "QuotientMatrix",
    "alphas",
    "materialize",
    "quotient_eigenvalues",
    "quotient_matrix",
    "structural_spectrum",
    "FactoredInteger",
    "divisors",
    "factorize",
    "proper_divisors",
    "totient",
    "totient_sum_check",
    "PowerGraphDecomposition",
    "decompose",
    "divisor_graph",
    "family_report",
    "isomorphism_check",
    "multiplicity_floor_check",
    "power_graph_direct",
    "power_spectrum",
    "realize",
    "spectrum_pq_closed",
    "Spectrum",
    "SymMatrix",
    "adjacency_spectrum_closed",
    "compare_spectra",
    "eigenvalues_symmetric",
    "group_multiplicities",
    "laplacian_spectrum",
    "normalized_laplacian",
]
