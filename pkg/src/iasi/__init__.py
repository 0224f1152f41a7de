"""Integer additive set-labelings of graphs: sumset arithmetic, strong and
uniform set-indexer verification and construction, graph-family generators,
and formula-versus-oracle cross-checks for nourishing numbers."""

from .construct import (
    SearchBounds,
    bounded_search,
    construct_completely_uniform_complete,
    construct_strong,
    construct_strongly_k_uniform_bipartite,
    decide_strongly_k_uniform,
)
from .errors import (
    BudgetExceededError,
    DomainError,
    IasiError,
    InternalCheckError,
    OffsetOverflowError,
)
from .families import FAMILY_NAMES, FamilySpec, generate
from .graphs import (
    Graph,
    cartesian_product,
    clique_number,
    complement,
    components,
    corona,
    diameter,
    disjoint_union,
    induced_subgraph,
    is_bipartite,
    is_connected,
    join,
    maximum_clique,
    power,
)
from .labeling import (
    Labeling,
    PropertyReport,
    edge_label,
    induce_on_contraction,
    induce_on_line_graph,
    induce_on_reduction,
    induce_on_subdivision,
    induce_on_total_graph,
    verify,
)
from .nourish import (
    NourishReport,
    compare,
    formula_value,
    nourishing_number,
    operation_identities,
)
from .sumsets import IntSet, difference_set, is_strong_pair, sumset, translate
from .transforms import contract, line_graph, reduce_path, subdivide, total_graph

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DomainError",
    "FAMILY_NAMES",
    "FamilySpec",
    "Graph",
    "IasiError",
    "IntSet",
    "InternalCheckError",
    "Labeling",
    "NourishReport",
    "OffsetOverflowError",
    "PropertyReport",
    "SearchBounds",
    "bounded_search",
    "cartesian_product",
    "clique_number",
    "compare",
    "complement",
    "components",
    "construct_completely_uniform_complete",
    "construct_strong",
    "construct_strongly_k_uniform_bipartite",
    "contract",
    "corona",
    "decide_strongly_k_uniform",
    "diameter",
    "difference_set",
    "disjoint_union",
    "edge_label",
    "formula_value",
    "generate",
    "induce_on_contraction",
    "induce_on_line_graph",
    "induce_on_reduction",
    "induce_on_subdivision",
    "induce_on_total_graph",
    "induced_subgraph",
    "is_bipartite",
    "is_connected",
    "is_strong_pair",
    "join",
    "line_graph",
    "maximum_clique",
    "nourishing_number",
    "operation_identities",
    "power",
    "reduce_path",
    "subdivide",
    "sumset",
    "total_graph",
    "translate",
    "verify",
]
