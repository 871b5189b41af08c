"""Exact tree-likeness parameters of finite graphs.

Computes Gromov hyperbolicity (four-point condition), chordality
(longest chordless cycle), and tree-length (chordal sandwich) exactly;
detects the isometric obstruction patterns that pin hyperbolicity at
specific values; generates the extremal families that show the bounds
tight; and replays every quantitative claim as a verification campaign.
"""

from .chordality import (
    ChordalityResult,
    is_at_free,
    is_chordal,
    is_k_chordal,
    longest_induced_cycle,
)
from .errors import (
    BudgetExceeded,
    DisconnectedGraphError,
    GraphFormatError,
    InternalInvariantError,
    PreconditionError,
    SizeCapError,
    TreelikeError,
)
from .graphs import (
    DistanceMatrix,
    Graph,
    VertexSet,
    all_pairs_distances,
    biconnected_components,
    cartesian_product,
    complement,
    diameter,
    graph_from_edge_list_text,
    graph_from_edges,
    graph_from_graph6,
    graph_power,
    graph_to_edge_list_text,
    graph_to_graph6,
    is_connected,
    is_isometric_subset,
    parse_graph,
    subdivision,
    subdivision_label,
)
from .halfint import HalfInt
from .hyperbolicity import (
    HypResult,
    base_point_delta,
    farris_transform,
    four_point_delta,
    gromov_product,
    hyperbolicity,
)
from .obstructions import (
    CatalogEntry,
    ClassificationReport,
    catalog,
    catalog_entry,
    catalog_selftest,
    classify_4_chordal,
    classify_5_chordal,
    classify_at_free,
    classify_chordal,
    conjecture14_probe,
    find_isometric_embedding,
    half_hyperbolicity_test_bc,
)
from .quadrangle import QuadrangleReport, canonical_geodesic, quadrangle_diagnostics
from .treelength import (
    TreeLengthResult,
    sandwich_probe_question1,
    tree_length_bounds,
    tree_length_exact,
    verify_approximating_tree,
)

__version__ = "0.1.0"
