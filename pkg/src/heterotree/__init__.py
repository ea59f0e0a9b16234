"""Heterochromatic (rainbow) spanning trees in edge-coloured graphs."""

from .colourings import (
    Bipartition,
    bipartite_nice_colouring,
    graceful_colouring,
    random_cute_colouring,
    random_nice_colouring,
    stellar_colouring,
    unique_tree_graph,
    verify_beautiful,
)
from .constructions import (
    TreeFamily,
    beautiful_subgraph,
    beautiful_tree_family,
    cute_tree,
    nice_tree_family,
)
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    HeterotreeError,
    InvalidEdgeSetError,
    InvalidInputError,
)
from .graph import (
    ColouringClass,
    EdgeColouredGraph,
    classify_colouring,
    components_count,
    contained_classes_count,
    is_heterochromatic,
    is_spanning_tree,
)
from .matroid import (
    IntersectionResult,
    find_heterochromatic_spanning_tree,
    graphic_independent,
    graphic_rank,
    lemma1_condition_holds,
    max_common_independent,
    min_rank_cover,
    partition_corank,
    partition_independent,
)
from .oracle import (
    EnumerationReport,
    akbari_alipour_check,
    enumerate_heterochromatic_spanning_trees,
    heterochromatic_embedding,
    suzuki_check,
)
from .trees import Tree, all_trees, random_tree

__version__ = "0.1.0"
