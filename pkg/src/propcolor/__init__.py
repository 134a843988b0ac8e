"""Proportional choosability toolkit.

A proportional coloring from per-vertex color lists is a proper list
coloring in which every palette color c is used floor(eta(c)/k) or
ceil(eta(c)/k) times, where eta(c) counts the lists containing c.  The
package provides graph families, list-assignment bookkeeping, verification
predicates, bipartite-matching machinery, constructive solvers, and
exhaustive oracles for small instances, plus a CLI (``propcolor``).
"""

from .assignments import (
    ColorProfile,
    ExpansionRecord,
    Huing,
    ListAssignment,
    assignment_from_json,
    assignment_to_json,
    build_assignment,
    is_good_huing,
    make_huing,
    multiplicity_profile,
    restrict_assignment,
    well_distributed_expansion,
)
from .coloring import (
    UsageClass,
    Verdict,
    VerifyMode,
    classify_usage,
    combine_extension,
    count_almost_excessive_identity,
    verify,
)
from .errors import InputError, PreconditionError, ResourceCapError, SearchInvariantError
from .graphs import (
    FAMILY_NAMES,
    Graph,
    build_family,
    components,
    disjoint_union,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    induced_subgraph,
)
from .matching import (
    BipartiteMultigraph,
    build_color_vertex_multigraph,
    decompose_regular,
    perfect_matching_with_forced_edge,
    saturating_matching,
)
from .oracle import (
    ChiPcReport,
    ChoosabilityVerdict,
    GalleryInstance,
    canonical_assignments,
    chi_pc,
    decide_proportional_k_choosability,
    equitable_choosable,
    equitable_colorable,
    exists_proportional_coloring,
    find_no_excess_coloring,
    gallery_instance,
)
from .solvers import (
    ComponentProfile,
    assignment_potential,
    color_without_excess,
    component_profiles,
    lift_monotone,
    proportional_labelling_via_huing,
    repair_deficiencies,
    solve_components,
    solve_order_bound,
    solve_smallorder,
    solve_star,
)

__version__ = "0.1.0"
