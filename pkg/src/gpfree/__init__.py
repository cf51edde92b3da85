"""Geometric-progression-free sets: enumeration, certificates, bounds, search."""

from .bounds import (
    BoundReport,
    bound_report,
    brown_gordon_bound,
    exclusion_constant,
    improved_bound,
    render_bound,
    render_decimal,
    render_table,
    riddell_bound,
)
from .construction import (
    Block,
    Family,
    FamilyCheck,
    SweepReport,
    build_family,
    compute_L,
    count_x_blocks,
    count_y_blocks,
    count_z_blocks,
    exclusion_lower_bound,
    sweep_verify,
    verify_family,
    x_blocks,
    y_blocks,
    z_blocks,
)
from .progressions import (
    BRUTE_FORCE_CAP,
    TERM_LIMIT,
    GpSet,
    Progression,
    Ratio,
    TermOverflowError,
    as_progression,
    brute_force_gps,
    canonical_ratio,
    enumerate_gps,
    expand,
    find_gp,
    is_gp_free,
)
from .search import (
    DensityReport,
    Hypergraph,
    SearchResult,
    density_report,
    gp_hypergraph,
    greedy_gp_free,
    max_gp_free_exact,
    squarefree_set,
)

__version__ = "0.1.0"
