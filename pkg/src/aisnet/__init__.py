"""All-interval twelve-tone rows: catalog generation and network analysis."""

from .rows import (
    DuplicatePitchError,
    NotNormalFormError,
    Row,
    RowParseError,
    as_row,
    cyclic_intervals,
    format_row,
    is_ais_normal_form,
    linear_intervals,
    parse_row,
    row_from_linear_intervals,
)
from .ops import (
    Constellation,
    Orbit,
    constellation,
    invert,
    multiply_m5,
    orbit,
    q_rotate,
    retrograde_normal,
    star,
    transpose,
)
from .corpus import (
    Corpus,
    enumerate_by_permutation_filter,
    generate_normal_forms,
    generate_primes,
    is_catalog_prime,
    reduce_by_inversion,
)
from .catalog import (
    ALL_TRICHORD_HEXACHORD,
    CatalogEntry,
    build_catalog,
    is_link,
    is_parallel_inverted,
    is_symmetric_inverted,
    link_window_starts,
    setclass_prime_form,
)
from .distances import (
    SwapProfile,
    close_coupled_pairs,
    distance_matrix,
    swap_profile,
    vl_distance_sq,
)
from .graph import (
    CommunityAssignment,
    DegreeStats,
    EmptyGraphError,
    InsufficientDataError,
    PowerLawFit,
    UnknownLabelError,
    build_network,
    connected_components,
    degree_stats,
    fit_pure_power_law,
    fit_truncated_power_law,
    hermits,
    louvain_communities,
    maximal_cliques,
    verify_clique,
)

__version__ = "0.1.0"
