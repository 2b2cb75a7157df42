"""Exact construction and certification of sparse set systems.

The package builds r-uniform families that avoid grids, triangles and
related configurations, detects and counts those configurations with
exact backtracking, runs the randomized deletion method, analyses the
small linear systems behind crossing line families, and turns linear
families into superimposed codes for group testing.
"""

from .hypergraph import (
    DegreeProfile,
    Hypergraph,
    LinearityReport,
    MatchingDecomposition,
    is_linear,
    matching_decomposition,
    packing_bound,
    read_hypergraph,
    regularity_profile,
    write_hypergraph,
)
from .numbers import (
    A4,
    A6,
    SIDON_MOD_Q,
    IntSet,
    MinkowskiResult,
    PatternKind,
    PatternReport,
    ap,
    behrend_set,
    centered,
    check_pattern,
    greedy_pattern_set,
    is_prime,
    largest_prime_leq,
    minkowski_alpha,
    restricted_set,
    sum_free,
)
from .detect import (
    ConfigKind,
    ConfigWitness,
    CountResult,
    ExtremalResult,
    LatinReport,
    SearchResult,
    SparseReport,
    check_vw_sparse,
    count_config,
    exhaustive_extremal,
    find_config,
    g6,
    g7,
    grid,
    is_steiner,
    latin_subconfig,
    mitre,
    pair_i2,
    parse_kind,
    pasch,
    prstar,
    steiner_e_sparse,
    triangle,
    verify_witness,
)
from .codes import (
    CoverFreeReport,
    SuperimposedReport,
    UnionFreeReport,
    gt_decode,
    gt_encode,
    hex_to_outcome,
    is_cover_free,
    is_union_free,
    outcome_to_hex,
    superimposed_report,
)
from .linalg import (
    RationalMatrix,
    build_matrix_M,
    charpoly,
    charpoly_closed_form,
    matvec,
    r3_line_solution,
    r3_line_system,
    rank_nullspace,
)
from .crossings import (
    CrossingEnumeration,
    CrossingReport,
    CrossingSystem,
    StructureMatch,
    crossing_structure_match,
    crossing_verify,
    enumerate_crossings,
    grid_witness_to_crossing,
    lines_to_crossing,
    vs_families,
    vs_paths,
)
from .constructions import (
    ClassSample,
    RecursiveReport,
    crossing_lines_r3,
    pencil,
    pg32_sts15,
    random_classes,
    recursive_gridfree,
    sidon_graph,
    small_slope_set,
    transversal,
)
from .deletion import (
    PurgeReport,
    classes_union,
    config_h_exponent,
    purge_classes,
    purge_edges,
    random_avoidance_construct,
    sample_edges,
)

__version__ = "0.1.0"
