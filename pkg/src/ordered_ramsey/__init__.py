"""Ordered Ramsey certificate extractors and an exact small-case computer
for cliques versus monotone (power) paths in ordered graphs and triple
systems."""

from .coloring import (
    BLUE,
    BLUE_POWER_PATH,
    BLUE_TIGHT_PATH,
    NONINCREASING_SET,
    RED,
    RED_CLIQUE,
    ColoringFormatError,
    OrderedColoring,
    PatternSpec,
    Witness,
    format_coloring,
    pair_rank,
    parse_coloring,
    parse_witness_line,
    rank_to_subset,
    read_coloring,
    subset_rank,
    triple_rank,
    write_coloring,
)
from .detect import (
    TightPathResult,
    detect_blue_power_path,
    detect_power_path,
    detect_red_clique,
    es_monotone_subsequence,
    longest_blue_tight_path,
    longest_tight_path,
)
from .extract import (
    BRUTE_FORCE_CUTOFF,
    extract_dilworth,
    extract_main1,
    extract_main2,
    validate_witness,
)
from .nonincreasing import (
    DerivedColoring,
    FExactResult,
    derive_chi,
    f_exact,
    find_max_nonincreasing_set,
    is_nonincreasing_set,
    is_nonincreasing_triple,
    reduce_extract,
    verify_lemma_order,
)
from .randgen import SplitMix64, random_coloring
from .search import (
    AVOIDABLE,
    BOUND_IDS,
    UNAVOIDABLE,
    UNRESOLVED,
    BoundFormula,
    Decision,
    SearchOutcome,
    cnf_satisfiable,
    coloring_avoids,
    decide_avoidable,
    decode_cnf_model,
    eval_bounds,
    export_cnf,
    gen_extremal_block,
    gen_extremal_cupscaps,
    hyperclique_vertices,
    ramsey_exact,
)

__version__ = "0.1.0"
