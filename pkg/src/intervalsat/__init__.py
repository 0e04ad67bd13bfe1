"""intervalsat: interval-structure analysis and exact solving for CNF.

Measure how far a CNF formula is from having linear (interval) incidence
structure, merge separate variable/clause orders into a minimum-k
ordering, and exploit the ordering to solve exact #SAT and weighted
MaxSAT by dynamic programming, with brute-force oracles alongside.
"""

__version__ = "0.1.0"

from .errors import IntervalSatError
from .formula import (
    Assignment,
    Bigraph,
    Clause,
    ClsElem,
    Element,
    Formula,
    Literal,
    MixedOrdering,
    SideOrders,
    VarElem,
    build_formula,
    incidence_bigraph,
    sat_set,
)
from .ordering import (
    Obstruction,
    OrderingVerdict,
    edges_needed,
    find_obstruction,
    needed_sets,
    ordering_width_k,
    verify_interval_ordering,
)
from .merge import (
    MergeResult,
    edges_added_scan,
    feasible_merge,
    feasible_merge_with_records,
    min_merge_k,
)
from .expansion import expand_clause, expand_to_interval, expand_with_mapping
from .solver import (
    CutFormulas,
    SolveReport,
    count_models,
    cut_formulas,
    max_weight,
    ps_profile,
    ps_value,
    ps_width,
    solve_detailed,
)
from .oracles import brute_count, brute_max_weight, brute_min_merge_k
from .hardness import (
    IntervalRep,
    LabeledBigraph,
    ThreePartitionInstance,
    check_representation,
    gen_3partition_bigraph,
    random_k_interval_instance,
    representation_from_partition,
)
from .ioformats import (
    emit_dimacs,
    emit_mixed_ordering,
    emit_orders,
    parse_dimacs,
    parse_mixed_ordering,
    parse_orders,
)

__all__ = [name for name in dir() if not name.startswith("_")]
