"""Labeled threshold graphs: creation pairs, recognition, the bijection with
ascent-marked permutations, enumeration and exact counting."""

from .bijection import (
    AscentSelection,
    RunPartition,
    canonical_pair,
    is_standard_form,
    phi,
    phi_inverse,
    run_partition,
    same_graph_pairs,
    standardize,
)
from .combinatorics import (
    EulerianTable,
    Permutation,
    ascent_set,
    brute_force_permutation_census,
    count_ascent_start,
    count_descent_classes,
    eulerian,
    eulerian_row,
)
from .enumeration import (
    brute_force_graph_census,
    count_labeled,
    count_unlabeled,
    enumerate_selections,
    enumerate_threshold_graphs,
    unlabeled_classes,
    verify,
)
from .graph import (
    LabeledGraph,
    NotThresholdError,
    SignWord,
    ThresholdPair,
    Witness,
    construct,
    extract_pair,
    forbidden_witness,
    is_threshold,
    neighborhoods,
)

__version__ = "0.1.0"
