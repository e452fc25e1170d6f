"""Reconstruction of minimal deterministic hidden-state models (recurrent
causal-state machines) from discrete-valued time series, plus the simulation,
oracle, baseline, and benchmark machinery used to validate them."""

__version__ = "0.1.0"

from .ingest import Alphabet, SymbolSequence, parse_sequence, load_multisequence
from .counts import CountStore, build_counts, store_from_table
from .stat_tests import Morph, TestResult, estimate_morph, ks_two_sample, chi_squared_test
from .homogenize import State, StateSet, initialize, homogenize, child_suffixes
from .determinize import successor, remove_transients, determinize
from .machine import (
    Distribution,
    EpsilonMachine,
    entropy,
    conditional_entropy,
    mutual_information,
    entropy_rate,
    estimate_transitions,
    export,
    machine_from_json,
    stationary_distribution,
    stationary_vector,
    statistical_complexity,
    variational_distance,
    word_distribution,
)
from .simulate import (
    ProcessSpec,
    builtin_process,
    even_process,
    golden_mean_process,
    iid_process,
    period_process,
    simulate,
)
from .oracle import ExactStore, exact_morphs, exact_reconstruct, partition_agrees
from .baseline import BaselineModel, merge_order_policy, subtree_merge
from .diagnostics import (
    ErrorBoundInputs,
    ErrorBounds,
    collective_error_bound,
    lmax_advisor,
    morph_error_bound,
)
from .pipeline import ReconstructionResult, reconstruct, reconstruct_from_counts
from .benchmark import BenchmarkConfig, BenchmarkRow, run_benchmark, write_csv
from . import errors
