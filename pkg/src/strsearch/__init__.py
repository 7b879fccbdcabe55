"""Exact string matching over bytes.

The centerpiece is a suffix tree index built online in linear time, whose
per-node leaf counts and suffix coordinates make occurrence counting a
single descent and enumeration proportional to the output. Alongside it:
an uncompressed suffix trie for structural comparison, the four classical
single-pattern matchers (naive, KMP, Rabin-Karp, Boyer-Moore), seeded
dataset generation, and a benchmark harness with CSV output.

Hot kernels run on a compiled extension when it is built, with a pure-Python
fallback selected automatically at import; see strsearch.backend helpers.
"""

from ._backend import active_name as active_backend, has_native as has_native_backend, use as use_backend
from .baselines import (
    BmTables,
    RollingHashParams,
    bm_build_tables,
    bm_find_all,
    build_lps,
    kmp_find_all,
    naive_find_all,
    rk_find_all,
    rk_hash,
)
from .bench import (
    AccuracyReport,
    BenchConfig,
    BenchRecord,
    run_accuracy_experiment,
    run_benchmark_matrix,
    write_csv,
)
from .core import (
    SENTINEL,
    Counters,
    Pattern,
    Text,
    VerificationReport,
    gold_standard_matches,
    make_text,
    verify_occurrences,
)
from .datagen import (
    DNA_UNIFORM,
    AlphabetSpec,
    GenSpec,
    SplitMix64,
    generate_text,
    read_fasta,
    read_text_file,
    sample_patterns,
)
from .suffix_tree import Locus, SuffixTreeIndex, build_suffix_tree
from .suffix_trie import IndexStats, SuffixTrieIndex, build_suffix_trie

__version__ = "0.1.0"

__all__ = [
    "SENTINEL",
    "AccuracyReport",
    "AlphabetSpec",
    "BenchConfig",
    "BenchRecord",
    "BmTables",
    "Counters",
    "DNA_UNIFORM",
    "GenSpec",
    "IndexStats",
    "Locus",
    "Pattern",
    "RollingHashParams",
    "SplitMix64",
    "SuffixTreeIndex",
    "SuffixTrieIndex",
    "Text",
    "VerificationReport",
    "active_backend",
    "bm_build_tables",
    "bm_find_all",
    "build_lps",
    "build_suffix_tree",
    "build_suffix_trie",
    "generate_text",
    "gold_standard_matches",
    "has_native_backend",
    "kmp_find_all",
    "make_text",
    "naive_find_all",
    "read_fasta",
    "read_text_file",
    "rk_find_all",
    "rk_hash",
    "run_accuracy_experiment",
    "run_benchmark_matrix",
    "sample_patterns",
    "use_backend",
    "verify_occurrences",
    "write_csv",
]
