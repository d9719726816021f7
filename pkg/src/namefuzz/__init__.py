"""namefuzz: typeahead fuzzy name search for small corpora.

Two-stage pipeline: a cheap skip-bigram distance filters the corpus, then an
exact substring-local edit distance reranks the survivors. Built for
per-keystroke search over a few thousand short names.
"""

from .bigrams import BigramProfile, bigram_distance, generate_profile, iter_skip_bigrams
from .distance import (
    LocalMatch,
    TypingSession,
    levenshtein,
    levenshtein_matrix,
    local_levenshtein,
    local_levenshtein_matrix,
    local_levenshtein_span,
    local_levenshtein_within,
    min_substring_distance,
)
from .index import (
    FORMAT_VERSION,
    CorpusEntry,
    DuplicateIdError,
    EntryNotFoundError,
    IndexLoadError,
    IndexVersionError,
    MalformedIndexError,
    SearchIndex,
    add_entry,
    build_index,
    load_index,
    read_corpus,
    rebuild_index,
    remove_entry,
    save_index,
)
from .normalize import (
    AugmentedTarget,
    NormalizedQuery,
    augment_target,
    fold,
    normalize_name,
    normalize_query,
    span_in_folded,
)
from .search import SearchParams, SearchResult, result_to_dict, search, search_exhaustive

__version__ = "0.1.0"

__all__ = [
    "AugmentedTarget",
    "BigramProfile",
    "CorpusEntry",
    "DuplicateIdError",
    "EntryNotFoundError",
    "FORMAT_VERSION",
    "IndexLoadError",
    "IndexVersionError",
    "LocalMatch",
    "MalformedIndexError",
    "NormalizedQuery",
    "SearchIndex",
    "SearchParams",
    "SearchResult",
    "TypingSession",
    "add_entry",
    "augment_target",
    "bigram_distance",
    "build_index",
    "fold",
    "generate_profile",
    "iter_skip_bigrams",
    "levenshtein",
    "levenshtein_matrix",
    "load_index",
    "local_levenshtein",
    "local_levenshtein_matrix",
    "local_levenshtein_span",
    "local_levenshtein_within",
    "min_substring_distance",
    "normalize_name",
    "normalize_query",
    "read_corpus",
    "rebuild_index",
    "remove_entry",
    "result_to_dict",
    "save_index",
    "search",
    "search_exhaustive",
    "span_in_folded",
]
