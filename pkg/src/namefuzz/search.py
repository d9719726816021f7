"""Online phase: the two-stage query pipeline.

Stage 1 scores every corpus entry with the cheap bigram distance and keeps
those at or under t1. Stage 2 reranks the survivors with the exact local
edit distance and keeps those at or under t2. Results are ordered by
(local distance, bigram distance, match end position, entry id), so exact
prefix hits come first, substring hits next, fuzzy hits last.

Queries shorter than ``min_fuzzy_len`` skip the fuzzy machinery entirely
and fall back to exact substring matching (still ranked by bigram distance,
so prefixes lead); one- and two-character queries are too noisy to fuzz.

Both distance stages run on space-prefixed strings: the query as
``" " + folded``, the target as its fully augmented form. Keeping the
marker on the query at the rerank stage charges mid-token alignments one
edit, which is what keeps junk like "m123ik" out of the results for "mik"
while leaving prefix and token-start matches at distance 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .bigrams import generate_profile, score_items
from .distance import local_levenshtein_span, local_levenshtein_within
from .index import CorpusEntry, SearchIndex
from .normalize import normalize_query

__all__ = ["SearchParams", "SearchResult", "search", "search_exhaustive", "result_to_dict"]

_RankKey = Callable[["SearchResult"], Any]


@dataclass(frozen=True)
class SearchParams:
    """Pipeline knobs. Defaults are the shipped configuration: k=1, lam=1,
    both thresholds 1, fuzzy matching from 3 typed characters, 20 results."""

    k: int = 1
    lam: float = 1.0
    t1: float = 1.0
    t2: int = 1
    min_fuzzy_len: int = 3
    limit: int = 20

    def violations(self) -> list[str]:
        problems = []
        if self.k < 0:
            problems.append("k must be >= 0")
        if not 0.0 < self.lam <= 1.0:
            problems.append("lambda must be in (0, 1]")
        if self.t2 < 0:
            problems.append("t2 must be >= 0")
        if self.min_fuzzy_len < 1:
            problems.append("min_fuzzy_len must be >= 1")
        if self.limit < 0:
            problems.append("limit must be >= 0 (0 means unlimited)")
        return problems

    def validate(self) -> None:
        problems = self.violations()
        if problems:
            raise ValueError("; ".join(problems))


@dataclass(frozen=True)
class SearchResult:
    """One emitted match. ``span`` is 1-based inclusive over the entry's
    augmented string; ``bd`` is the stage-1 score kept for ranking."""

    entry_id: int
    name: str
    lld: int
    bd: float
    end_index: int
    span: tuple[int, int]


def _default_key(r: SearchResult) -> tuple:
    return (r.lld, r.bd, r.end_index, r.entry_id)


def _resolve_params(index: SearchIndex, params: SearchParams | None) -> SearchParams:
    if params is None:
        return SearchParams(k=index.k, lam=index.lam)
    params.validate()
    if (params.k, params.lam) != (index.k, index.lam):
        raise ValueError(
            f"params (k={params.k}, lam={params.lam}) do not match the index "
            f"(k={index.k}, lam={index.lam})"
        )
    return params


def _run(
    index: SearchIndex,
    raw_query: str,
    params: SearchParams | None,
    *,
    gate: bool,
    rank_key: _RankKey | None,
) -> list[SearchResult]:
    params = _resolve_params(index, params)
    query = normalize_query(raw_query)
    if not query.folded:
        return []

    profile = generate_profile(query.augmented, params.k, params.lam)
    query_items = list(profile.weights.items())

    # with lam = 1 every weight is 1 and the score reduces to counting
    # which query bigrams the target carries: absent - present
    unit_bigrams = list(profile.weights) if params.lam == 1.0 else None

    if len(query.folded) >= params.min_fuzzy_len:
        # spans need a full-matrix traceback, so they are filled in only for
        # the entries that survive sorting and truncation
        kept: list[tuple[int, float, int, CorpusEntry]] = []
        t1, t2 = params.t1, params.t2
        for entry in index.entries:
            weights = entry.profile.weights
            if unit_bigrams is not None:
                present = sum(map(weights.__contains__, unit_bigrams))
                bd = float(len(unit_bigrams) - 2 * present)
            else:
                bd = score_items(query_items, weights)
            if gate and bd > t1:
                continue
            # exact occurrences short-circuit the DP: distance 0 at the end
            # of the leftmost occurrence is exactly what the probe would find
            pos = entry.name.augmented.find(query.augmented)
            if pos >= 0:
                kept.append((0, bd, pos + len(query.augmented), entry))
                continue
            probe = local_levenshtein_within(query.augmented, entry.name.augmented, t2)
            if probe is None:
                continue
            kept.append((probe.distance, bd, probe.end_index, entry))
        results = [
            SearchResult(entry.entry_id, entry.name.original, lld, bd, end, (0, 0))
            for lld, bd, end, entry in kept
        ]
        results = _order_and_truncate(results, params, rank_key)
        by_id = {entry.entry_id: entry for _, _, _, entry in kept}
        for pos, r in enumerate(results):
            match = local_levenshtein_span(query.augmented, by_id[r.entry_id].name.augmented)
            results[pos] = SearchResult(r.entry_id, r.name, r.lld, r.bd, r.end_index, match.span)
        return results

    needle = query.folded
    results = []
    for entry in index.entries:
        pos = entry.name.augmented.find(needle)
        if pos < 0:
            continue
        bd = score_items(query_items, entry.profile.weights)
        end = pos + len(needle)
        results.append(SearchResult(entry.entry_id, entry.name.original, 0, bd, end, (pos + 1, end)))
    return _order_and_truncate(results, params, rank_key)


def _order_and_truncate(
    results: list[SearchResult], params: SearchParams, rank_key: _RankKey | None
) -> list[SearchResult]:
    results.sort(key=rank_key or _default_key)
    if params.limit:
        del results[params.limit:]
    return results


def search(
    index: SearchIndex,
    raw_query: str,
    params: SearchParams | None = None,
    *,
    rank_key: _RankKey | None = None,
) -> list[SearchResult]:
    """Staged search: bigram filter, then local-distance rerank.

    Pure function of an immutable snapshot; safe to call concurrently.
    ``rank_key`` optionally replaces the default sort key (a hook for
    engagement-style reranking; nothing ships with one). The key runs
    before spans are resolved, so it must not read ``span``.
    """
    return _run(index, raw_query, params, gate=True, rank_key=rank_key)


def search_exhaustive(
    index: SearchIndex,
    raw_query: str,
    params: SearchParams | None = None,
    *,
    rank_key: _RankKey | None = None,
) -> list[SearchResult]:
    """Like :func:`search` but without the stage-1 gate: the local distance is
    computed for every entry. A recall yardstick for the staged pipeline."""
    return _run(index, raw_query, params, gate=False, rank_key=rank_key)


def result_to_dict(r: SearchResult) -> dict:
    """Wire representation shared by the CLI's json mode and the HTTP API."""
    return {
        "id": r.entry_id,
        "name": r.name,
        "lld": r.lld,
        "bd": r.bd,
        "span": [r.span[0], r.span[1]],
    }
