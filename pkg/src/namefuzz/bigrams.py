"""Skip-bigram profiles and the cheap retrieval-layer distance.

A skip-bigram of order j is an ordered character pair (s[i], s[i+1+j]):
order 0 is a plain adjacent bigram, order 1 skips one character, and so on
up to the configured maximum k. Each bigram is weighted lam**order; when
the same pair occurs at several orders, the highest order wins. Profiles
are hashmaps, so scoring a candidate is constant time per query bigram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["BigramProfile", "iter_skip_bigrams", "generate_profile", "bigram_distance"]


@dataclass(frozen=True)
class BigramProfile:
    """Immutable bigram-to-weight map for one string, plus its build params."""

    orders: dict[str, int]
    weights: dict[str, float]
    k: int
    lam: float

    def __len__(self) -> int:
        return len(self.weights)


def iter_skip_bigrams(text: str, k: int) -> Iterator[tuple[str, int]]:
    """Yield every (bigram, order) occurrence in position order.

    This is the raw pre-deduplication stream: a pair that occurs at several
    positions or orders is yielded each time.
    """
    n = len(text)
    for i in range(n - 1):
        for j in range(min(k, n - i - 2) + 1):
            yield text[i] + text[i + 1 + j], j


def generate_profile(text: str, k: int = 1, lam: float = 1.0) -> BigramProfile:
    """Build the deduplicated weight profile of ``text``.

    Strings shorter than two scalars produce an empty profile. Runs in
    O(len(text) * k).
    """
    if k < 0:
        raise ValueError("skip order k must be >= 0")
    if not 0.0 < lam <= 1.0:
        raise ValueError("decay lam must be in (0, 1]")
    orders: dict[str, int] = {}
    for bigram, order in iter_skip_bigrams(text, k):
        prev = orders.get(bigram)
        if prev is None or order > prev:
            # collision rule: the maximum observed skip order wins
            orders[bigram] = order
    weights = {bigram: lam**order for bigram, order in orders.items()}
    return BigramProfile(orders=orders, weights=weights, k=k, lam=lam)


def bigram_distance(query: BigramProfile, target: BigramProfile) -> float:
    """Mismatch score between two profiles; more negative means closer.

    Sums, over the query's bigrams only, the squared weight difference,
    minus the squared query weight when the two weights are exactly equal
    (rewarding exact matches). A bigram absent from the target scores 0.
    """
    if (query.k, query.lam) != (target.k, target.lam):
        raise ValueError(
            f"profiles built with different params: "
            f"(k={query.k}, lam={query.lam}) vs (k={target.k}, lam={target.lam})"
        )
    return score_items(query.weights.items(), target.weights)


def score_items(query_items: Iterable[tuple[str, float]], target_weights: dict[str, float]) -> float:
    """Inner loop of bigram_distance over pre-extracted query items."""
    total = 0.0
    get = target_weights.get
    for bigram, qw in query_items:
        sw = get(bigram, 0.0)
        diff = qw - sw
        total += diff * diff
        if qw == sw:
            total -= qw * qw
    return total
