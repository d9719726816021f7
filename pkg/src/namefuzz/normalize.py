"""Canonical forms for corpus names and search queries.

Every string entering the matcher goes through the same funnel: case
folding, whitespace collapsing, then a leading-space prefix marker.
Multi-token names additionally get a two-letter initials suffix so that
"Mike Petterson" is findable as "mp".
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "AugmentedTarget",
    "NormalizedQuery",
    "fold",
    "augment_target",
    "normalize_name",
    "normalize_query",
    "span_in_folded",
]


@dataclass(frozen=True)
class AugmentedTarget:
    """A corpus name in all the forms the pipeline needs.

    ``original`` is kept verbatim for display; ``folded`` is the case-folded,
    whitespace-collapsed form; ``augmented`` is what matching actually runs
    against (leading space, optional initials suffix).
    """

    original: str
    folded: str
    augmented: str
    token_count: int


@dataclass(frozen=True)
class NormalizedQuery:
    """A query after folding. ``augmented`` is ``" " + folded``, never more."""

    folded: str
    augmented: str


def fold(raw: str) -> str:
    """Case-fold and collapse every whitespace run to a single ASCII space."""
    return " ".join(raw.casefold().split())


def augment_target(folded: str) -> str:
    """Prefix one space; append the first two tokens' initials when present.

    The input must already be folded. Single-token and empty inputs get only
    the leading space. With two or more tokens, exactly the first scalar of
    each of the first two tokens is appended after a space separator, so
    "abc 123" becomes " abc 123 a1".
    """
    augmented = " " + folded
    tokens = folded.split(" ") if folded else []
    if len(tokens) >= 2:
        augmented += " " + tokens[0][0] + tokens[1][0]
    return augmented


def normalize_name(raw: str) -> AugmentedTarget:
    """Build the full AugmentedTarget for one corpus name."""
    folded = fold(raw)
    return AugmentedTarget(
        original=raw,
        folded=folded,
        augmented=augment_target(folded),
        token_count=len(folded.split(" ")) if folded else 0,
    )


def normalize_query(raw: str) -> NormalizedQuery:
    """Fold a query and prepend the space marker. Queries never get initials."""
    folded = fold(raw)
    return NormalizedQuery(folded=folded, augmented=" " + folded)


def span_in_folded(target: AugmentedTarget, span: tuple[int, int]) -> tuple[int, int] | None:
    """Map a 1-based inclusive span over ``augmented`` onto ``folded``.

    Returns a 0-based inclusive (start, end) highlight range within
    ``folded``, or None when the span lies entirely in the initials suffix
    (an initials-only match has no corresponding folded substring). Matches
    anchored on a space marker are trimmed to start at the first real
    character, since the marker is an augmentation artifact.
    """
    start, end = span
    n = len(target.folded)
    start0 = max(start - 2, 0)
    end0 = min(end - 2, n - 1)
    while start0 <= end0 and target.folded[start0] == " ":
        start0 += 1
    if start0 >= n or end0 < start0:
        return None
    return start0, end0
