"""Offline phase: build, persist, and mutate immutable search indexes.

An index is a list of corpus entries, each carrying its augmented name and a
prebuilt bigram profile, plus the (k, lam) the profiles were built with.
Indexes are deeply immutable; add/remove return fresh snapshots, so a
snapshot can be shared with any number of concurrent readers and replaced
atomically.

The on-disk format is a single versioned JSON document. Bigrams are stored
as (two-character string, integer skip order) pairs rather than float
weights, so a round trip is exact for any lam; folded and augmented forms
are recomputed from the stored original on load.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from typing import Iterable

from .bigrams import BigramProfile, generate_profile
from .normalize import AugmentedTarget, normalize_name

__all__ = [
    "FORMAT_VERSION",
    "CorpusEntry",
    "SearchIndex",
    "IndexLoadError",
    "IndexVersionError",
    "MalformedIndexError",
    "DuplicateIdError",
    "EntryNotFoundError",
    "build_index",
    "rebuild_index",
    "add_entry",
    "remove_entry",
    "save_index",
    "load_index",
    "read_corpus",
]

FORMAT_VERSION = 1


class IndexLoadError(Exception):
    """Base class for errors while loading a persisted index."""


class IndexVersionError(IndexLoadError):
    """The document's format_version is not supported."""


class MalformedIndexError(IndexLoadError):
    """The document is not valid JSON or violates the schema."""


class DuplicateIdError(IndexLoadError):
    """Two entries in the document share an id."""


class EntryNotFoundError(LookupError):
    """No entry with the requested id exists in the index."""


@dataclass(frozen=True)
class CorpusEntry:
    entry_id: int
    name: AugmentedTarget
    profile: BigramProfile


@dataclass(frozen=True)
class SearchIndex:
    """Immutable snapshot of a corpus with prebuilt profiles.

    ``next_id`` is the id watermark for add_entry; it is derived state,
    excluded from equality and not persisted.
    """

    k: int
    lam: float
    entries: tuple[CorpusEntry, ...]
    format_version: int = FORMAT_VERSION
    next_id: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.entries)


def _check_params(k: int, lam: float) -> None:
    if k < 0:
        raise ValueError("skip order k must be >= 0")
    if not 0.0 < lam <= 1.0:
        raise ValueError("decay lam must be in (0, 1]")


def build_index(names: Iterable[str], k: int = 1, lam: float = 1.0) -> SearchIndex:
    """Fold, augment, and profile every name.

    Names that fold to the empty string are skipped, never fatal; callers can
    report the skip count as len(input) - len(index). Ids are assigned by
    position among the retained entries.
    """
    _check_params(k, lam)
    entries: list[CorpusEntry] = []
    for raw in names:
        target = normalize_name(raw)
        if not target.folded:
            continue
        profile = generate_profile(target.augmented, k, lam)
        entries.append(CorpusEntry(len(entries), target, profile))
    return SearchIndex(k=k, lam=lam, entries=tuple(entries), next_id=len(entries))


def rebuild_index(index: SearchIndex, k: int, lam: float) -> SearchIndex:
    """Regenerate every profile with new params, preserving ids and names."""
    _check_params(k, lam)
    entries = tuple(
        replace(e, profile=generate_profile(e.name.augmented, k, lam)) for e in index.entries
    )
    return SearchIndex(k=k, lam=lam, entries=entries, next_id=index.next_id)


def add_entry(index: SearchIndex, raw_name: str) -> SearchIndex:
    """Snapshot with one more entry. A name folding to "" is skipped and the
    original index is returned unchanged (same object)."""
    target = normalize_name(raw_name)
    if not target.folded:
        return index
    entry = CorpusEntry(index.next_id, target, generate_profile(target.augmented, index.k, index.lam))
    return replace(index, entries=index.entries + (entry,), next_id=index.next_id + 1)


def remove_entry(index: SearchIndex, entry_id: int) -> SearchIndex:
    """Snapshot without the given entry."""
    remaining = tuple(e for e in index.entries if e.entry_id != entry_id)
    if len(remaining) == len(index.entries):
        raise EntryNotFoundError(f"no entry with id {entry_id}")
    return replace(index, entries=remaining)


def _to_document(index: SearchIndex) -> dict:
    return {
        "format_version": index.format_version,
        "k": index.k,
        "lambda": index.lam,
        "entries": [
            {
                "id": e.entry_id,
                "original": e.name.original,
                "bigrams": sorted([bg, order] for bg, order in e.profile.orders.items()),
            }
            for e in index.entries
        ],
    }


def save_index(index: SearchIndex, path: str | os.PathLike) -> None:
    """Write the index as UTF-8 JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_to_document(index), fh, ensure_ascii=False, indent=1)
        fh.write("\n")


def _malformed(reason: str) -> MalformedIndexError:
    return MalformedIndexError(f"malformed index document: {reason}")


def _from_document(doc: object) -> SearchIndex:
    if not isinstance(doc, dict):
        raise _malformed("top level is not an object")
    version = doc.get("format_version")
    if not isinstance(version, int) or isinstance(version, bool):
        raise _malformed("format_version missing or not an integer")
    if version != FORMAT_VERSION:
        raise IndexVersionError(f"unsupported format_version {version}, expected {FORMAT_VERSION}")
    k = doc.get("k")
    lam = doc.get("lambda")
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise _malformed("k missing or invalid")
    if not isinstance(lam, (int, float)) or isinstance(lam, bool) or not 0.0 < lam <= 1.0:
        raise _malformed("lambda missing or invalid")
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list):
        raise _malformed("entries missing or not a list")

    entries: list[CorpusEntry] = []
    seen: set[int] = set()
    for pos, item in enumerate(raw_entries):
        if not isinstance(item, dict):
            raise _malformed(f"entry {pos} is not an object")
        entry_id = item.get("id")
        original = item.get("original")
        raw_bigrams = item.get("bigrams")
        if not isinstance(entry_id, int) or isinstance(entry_id, bool) or entry_id < 0:
            raise _malformed(f"entry {pos}: id missing or invalid")
        if entry_id in seen:
            raise DuplicateIdError(f"duplicate entry id {entry_id}")
        seen.add(entry_id)
        if not isinstance(original, str):
            raise _malformed(f"entry {entry_id}: original missing or not a string")
        if not isinstance(raw_bigrams, list):
            raise _malformed(f"entry {entry_id}: bigrams missing or not a list")
        orders: dict[str, int] = {}
        for pair in raw_bigrams:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not isinstance(pair[0], str)
                or len(pair[0]) != 2
                or not isinstance(pair[1], int)
                or isinstance(pair[1], bool)
                or not 0 <= pair[1] <= k
            ):
                raise _malformed(f"entry {entry_id}: bad bigram record {pair!r}")
            orders[pair[0]] = pair[1]
        weights = {bg: float(lam) ** order for bg, order in orders.items()}
        profile = BigramProfile(orders=orders, weights=weights, k=k, lam=float(lam))
        entries.append(CorpusEntry(entry_id, normalize_name(original), profile))

    next_id = max((e.entry_id for e in entries), default=-1) + 1
    return SearchIndex(k=k, lam=float(lam), entries=tuple(entries), next_id=next_id)


def load_index(path: str | os.PathLike) -> SearchIndex:
    """Load a persisted index, validating version and structure."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise _malformed(f"invalid JSON ({exc})") from exc
    return _from_document(doc)


def read_corpus(path: str | os.PathLike) -> list[str]:
    """Read a corpus file: UTF-8, one name per line, blank lines ignored."""
    with open(path, "r", encoding="utf-8") as fh:
        return [line for line in (ln.rstrip("\n") for ln in fh) if line.strip()]
