"""Edit distances for the reranking stage.

Two variants share one unit-cost recurrence:

* ``levenshtein`` is the classical global distance: both first row and
  first column are initialized to 0..len, and the answer is the bottom-right
  cell.
* ``local_levenshtein`` zeroes the first row (an alignment may start
  anywhere in the target for free) and returns the minimum of the last row:
  the cost of matching the whole query against the best contiguous substring
  of the target. A prefix or substring hit therefore scores 0.

``TypingSession`` evaluates the local distance incrementally: each typed
character appends one DP row instead of recomputing the whole matrix, and
backspace pops it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice

__all__ = [
    "LocalMatch",
    "levenshtein",
    "levenshtein_matrix",
    "local_levenshtein",
    "local_levenshtein_matrix",
    "local_levenshtein_span",
    "local_levenshtein_within",
    "min_substring_distance",
    "TypingSession",
]


@dataclass(frozen=True)
class LocalMatch:
    """Result of a local-distance computation.

    ``end_index`` is the 1-based scalar index into the target where the best
    alignment ends (leftmost on ties). ``span`` is the 1-based inclusive
    (start, end) of the aligned substring; it is filled only by the
    traceback entry points and stays None on distance-only calls.
    """

    distance: int
    end_index: int
    span: tuple[int, int] | None = None


def levenshtein(a: str, b: str) -> int:
    """Classical unit-cost edit distance. Empty strings are fine."""
    if len(a) < len(b):
        a, b = b, a  # keep the rolling row short
    m = len(b)
    if m == 0:
        return len(a)
    prev = list(range(m + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        left = i
        for j in range(1, m + 1):
            v = prev[j - 1] + (ca != b[j - 1])
            top = prev[j] + 1
            if top < v:
                v = top
            if left + 1 < v:
                v = left + 1
            cur.append(v)
            left = v
        prev = cur
    return prev[m]


def levenshtein_matrix(a: str, b: str) -> list[list[int]]:
    """Full (len(a)+1) x (len(b)+1) global DP matrix."""
    n, m = len(a), len(b)
    d = [list(range(m + 1))] + [[i] + [0] * m for i in range(1, n + 1)]
    for i in range(1, n + 1):
        ca = a[i - 1]
        for j in range(1, m + 1):
            d[i][j] = min(
                d[i - 1][j] + 1,
                d[i][j - 1] + 1,
                d[i - 1][j - 1] + (ca != b[j - 1]),
            )
    return d


def _require_nonempty(query: str, target: str) -> None:
    if not query:
        raise ValueError("query must be non-empty")
    if not target:
        raise ValueError("target must be non-empty")


def _push_row(prev: list[int], i: int, qc: str, target: str) -> list[int]:
    """Compute local DP row i from row i-1 in O(len(target))."""
    cur = [i]
    append = cur.append
    left = i
    diag = prev[0]
    for tc, up in zip(target, islice(prev, 1, None)):
        v = diag + (qc != tc)
        if up + 1 < v:
            v = up + 1
        if left + 1 < v:
            v = left + 1
        append(v)
        left = v
        diag = up
    return cur


def _best_of_row(row: list[int]) -> LocalMatch:
    """Minimum of the last row over columns 1..m, leftmost column on ties."""
    best = row[1]
    best_j = 1
    for j in range(2, len(row)):
        if row[j] < best:
            best = row[j]
            best_j = j
    return LocalMatch(best, best_j)


def local_levenshtein(query: str, target: str) -> LocalMatch:
    """Distance from the query to the closest contiguous substring of target.

    O(len(query) * len(target)) time, two rolling rows of memory. The
    returned ``span`` is None; use :func:`local_levenshtein_span` when the
    aligned range is needed.
    """
    _require_nonempty(query, target)
    prev = [0] * (len(target) + 1)
    for i, qc in enumerate(query, start=1):
        prev = _push_row(prev, i, qc, target)
    return _best_of_row(prev)


def local_levenshtein_within(query: str, target: str, cutoff: int) -> LocalMatch | None:
    """Like :func:`local_levenshtein`, but None as soon as the distance is
    provably above ``cutoff``.

    Row minima never decrease (every cell is bounded below by the previous
    row's minimum), so a row whose minimum exceeds the cutoff ends the scan
    early. The hot path of the staged pipeline.
    """
    _require_nonempty(query, target)
    prev = [0] * (len(target) + 1)
    for i, qc in enumerate(query, start=1):
        prev = _push_row(prev, i, qc, target)
        if min(prev) > cutoff:
            return None
    best = _best_of_row(prev)
    return best if best.distance <= cutoff else None


def local_levenshtein_matrix(query: str, target: str) -> list[list[int]]:
    """Full local DP matrix: row 0 all zeros, column 0 equal to the row index."""
    _require_nonempty(query, target)
    rows = [[0] * (len(target) + 1)]
    for i, qc in enumerate(query, start=1):
        rows.append(_push_row(rows[-1], i, qc, target))
    return rows


def _traceback(d: list[list[int]], query: str, target: str) -> LocalMatch:
    """Walk back from the leftmost minimal cell of the last row to row 0.

    Predecessor preference on ties: diagonal, then top, then left. The
    column where row 0 is entered marks the character before the match, so
    the span starts one to its right.
    """
    best = _best_of_row(d[-1])
    i, j = len(query), best.end_index
    while i > 0:
        cell = d[i][j]
        if j > 0 and cell == d[i - 1][j - 1] + (query[i - 1] != target[j - 1]):
            i -= 1
            j -= 1
        elif cell == d[i - 1][j] + 1:
            i -= 1
        else:
            j -= 1
    return LocalMatch(best.distance, best.end_index, (j + 1, best.end_index))


def local_levenshtein_span(query: str, target: str) -> LocalMatch:
    """Like :func:`local_levenshtein` but with the aligned span filled in.

    Keeps the full matrix for the traceback, so memory is O(n*m). The span's
    substring has a global edit distance to the query equal to ``distance``.
    """
    _require_nonempty(query, target)
    return _traceback(local_levenshtein_matrix(query, target), query, target)


def min_substring_distance(query: str, target: str) -> int:
    """Exhaustive reference: min global distance from query to any contiguous
    substring of target, the empty substring included. O(n * m^3); intended
    for verification on short strings, not production use.
    """
    best = len(query)  # the empty substring costs one deletion per query char
    m = len(target)
    for i in range(m):
        for j in range(i + 1, m + 1):
            dist = levenshtein(query, target[i:j])
            if dist < best:
                best = dist
    return best


class TypingSession:
    """Per-keystroke local-distance evaluation against one fixed target.

    ``push`` appends one DP row in O(len(target)); ``pop`` undoes the last
    keystroke in O(1) by dropping it. All rows are retained, which is what
    makes pop cheap and the span traceback possible. Single-owner mutable
    state: do not mutate from concurrent contexts.
    """

    def __init__(self, target: str) -> None:
        if not target:
            raise ValueError("target must be non-empty")
        self._target = target
        self._rows: list[list[int]] = [[0] * (len(target) + 1)]
        self._chars: list[str] = []

    @property
    def target(self) -> str:
        return self._target

    @property
    def query(self) -> str:
        return "".join(self._chars)

    def push(self, char: str) -> LocalMatch:
        """Append one typed character and return the updated match."""
        if len(char) != 1:
            raise ValueError("push expects exactly one character")
        row = _push_row(self._rows[-1], len(self._chars) + 1, char, self._target)
        self._rows.append(row)
        self._chars.append(char)
        return _best_of_row(row)

    def pop(self) -> LocalMatch | None:
        """Undo the last push. Returns the new current match, or None when the
        query is (or becomes) empty. Popping an empty session is a no-op."""
        if not self._chars:
            return None
        self._rows.pop()
        self._chars.pop()
        return self.result()

    def result(self) -> LocalMatch | None:
        """Current match, or None while no character has been typed."""
        if not self._chars:
            return None
        return _best_of_row(self._rows[-1])

    def span(self) -> LocalMatch | None:
        """Current match including the aligned span, from the retained rows."""
        if not self._chars:
            return None
        return _traceback(self._rows, self.query, self._target)
