#!/usr/bin/env python3
"""Why a substring-local edit distance beats the global one for typeahead.

Run: python3 demos/02_local_vs_global_distance.py
"""

from namefuzz import (
    levenshtein,
    levenshtein_matrix,
    local_levenshtein,
    local_levenshtein_matrix,
    local_levenshtein_span,
)

QUERY, TARGET = "mike", "hi mcke!"


def show(matrix, title):
    print(title)
    print("      " + "  ".join(f"{c!r:>4}" for c in TARGET))
    for label, row in zip(" " + QUERY, matrix):
        print(f"  {label} " + "  ".join(f"{v:>4}" for v in row))
    print()


show(local_levenshtein_matrix(QUERY, TARGET), f"local DP, {QUERY!r} vs {TARGET!r} (first row free):")
m = local_levenshtein_span(QUERY, TARGET)
print(f"local distance = {m.distance}, alignment ends at column {m.end_index}")
print(f"aligned substring: {TARGET[m.span[0] - 1 : m.span[1]]!r} (span {m.span})")
print("-> one substitution turns 'mike' into 'mcke': a great partial match\n")

show(levenshtein_matrix(QUERY, TARGET), "global DP over the same pair (both borders initialized):")
print(f"global distance = {levenshtein(QUERY, TARGET)}")
print("-> the global score drowns the substring hit in insertions\n")

print("The gap matters most for short queries against full names:")
for query, target in [("mik", "mike petterson"), ("smi", "james smith")]:
    local = local_levenshtein(query, target).distance
    print(f"  {query!r} vs {target!r}: local {local}, global {levenshtein(query, target)}")
