#!/usr/bin/env python3
"""Per-keystroke matching without recomputing the whole DP table.

Each typed character appends one row; backspace pops it.

Run: python3 demos/04_typing_session.py
"""

from namefuzz import TypingSession, local_levenshtein

TARGET = "jennifer mikoilan"

session = TypingSession(TARGET)
print(f"target: {TARGET!r}\n")

for ch in "mikke":
    m = session.push(ch)
    batch = local_levenshtein(session.query, TARGET)
    print(f"typed {session.query!r:9} -> distance {m.distance} (ends col {m.end_index}); "
          f"full recompute agrees: {batch.distance}")

print("\noops, double 'k' - backspace twice and finish correctly:")
session.pop()
session.pop()
for ch in "ko":
    m = session.push(ch)
    print(f"typed {session.query!r:9} -> distance {m.distance}")

m = session.span()
print(f"\nbest alignment for {session.query!r}: span {m.span} = "
      f"{TARGET[m.span[0] - 1 : m.span[1]]!r}, distance {m.distance}")
