#!/usr/bin/env python3
"""How raw names become matchable: folding, augmentation, skip-bigrams.

Run: python3 demos/01_names_and_bigrams.py
"""

from namefuzz import fold, augment_target, generate_profile, iter_skip_bigrams

print("=" * 64)
print("1. Folding and augmentation")
print("=" * 64)

for raw in ["Mike  Petterson ", "abc", "abc 123", "mike petterson jr"]:
    folded = fold(raw)
    print(f"{raw!r:24} -> folded {folded!r:22} -> augmented {augment_target(folded)!r}")

print()
print("The leading space makes prefix matches distinguishable from")
print("mid-string matches; the initials suffix makes 'Mike Petterson'")
print("findable as 'mp'.")

print()
print("=" * 64)
print("2. Skip-bigrams of ' abc 12 a1' (k=1, lambda=0.5)")
print("=" * 64)

text = augment_target(fold("abc 12"))
print(f"augmented string: {text!r}\n")
print("raw stream (order 0 = adjacent, order 1 = one character skipped):")
for bigram, order in iter_skip_bigrams(text, k=1):
    print(f"  {bigram!r} order {order} weight {0.5 ** order}")

profile = generate_profile(text, k=1, lam=0.5)
print(f"\ndeduplicated profile ({len(profile)} bigrams; max order wins on collision):")
for bigram in sorted(profile.weights):
    print(f"  {bigram!r} -> {profile.weights[bigram]}")
print("\nnote ' 1': it occurs adjacently AND at skip order 1, so it stores 0.5")
