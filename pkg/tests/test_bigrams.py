import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from namefuzz import bigram_distance, generate_profile, iter_skip_bigrams

# Weighted skip-bigram multiset of " abc 12 a1" at k=1, lam=0.5: nine adjacent
# pairs at weight 1 and eight order-1 pairs at weight 1/2. ' a' occurs twice
# adjacently; ' 1' occurs once adjacently and once at skip order 1.
DOC_EXAMPLE_MULTISET = Counter(
    {
        (" a", 1.0): 2,
        ("ab", 1.0): 1,
        ("bc", 1.0): 1,
        ("c ", 1.0): 1,
        (" 1", 1.0): 1,
        ("12", 1.0): 1,
        ("2 ", 1.0): 1,
        ("a1", 1.0): 1,
        (" b", 0.5): 1,
        ("ac", 0.5): 1,
        ("b ", 0.5): 1,
        ("c1", 0.5): 1,
        (" 2", 0.5): 1,
        ("1 ", 0.5): 1,
        ("2a", 0.5): 1,
        (" 1", 0.5): 1,
    }
)

# After deduplication with the max-order collision rule, ' 1' keeps order 1.
DOC_EXAMPLE_PROFILE = {
    " a": 1.0,
    "ab": 1.0,
    "bc": 1.0,
    "c ": 1.0,
    "12": 1.0,
    "2 ": 1.0,
    "a1": 1.0,
    " 1": 0.5,
    " b": 0.5,
    "ac": 0.5,
    "b ": 0.5,
    "c1": 0.5,
    " 2": 0.5,
    "1 ": 0.5,
    "2a": 0.5,
}


def test_raw_multiset_matches_worked_example():
    raw = Counter((bg, 0.5**order) for bg, order in iter_skip_bigrams(" abc 12 a1", k=1))
    assert raw == DOC_EXAMPLE_MULTISET


def test_profile_applies_max_order_rule():
    profile = generate_profile(" abc 12 a1", k=1, lam=0.5)
    assert profile.weights == DOC_EXAMPLE_PROFILE
    assert profile.orders[" 1"] == 1
    assert profile.orders[" a"] == 0


def test_short_strings_give_empty_profile():
    assert generate_profile("x", k=3, lam=0.5).weights == {}
    assert generate_profile("", k=1).weights == {}


def test_param_validation():
    with pytest.raises(ValueError):
        generate_profile("abc", k=-1)
    with pytest.raises(ValueError):
        generate_profile("abc", k=1, lam=0.0)
    with pytest.raises(ValueError):
        generate_profile("abc", k=1, lam=1.5)


def oracle_profile(text, k, lam):
    """Independent construction: enumerate all position pairs (i, j) with
    1 <= j - i <= k + 1 and keep the maximum order per bigram."""
    orders = {}
    for i in range(len(text)):
        for j in range(i + 1, min(i + k + 1, len(text) - 1) + 1):
            bg = text[i] + text[j]
            order = j - i - 1
            if bg not in orders or order > orders[bg]:
                orders[bg] = order
    return {bg: lam**order for bg, order in orders.items()}


def test_profile_matches_bruteforce_oracle():
    rng = random.Random(20260811)
    alphabet = "abc 1"
    for _ in range(10_000):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        k = rng.randint(0, 3)
        lam = rng.choice([1.0, 0.5, 0.25])
        assert generate_profile(text, k, lam).weights == oracle_profile(text, k, lam)


def test_distance_identity_is_minus_cardinality():
    p = generate_profile(" mike", k=1, lam=1.0)
    assert bigram_distance(p, p) == -len(p.weights)


def test_distance_disjoint_is_plus_cardinality():
    q = generate_profile(" abc", k=0, lam=1.0)
    s = generate_profile(" xyz", k=0, lam=1.0)
    assert not set(q.weights) & set(s.weights)
    assert bigram_distance(q, s) == len(q.weights)


def test_distance_hand_computed_pair():
    q = generate_profile(" mik", k=1, lam=1.0)
    assert set(q.weights) == {" m", "mi", "ik", " i", "mk"}
    assert bigram_distance(q, generate_profile(" mike petterson mp", k=1, lam=1.0)) == -5
    assert bigram_distance(q, generate_profile(" mark", k=1, lam=1.0)) == 3


def test_distance_rejects_mismatched_params():
    q = generate_profile(" abc", k=1, lam=1.0)
    s = generate_profile(" abc", k=2, lam=1.0)
    with pytest.raises(ValueError):
        bigram_distance(q, s)
    s = generate_profile(" abc", k=1, lam=0.5)
    with pytest.raises(ValueError):
        bigram_distance(q, s)


@given(
    st.text(alphabet="ab c", min_size=0, max_size=10),
    st.text(alphabet="ab c", min_size=0, max_size=10),
)
def test_distance_lower_bound(qt, stxt):
    q = generate_profile(" " + qt, k=1, lam=0.5)
    s = generate_profile(" " + stxt, k=1, lam=0.5)
    floor = -sum(w * w for w in q.weights.values())
    assert bigram_distance(q, s) >= floor
    assert bigram_distance(q, q) == floor


@given(
    st.text(alphabet="abcd", min_size=0, max_size=10),
    st.text(alphabet="abcd", min_size=0, max_size=10),
)
def test_unit_decay_counts_presence(qt, stxt):
    # with lam = 1 every weight is 1, so the score is absent-minus-present
    q = generate_profile(" " + qt, k=1, lam=1.0)
    s = generate_profile(" " + stxt, k=1, lam=1.0)
    present = sum(1 for bg in q.weights if bg in s.weights)
    absent = len(q.weights) - present
    assert bigram_distance(q, s) == absent - present


def test_cardinality_bounded_by_alphabet_squared():
    rng = random.Random(7)
    for k in (0, 1, 2, 5):
        text = "".join(rng.choice("ab") for _ in range(50))
        profile = generate_profile(text, k=k, lam=0.5)
        assert len(profile.weights) <= 4
