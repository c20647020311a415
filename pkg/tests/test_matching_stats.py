import random

import pytest

from wheeler_ms import (
    Interval,
    MsState,
    WheelerDFA,
    build_index,
    build_lcp_array,
    case1_update,
    case2_shrink,
    max_predecessor,
    min_predecessor,
    min_string_prefix,
    string_matching_statistics,
    wdfa_matching_statistics,
)
from wheeler_ms.matching_stats import shrink_length
from wheeler_ms.oracle import (
    brute_T,
    brute_extreme_strings,
    brute_matching_statistics,
    gen_path_automaton,
    gen_trie_automaton,
    generate_instances,
)


def lcp(a, b):
    k = 0
    while k < min(len(a), len(b)) and a[k] == b[k]:
        k += 1
    return k


def test_heba(sample19, sample19_lcp):
    got, steps = wdfa_matching_statistics(sample19, sample19_lcp, "heba", return_steps=True)
    assert got == [(1, 1, 17, 17), (2, 2, 12, 12), (3, 3, 7, 7), (4, 4, 3, 3)]
    assert got == brute_matching_statistics(sample19, "heba")
    assert steps == 4


def test_hebab(sample19, sample19_lcp):
    # pinned from brute_matching_statistics: only "b" survives at position 5
    expected = [(1, 1, 17, 17), (2, 2, 12, 12), (3, 3, 7, 7), (4, 4, 3, 3), (5, 1, 5, 7)]
    assert brute_matching_statistics(sample19, "hebab") == expected
    seen = []
    got = wdfa_matching_statistics(sample19, sample19_lcp, "hebab", observer=lambda s: seen.append(s))
    assert got == expected
    # heba -> ba -> a -> empty window, then b read from the whole set
    windows = [(s.start, s.end) for s in seen]
    assert windows == [(1, 1), (1, 2), (1, 3), (1, 4), (3, 4), (4, 4), (5, 4), (5, 5)]
    assert seen[4].iv == (2, 3)


def test_trivial_patterns(sample19, sample19_lcp):
    assert wdfa_matching_statistics(sample19, sample19_lcp, "") == []
    assert wdfa_matching_statistics(sample19, sample19_lcp, "z") == [(1, 0, 1, 19)]


def test_single_state_automaton():
    A = WheelerDFA("#", [], sigma="ab")
    L = build_lcp_array(A)
    assert wdfa_matching_statistics(A, L, "ab") == [(1, 0, 1, 1), (2, 0, 1, 1)]


def test_case1_from_window_h(sample19, sample19_lcp):
    st = MsState(1, 1, Interval(17, 17), 1, 1)
    new = case1_update(sample19, sample19_lcp, st, "e", Interval(12, 12))
    assert (new.start, new.end, new.iv) == (1, 2, (12, 12))
    assert new.lcp_min == 2 == lcp("eh###", "eh")
    assert new.lcp_max == 2


def test_case1_from_empty_window(sample19, sample19_lcp):
    st = MsState(1, 0, Interval(1, 19), 0, 0)
    new = case1_update(sample19, sample19_lcp, st, "h", Interval(17, 17))
    assert (new.lcp_min, new.lcp_max) == (1, 1)


def test_case1_subcase_a():
    # states "", a, b, ab, abc; window "b" is [3, 4] and only state 4 reads on with c
    A = gen_trie_automaton(["b", "abc"])
    L = build_lcp_array(A)
    st = MsState(1, 1, Interval(3, 4), 1, 1)
    new = case1_update(A, L, st, "c", Interval(5, 5))
    assert min_predecessor(A, 5) == 4 > st.iv.l
    assert max_predecessor(A, 5) == 4 == st.iv.r
    assert (new.lcp_min, new.lcp_max) == (2, 2)
    assert min_string_prefix(A, 5, 4) == "cba#"


def test_case1_subcase_b(sample19, sample19_lcp):
    # window "b" at [5, 7]; reading "a" reaches [2, 3]; min predecessor of 2 is 2 < 5
    # and max predecessor of 3 is 8 > 7
    st = MsState(1, 1, Interval(5, 7), 1, 1)
    new = case1_update(sample19, sample19_lcp, st, "a", Interval(2, 3))
    assert new.lcp_min == 1 + min(sample19_lcp.rmq.range_min(4, 9), 1)
    assert new.lcp_max == 1 + min(sample19_lcp.rmq.range_min(15, 16), 1)
    lo, hi = brute_extreme_strings(sample19, 10)
    assert new.lcp_min == lcp(lo[2], "ab")
    assert new.lcp_max == lcp(hi[3], "ab")


def test_eq1_heba(sample19, sample19_lcp):
    st = MsState(1, 4, Interval(3, 3), 2, 1)
    assert st.lcp_min == lcp("abdg###", "abeh") and st.lcp_max == lcp("abeh", "acei###")
    assert shrink_length(sample19_lcp, st) == 2


def test_case2_heba(sample19, sample19_lcp):
    st = MsState(1, 4, Interval(3, 3), 2, 1)
    new = case2_shrink(sample19, sample19_lcp, st)
    assert (new.start, new.end) == (3, 4)
    assert new.iv == (2, 3) == brute_T(sample19, "ba")
    lo, hi = brute_extreme_strings(sample19, 10)
    assert new.lcp_min == lcp(lo[2], "ab")
    assert new.lcp_max == lcp("ab", hi[3])


def test_case2_to_empty_window(sample19, sample19_lcp):
    # window "h" at [17, 17]: no neighbour shares a prefix, so the window empties
    st = MsState(1, 1, Interval(17, 17), 1, 1)
    new = case2_shrink(sample19, sample19_lcp, st)
    assert (new.start, new.end, new.iv, new.lcp_min, new.lcp_max) == (2, 1, (1, 19), 0, 0)


def test_case2_precondition(sample19, sample19_lcp):
    with pytest.raises(ValueError):
        case2_shrink(sample19, sample19_lcp, MsState(1, 0, Interval(1, 19), 0, 0))


INSTANCES = generate_instances(seed=5, count=90, max_path=80)


@pytest.mark.parametrize("inst", INSTANCES, ids=lambda i: f"{i.provenance}-{i.seed}")
def test_state_invariants(inst):
    A = inst.automaton
    L = build_lcp_array(A)
    lo, hi = brute_extreme_strings(A, 45)

    for pattern in inst.patterns:
        def check(st):
            window = pattern[st.start - 1:st.end]
            assert st.lcp_min <= st.length and st.lcp_max <= st.length
            if not window:
                assert (st.iv, st.lcp_min, st.lcp_max) == (A.full, 0, 0)
                return
            assert st.iv == brute_T(A, window)
            assert st.lcp_min == lcp(lo[st.iv.l], window[::-1])
            assert st.lcp_max == lcp(window[::-1], hi[st.iv.r])

        got, steps = wdfa_matching_statistics(A, L, pattern, return_steps=True, observer=check)
        assert got == brute_matching_statistics(A, pattern)
        assert steps <= 2 * len(pattern)


def test_reversal_identity():
    rng = random.Random(21)
    for _ in range(30):
        sigma = "abc"[: rng.randint(1, 3)]
        text = "".join(rng.choice(sigma) for _ in range(rng.randint(1, 60)))
        A = gen_path_automaton(text, sigma)
        L = build_lcp_array(A)
        idx = build_index(text[::-1] + "$")
        pattern = "".join(rng.choice(sigma) for _ in range(rng.randint(1, 30)))
        graph = wdfa_matching_statistics(A, L, pattern)
        string = string_matching_statistics(idx, pattern[::-1])
        m = len(pattern)
        assert [s.length for s in graph] == [string[m - i].length for i in range(1, m + 1)]
