"""Matching statistics of a pattern against a Wheeler DFA.

The pattern is scanned left to right with forward search.  The current
window ``pattern[start..end]`` is kept together with its state interval
``[r, s]`` and two common-prefix lengths:

* ``lcp_min`` = lcp(min_r, window reversed)
* ``lcp_max`` = lcp(window reversed, max_s)

When a forward step fails, the LCP array of the automaton tells how far the
window must shrink before it reaches strictly more states, and where the
wider interval ends.  Each step costs O(log n) with the sparse-table RMQ.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

from .automaton import Interval, WheelerDFA, forward_step, max_predecessor, min_predecessor
from .string_index import MatchingStatistic
from .wlcp import INF, WheelerLcpArray


@dataclass
class MsState:
    """Scan state. The window is ``pattern[start..end]`` (1-based, empty when start > end)."""

    start: int
    end: int
    iv: Interval
    lcp_min: int
    lcp_max: int
    steps: int = 0

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def _lcp_at(L: WheelerLcpArray, k: int):
    # positions 1 and 2n + 1 border the array; nothing Σ-prefixed lies beyond
    if 2 <= k <= 2 * L.n:
        return L[k]
    return 0


def _range_min(L: WheelerLcpArray, i: int, j: int):
    if i > j:
        return INF
    return L.rmq.range_min(i, j)


def case1_update(A: WheelerDFA, L: WheelerLcpArray, st: MsState, c: str,
                 new_iv: Interval) -> MsState:
    """Extend the window by ``c`` given its non-empty forward image ``new_iv``."""
    r, s = st.iv
    m = st.length

    k = min_predecessor(A, new_iv.l)
    if k > r:
        lcp_min = m
    else:
        lcp_min = min(_range_min(L, 2 * k, 2 * r - 1), st.lcp_min)

    k = max_predecessor(A, new_iv.r)
    if k < s:
        lcp_max = m
    else:
        lcp_max = min(_range_min(L, 2 * s + 1, 2 * k), st.lcp_max)

    return MsState(st.start, st.end + 1, new_iv, 1 + lcp_min, 1 + lcp_max, st.steps)


def shrink_length(L: WheelerLcpArray, st: MsState) -> int:
    """Length of the longest window suffix whose interval strictly contains ``st.iv``."""
    r, s = st.iv
    left = min(_lcp_at(L, 2 * r - 1), st.lcp_min)
    right = min(st.lcp_max, _lcp_at(L, 2 * s + 1))
    return max(left, right)


def case2_shrink(A: WheelerDFA, L: WheelerLcpArray, st: MsState) -> MsState:
    """Shrink the window after a failed forward step."""
    r, s = st.iv
    if st.iv == A.full:
        raise ValueError("cannot shrink the window of the whole state set")
    length = shrink_length(L, st)

    if length > st.lcp_min:
        r2 = r
    else:
        p = L.rmq.prev_smaller(2 * r, length, lo=2)
        r2 = 1 if p is None else (p + 1) // 2
    if length > st.lcp_max:
        s2 = s
    else:
        q = L.rmq.next_smaller(2 * s, length, hi=2 * A.n)
        s2 = A.n if q is None else q // 2

    if r2 == r:
        lcp_min = min(st.lcp_min, length)
    else:
        lcp_min = min(L[2 * r2], length)
    if s2 == s:
        lcp_max = min(st.lcp_max, length)
    else:
        lcp_max = min(L[2 * s2], length)

    return MsState(st.end - length + 1, st.end, Interval(r2, s2),
                   lcp_min, lcp_max, st.steps)


def wdfa_matching_statistics(A: WheelerDFA, L: WheelerLcpArray, pattern: str, *,
                             return_steps: bool = False,
                             observer: Optional[Callable[[MsState], None]] = None):
    """Matching statistics of ``pattern`` over ``A``.

    Entry ``i`` (1-based) holds the length of the longest suffix of
    ``pattern[1..i]`` readable on ``A`` and the state interval where it can
    be read; a zero length comes with the whole interval ``[1, n]``.

    Parameters
    ----------
    A : WheelerDFA
        Automaton whose states are in Wheeler order.
    L : WheelerLcpArray
        LCP array built from ``A``.
    pattern : str
    return_steps : bool
        Also return the number of forward steps taken (at most ``2m``).
    observer : callable, optional
        Called with the scan state after every iteration.
    """
    full = A.full
    st = MsState(1, 0, full, 0, 0)
    out = []
    i = 1
    while i <= len(pattern):
        c = pattern[i - 1]
        new_iv = forward_step(A, st.iv, c)
        st.steps += 1
        if new_iv is not None:
            st = case1_update(A, L, st, c, new_iv)
            out.append(MatchingStatistic(i, st.length, new_iv.l, new_iv.r))
            i += 1
        elif st.iv == full:
            st = replace(st, start=i + 1, end=i)
            out.append(MatchingStatistic(i, 0, 1, A.n))
            i += 1
        else:
            st = case2_shrink(A, L, st)
        if observer is not None:
            observer(st)
    return (out, st.steps) if return_steps else out
