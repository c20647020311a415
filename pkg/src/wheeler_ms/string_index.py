"""Suffix array / BWT index and the classical matching-statistics algorithm.

Positions and intervals are 1-based, as in the usual textbook presentation
of ``mississippi$``.  The terminator ``$`` sorts before every other
character regardless of its code point.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .automaton import Interval
from .rmq import RangeMinQuery

TERMINATOR = "$"


class MatchingStatistic(NamedTuple):
    """Match length and interval reported for one pattern position."""

    pos: int
    length: int
    l: int
    r: int


@dataclass(frozen=True)
class StringIndex:
    text: str
    sa: tuple
    bwt: str
    lcp: tuple  # lcp[k - 2] is LCP[k] for k in 2..n
    counts: dict  # counts[c] = number of characters smaller than c
    _occ: dict = field(repr=False)
    _rmq: Optional[RangeMinQuery] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.text)

    @property
    def full(self) -> Interval:
        return Interval(1, self.n)

    def lcp_at(self, k: int) -> int:
        """LCP[k], reading the out-of-range positions 1 and n + 1 as 0."""
        if 2 <= k <= self.n:
            return self.lcp[k - 2]
        return 0

    def rank(self, c: str, i: int) -> int:
        """Occurrences of ``c`` in ``bwt[1..i]``."""
        occ = self._occ.get(c)
        return 0 if occ is None else bisect_right(occ, i)


def _sort_key(text):
    # '$' must sort first; remap it below every code point we accept
    return text.replace(TERMINATOR, "\x00")


def build_index(text: str) -> StringIndex:
    """Build SA, BWT, LCP and count tables for a ``$``-terminated text."""
    if not text or text[-1] != TERMINATOR:
        raise ValueError("text must end with the terminator '$'")
    if text.count(TERMINATOR) != 1:
        raise ValueError("terminator '$' must occur exactly once")
    if "\x00" in text:
        raise ValueError("NUL characters are not supported")
    n = len(text)
    key = _sort_key(text)
    sa0 = sorted(range(n), key=lambda i: key[i:])

    # Kasai et al.
    rank = [0] * n
    for k, p in enumerate(sa0):
        rank[p] = k
    lcp = [0] * n
    h = 0
    for p in range(n):
        if rank[p] > 0:
            q = sa0[rank[p] - 1]
            while p + h < n and q + h < n and text[p + h] == text[q + h]:
                h += 1
            lcp[rank[p]] = h
            if h:
                h -= 1
        else:
            h = 0

    bwt = "".join(text[p - 1] for p in sa0)  # text[-1] wraps to '$'
    occ: dict[str, list[int]] = {}
    for i, ch in enumerate(bwt, start=1):
        occ.setdefault(ch, []).append(i)
    counts = {}
    total = 0
    for ch in sorted(occ, key=lambda ch: _sort_key(ch)):
        counts[ch] = total
        total += len(occ[ch])

    lcp_tail = tuple(lcp[1:])
    return StringIndex(
        text=text,
        sa=tuple(p + 1 for p in sa0),
        bwt=bwt,
        lcp=lcp_tail,
        counts=counts,
        _occ=occ,
        _rmq=RangeMinQuery(lcp_tail, origin=2) if lcp_tail else None,
    )


def backward_step(idx: StringIndex, iv: Interval, c: str) -> Optional[Interval]:
    """Suffix interval of ``c`` followed by the prefix described by ``iv``."""
    base = idx.counts.get(c)
    if base is None:
        return None
    l = base + idx.rank(c, iv[0] - 1) + 1
    r = base + idx.rank(c, iv[1])
    return Interval(l, r) if l <= r else None


def shrink_interval(idx: StringIndex, iv: Interval,
                    target_len: Optional[int] = None) -> tuple[Interval, int]:
    """Widen ``iv`` to the longest shared prefix that more suffixes start with.

    Returns the new interval and the new prefix length, which defaults to
    ``max(LCP[l], LCP[r + 1])``.
    """
    l, r = iv
    if target_len is None:
        length = max(idx.lcp_at(l), idx.lcp_at(r + 1))
    else:
        length = target_len
    if length == 0 or idx._rmq is None:
        return idx.full, 0
    k = idx._rmq.prev_smaller(l + 1, length, lo=2)
    new_l = 1 if k is None else k
    k = idx._rmq.next_smaller(r, length, hi=idx.n)
    new_r = idx.n if k is None else k - 1
    return Interval(new_l, new_r), length


def string_matching_statistics(idx: StringIndex, pattern: str, *, return_steps=False):
    """Matching statistics of ``pattern`` against the indexed text.

    For each position ``i`` the entry holds the length of the longest prefix
    of ``pattern[i:]`` occurring in the text and its suffix-array interval.
    The pattern is scanned right to left; at most ``2 * len(pattern)``
    backward steps are taken.  With ``return_steps=True`` the step count is
    returned as a second value.
    """
    m = len(pattern)
    full = idx.full
    out: list[Optional[MatchingStatistic]] = [None] * m
    iv, length, steps = full, 0, 0
    i = m
    while i >= 1:
        steps += 1
        nxt = backward_step(idx, iv, pattern[i - 1])
        if nxt is not None:
            iv, length = nxt, length + 1
            out[i - 1] = MatchingStatistic(i, length, iv.l, iv.r)
            i -= 1
        elif iv == full:
            out[i - 1] = MatchingStatistic(i, 0, 1, idx.n)
            i -= 1
        else:
            iv, length = shrink_interval(idx, iv)
    return (out, steps) if return_steps else out
