"""Sparse-table range minimum with bounded previous/next-smaller searches.

Values may include ``math.inf``; it compares greater than every finite
length.  Indices are shifted by a configurable ``origin`` so that callers can
keep the natural numbering of their arrays (the string LCP array starts at 2,
for instance).
"""
from __future__ import annotations

from typing import Optional, Sequence


class RangeMinQuery:
    """Constant-time range minimum over an immutable array.

    Complexity: O(N log N) preprocessing, O(1) :meth:`range_min`,
    O(log N) :meth:`prev_smaller` / :meth:`next_smaller`.

    :param values: non-empty sequence of totally ordered values
    :param origin: index of ``values[0]`` in the caller's numbering
    """

    def __init__(self, values: Sequence, origin: int = 1):
        if len(values) == 0:
            raise ValueError("range minimum structure needs a non-empty array")
        self.origin = origin
        self.base = tuple(values)
        size = len(self.base)
        # table[d][i] = min(base[i : i + 2**d])
        self.table = [list(self.base)]
        span = 1
        while 2 * span <= size:
            prev = self.table[-1]
            self.table.append([min(prev[i], prev[i + span])
                               for i in range(size - 2 * span + 1)])
            span *= 2

    def __len__(self):
        return len(self.base)

    @property
    def end(self) -> int:
        return self.origin + len(self.base) - 1

    def __getitem__(self, k: int):
        self._check(k, k)
        return self.base[k - self.origin]

    def _check(self, i, j):
        if not (self.origin <= i <= j <= self.end):
            raise IndexError(f"range [{i}, {j}] outside [{self.origin}, {self.end}]")

    def range_min(self, i: int, j: int):
        """Minimum of the inclusive range ``[i, j]``."""
        self._check(i, j)
        a, b = i - self.origin, j - self.origin
        d = (b - a + 1).bit_length() - 1
        row = self.table[d]
        return min(row[a], row[b - (1 << d) + 1])

    def prev_smaller(self, t: int, c, lo: Optional[int] = None) -> Optional[int]:
        """Largest ``k`` in ``[lo, t - 1]`` with ``values[k] < c``, or None."""
        lo = self.origin if lo is None else lo
        hi = min(t - 1, self.end)
        if lo > hi or self.range_min(lo, hi) >= c:
            return None
        # halve towards the right while the right half still holds a hit
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.range_min(mid, hi) < c:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def next_smaller(self, t: int, c, hi: Optional[int] = None) -> Optional[int]:
        """Smallest ``k`` in ``[t + 1, hi]`` with ``values[k] < c``, or None."""
        hi = self.end if hi is None else hi
        lo = max(t + 1, self.origin)
        if lo > hi or self.range_min(lo, hi) >= c:
            return None
        while lo < hi:
            mid = (lo + hi) // 2
            if self.range_min(lo, mid) < c:
                hi = mid
            else:
                lo = mid + 1
        return lo


def build_rmq(values: Sequence, origin: int = 1) -> RangeMinQuery:
    return RangeMinQuery(values, origin)
